#pragma once

#include <array>
#include <vector>

#include "poincare/spin.hpp"
#include "poincare/vectors.hpp"

namespace testing_support {

using poincare::Spin;

/// All (2A,2B,2C,2D) with entries in [0, bound].
inline std::vector<std::array<int, 4>> quadruples(int bound) {
  std::vector<std::array<int, 4>> out;
  for (int a = 0; a <= bound; ++a)
    for (int b = 0; b <= bound; ++b)
      for (int c = 0; c <= bound; ++c)
        for (int d = 0; d <= bound; ++d) out.push_back({a, b, c, d});
  return out;
}

inline std::array<Spin, 4> spins(const std::array<int, 4>& q) {
  return {Spin::from_twice(q[0]), Spin::from_twice(q[1]), Spin::from_twice(q[2]), Spin::from_twice(q[3])};
}

inline bool admissible(const std::array<int, 4>& q) {
  const auto s = spins(q);
  return poincare::classify_case(s[0], s[1], s[2], s[3]) != poincare::CaseTag::NoSolution;
}

inline std::vector<std::array<int, 4>> admissible_quadruples(int bound) {
  std::vector<std::array<int, 4>> out;
  for (const auto& q : quadruples(bound))
    if (admissible(q)) out.push_back(q);
  return out;
}

inline std::string label(const std::array<int, 4>& q) {
  return std::to_string(q[0]) + "," + std::to_string(q[1]) + "," + std::to_string(q[2]) + "," + std::to_string(q[3]);
}

}  // namespace testing_support
