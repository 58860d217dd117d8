#include "poincare/spin.hpp"

#include <stdexcept>

namespace poincare {

std::string HalfInt::to_string() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

Spin Spin::from_twice(int twice) {
  if (twice < 0) throw std::invalid_argument("spin must be nonnegative, got 2s = " + std::to_string(twice));
  return Spin(twice);
}

std::vector<HalfInt> Spin::labels() const {
  std::vector<HalfInt> out;
  out.reserve(multiplicity());
  for (int t = twice_; t >= -twice_; t -= 2) out.push_back(HalfInt::from_twice(t));
  return out;
}

std::size_t flatten_index(const SpinPair& pair, HalfInt a, HalfInt b) {
  if (!pair.left.contains(a) || !pair.right.contains(b)) {
    throw std::out_of_range("label (" + a.to_string() + "," + b.to_string() + ") outside " +
                            pair.to_string());
  }
  const auto outer = static_cast<std::size_t>((pair.left.twice() - a.twice()) / 2);
  const auto inner = static_cast<std::size_t>((pair.right.twice() - b.twice()) / 2);
  return outer * pair.right.multiplicity() + inner;
}

}  // namespace poincare
