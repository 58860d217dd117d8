#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "poincare/radical_scalar.hpp"

namespace poincare {

/// Exact half-integer stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }
  static constexpr HalfInt from_int(int value) { return HalfInt(2 * value); }

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  Rational value() const { return Rational(twice_, 2); }

  constexpr HalfInt operator-() const { return HalfInt(-twice_); }
  constexpr HalfInt operator+(HalfInt rhs) const { return HalfInt(twice_ + rhs.twice_); }
  constexpr HalfInt operator-(HalfInt rhs) const { return HalfInt(twice_ - rhs.twice_); }
  constexpr auto operator<=>(const HalfInt&) const = default;

  std::string to_string() const;

 private:
  constexpr explicit HalfInt(int twice) : twice_(twice) {}
  int twice_ = 0;
};

inline constexpr HalfInt kHalf = HalfInt::from_twice(1);
inline constexpr HalfInt kOne = HalfInt::from_twice(2);

/// Nonnegative half-integer spin.
class Spin {
 public:
  constexpr Spin() = default;
  /// Throws std::invalid_argument for negative input.
  static Spin from_twice(int twice);

  constexpr int twice() const { return twice_; }
  constexpr std::size_t multiplicity() const { return static_cast<std::size_t>(twice_) + 1; }
  constexpr HalfInt as_half_int() const { return HalfInt::from_twice(twice_); }
  Rational value() const { return Rational(twice_, 2); }

  /// True when -spin <= m <= spin and spin - m is an integer.
  constexpr bool contains(HalfInt m) const {
    return m.twice() <= twice_ && m.twice() >= -twice_ && (twice_ - m.twice()) % 2 == 0;
  }
  /// Magnetic labels from +spin down to -spin.
  std::vector<HalfInt> labels() const;

  constexpr auto operator<=>(const Spin&) const = default;
  std::string to_string() const { return as_half_int().to_string(); }

 private:
  constexpr explicit Spin(int twice) : twice_(twice) {}
  int twice_ = 0;
};

/// Spin label (A,B) of an irreducible Lorentz representation.
struct SpinPair {
  Spin left;   // A
  Spin right;  // B

  std::size_t dimension() const { return left.multiplicity() * right.multiplicity(); }
  bool operator==(const SpinPair&) const = default;
  std::string to_string() const { return "(" + left.to_string() + "," + right.to_string() + ")"; }
};

/// Position of (a,b) in the (2A+1)(2B+1) basis: a descends from A (outer),
/// b descends from B (inner). Throws std::out_of_range for labels outside the
/// representation.
std::size_t flatten_index(const SpinPair& pair, HalfInt a, HalfInt b);

}  // namespace poincare
