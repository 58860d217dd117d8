#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace poincare {

/// Exact rational number. GMP keeps the value in lowest terms with a
/// positive denominator after every arithmetic operation.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Builds num/den in canonical form. Throws std::invalid_argument on den == 0.
Rational make_rational(const BigInt& num, const BigInt& den = 1);

/// Splits n into outside² · core with core squarefree. n = 0 gives (0, 1).
std::pair<BigInt, BigInt> normalize_radical(const BigInt& n);

/// A finite sum  Σ_d (re_d + i·im_d)·√d  over squarefree radicands d ≥ 1.
///
/// Terms are kept sorted by radicand with no all-zero term, so two values are
/// equal exactly when their term lists are equal. Distinct squarefree
/// radicals are linearly independent over Q(i), which makes is_zero() sound.
class RadicalScalar {
 public:
  struct Term {
    std::uint64_t radicand = 1;
    Rational re;
    Rational im;

    bool operator==(const Term&) const = default;
  };

  RadicalScalar() = default;
  RadicalScalar(long value);  // NOLINT(google-explicit-constructor)
  RadicalScalar(const Rational& value);  // NOLINT(google-explicit-constructor)

  static RadicalScalar complex(const Rational& re, const Rational& im);
  static RadicalScalar imaginary_unit();
  /// coefficient · √radicand for an arbitrary nonnegative radicand.
  static RadicalScalar radical(const BigInt& radicand, const Rational& coefficient = 1);
  /// Assembles a value from raw terms; radicands must be squarefree.
  static RadicalScalar from_terms(std::vector<Term> terms);

  std::span<const Term> terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True for a single term whose coefficient is real or purely imaginary;
  /// such values are the only admissible divisors.
  bool is_monomial() const;

  RadicalScalar conj() const;
  RadicalScalar times_i() const;
  std::complex<double> to_complex() const;

  /// Division by a monomial (see is_monomial). Throws std::domain_error for
  /// zero or multi-term divisors.
  RadicalScalar divided_by(const RadicalScalar& divisor) const;

  RadicalScalar& operator+=(const RadicalScalar& rhs);
  RadicalScalar& operator-=(const RadicalScalar& rhs);
  RadicalScalar& operator*=(const RadicalScalar& rhs);
  RadicalScalar& operator/=(const Rational& rhs);

  friend RadicalScalar operator+(RadicalScalar lhs, const RadicalScalar& rhs) { return lhs += rhs; }
  friend RadicalScalar operator-(RadicalScalar lhs, const RadicalScalar& rhs) { return lhs -= rhs; }
  friend RadicalScalar operator*(const RadicalScalar& lhs, const RadicalScalar& rhs);
  friend RadicalScalar operator/(RadicalScalar lhs, const Rational& rhs) { return lhs /= rhs; }
  RadicalScalar operator-() const;

  bool operator==(const RadicalScalar&) const = default;

  /// Human-readable form such as "(1/2)√2", "-i√3" or "1 + (2/3)i√5".
  std::string to_string() const;

 private:
  void push_term(std::uint64_t radicand, Rational re, Rational im);
  std::vector<Term> terms_;
};

/// Principal square root of a nonnegative rational p/q, returned as
/// (1/q)·√(p·q) after square extraction. Throws std::domain_error if x < 0.
RadicalScalar sqrt_of_rational(const Rational& x);

inline bool is_zero(const RadicalScalar& a) { return a.is_zero(); }
inline std::complex<double> to_float(const RadicalScalar& a) { return a.to_complex(); }

/// Parses a literal such as "1", "-1/2", "i", "3/4*sqrt(2)", "1 + 2*i*sqrt(3)",
/// and the to_string() forms "(1/2)√2", "-i√3", "(1/2 + 3/2i)√2".
/// Throws std::invalid_argument on malformed input.
RadicalScalar parse_radical(const std::string& text);

}  // namespace poincare
