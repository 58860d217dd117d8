#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "poincare/radical_scalar.hpp"

using namespace poincare;

TEST(NormalizeRadical, MatchesTrialDivision) {
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    const auto [outside, core] = normalize_radical(BigInt(static_cast<unsigned long>(n)));
    const auto [o2, c2] = oracle::split_square(n);
    EXPECT_EQ(outside, BigInt(static_cast<unsigned long>(o2))) << n;
    EXPECT_EQ(core, BigInt(static_cast<unsigned long>(c2))) << n;
  }
}

TEST(NormalizeRadical, SpotValues) {
  EXPECT_EQ(normalize_radical(360), std::make_pair(BigInt(6), BigInt(10)));
  EXPECT_EQ(normalize_radical(0), std::make_pair(BigInt(0), BigInt(1)));
  EXPECT_EQ(normalize_radical(1), std::make_pair(BigInt(1), BigInt(1)));
}

TEST(RadicalScalar, ProductsCombineRadicands) {
  const auto r2 = RadicalScalar::radical(2), r3 = RadicalScalar::radical(3), r6 = RadicalScalar::radical(6);
  EXPECT_EQ(r2 * r2, RadicalScalar(2));
  EXPECT_EQ(r6 * r3, RadicalScalar::radical(2, 3));
  EXPECT_EQ(r2 * r3, r6);
  EXPECT_EQ(RadicalScalar::radical(8), RadicalScalar::radical(2, 2));
  EXPECT_TRUE((r2 - r2).is_zero());
  EXPECT_FALSE((r2 - r3).is_zero());
}

TEST(RadicalScalar, ImaginaryUnit) {
  const auto i = RadicalScalar::imaginary_unit();
  EXPECT_EQ(i * i, RadicalScalar(-1));
  EXPECT_EQ(RadicalScalar::radical(3).times_i(), i * RadicalScalar::radical(3));
  EXPECT_EQ((i * RadicalScalar::radical(2)).conj(), -(i * RadicalScalar::radical(2)));
}

TEST(RadicalScalar, SqrtOfRational) {
  EXPECT_EQ(sqrt_of_rational(Rational(1, 2)), RadicalScalar::radical(2, Rational(1, 2)));
  EXPECT_EQ(sqrt_of_rational(Rational(9, 4)), RadicalScalar(Rational(3, 2)));
  EXPECT_TRUE(sqrt_of_rational(0).is_zero());
  EXPECT_THROW(sqrt_of_rational(-1), std::domain_error);
}

TEST(RadicalScalar, Division) {
  const auto x = RadicalScalar::radical(6) + RadicalScalar(1);
  EXPECT_EQ(x.divided_by(RadicalScalar::radical(2)), RadicalScalar::radical(3) + RadicalScalar::radical(2, Rational(1, 2)));
  EXPECT_EQ(RadicalScalar(1).divided_by(RadicalScalar::imaginary_unit()), RadicalScalar::complex(0, -1));
  EXPECT_THROW(RadicalScalar(1).divided_by(x), std::domain_error);
  EXPECT_THROW(RadicalScalar(1).divided_by(RadicalScalar{}), std::domain_error);
}

TEST(RadicalScalar, FromTermsRejectsSquareRadicand) {
  EXPECT_THROW(RadicalScalar::from_terms({{4, 1, 0}}), std::invalid_argument);
}

TEST(RadicalScalar, TextForms) {
  EXPECT_EQ(RadicalScalar::radical(2, Rational(1, 2)).to_string(), "(1/2)√2");
  EXPECT_EQ(RadicalScalar(0).to_string(), "0");
  for (const char* text : {"1/2*sqrt(2)", "3", "-i*sqrt(3)", "1 + sqrt(2)", "2/3*i*sqrt(6) - 1/5"}) {
    const auto x = parse_radical(text);
    EXPECT_EQ(parse_radical(x.to_string()), x) << text << " -> " << x.to_string();
  }
  EXPECT_EQ(parse_radical("sqrt(8)"), RadicalScalar::radical(2, 2));
  EXPECT_THROW(parse_radical("sqrt("), std::invalid_argument);
  EXPECT_THROW(parse_radical("1/0"), std::invalid_argument);
}

TEST(RadicalScalar, FloatImage) {
  EXPECT_EQ(to_float(RadicalScalar::radical(2)).real(), 1.4142135623730951);
  const auto z = to_float(RadicalScalar::complex(1, 2) * RadicalScalar::radical(3));
  EXPECT_NEAR(z.real(), std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(z.imag(), 2 * std::sqrt(3.0), 1e-15);
}

namespace {

RadicalScalar random_scalar(std::mt19937& rng) {
  static const std::array<long, 6> radicands = {1, 2, 3, 5, 6, 7};
  std::uniform_int_distribution<int> count(0, 3), num(-6, 6), den(1, 4), pick(0, 5);
  RadicalScalar out;
  for (int k = count(rng); k > 0; --k) {
    out += RadicalScalar::complex(Rational(num(rng), den(rng)), Rational(num(rng), den(rng))) *
           RadicalScalar::radical(radicands[pick(rng)]);
  }
  return out;
}

}  // namespace

TEST(RadicalScalar, RingAxiomsRandomized) {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 400; ++trial) {
    const auto a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a * RadicalScalar(1), a);
    EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
    const auto fa = to_float(a), fb = to_float(b);
    EXPECT_LT(std::abs(to_float(a * b) - fa * fb), 1e-9);
  }
}
