#include <gtest/gtest.h>

#include "helpers.hpp"
#include "poincare/generators.hpp"
#include "poincare/verifier.hpp"

using namespace poincare;

TEST(Ladder, Coefficients) {
  const Spin half = Spin::from_twice(1), one = Spin::from_twice(2);
  EXPECT_EQ(ladder_coeff_r(half, -kHalf), RadicalScalar(1));
  EXPECT_TRUE(ladder_coeff_r(half, kHalf).is_zero());
  EXPECT_EQ(ladder_coeff_r(one, HalfInt::from_int(0)), RadicalScalar::radical(2));
  EXPECT_EQ(ladder_coeff_s(one, HalfInt::from_int(1)), RadicalScalar::radical(2));
  EXPECT_TRUE(ladder_coeff_s(one, HalfInt::from_int(-1)).is_zero());
  EXPECT_TRUE(ladder_coeff_r(one, kHalf).is_zero());
}

TEST(RotationRep, SpinHalfIsPauliOverTwo) {
  const RotationRep rep = rotation_rep(Spin::from_twice(1));
  EXPECT_EQ(rep.z(0, 0), RadicalScalar(Rational(1, 2)));
  EXPECT_EQ(rep.z(1, 1), RadicalScalar(Rational(-1, 2)));
  EXPECT_EQ(rep.plus(0, 1), RadicalScalar(1));
  EXPECT_EQ(rep.minus(1, 0), RadicalScalar(1));
  EXPECT_EQ(rep.plus.nonzero_count(), 1u);
}

TEST(RotationRep, LadderAlgebra) {
  for (int twice = 0; twice <= 6; ++twice) {
    const Spin a = Spin::from_twice(twice);
    const RotationRep rep = rotation_rep(a);
    EXPECT_EQ(commutator(rep.z, rep.plus), rep.plus);
    EXPECT_EQ(commutator(rep.z, rep.minus), -rep.minus);
    EXPECT_EQ(commutator(rep.plus, rep.minus), RadicalScalar(2) * rep.z);
    EXPECT_EQ(rep.plus.conj_transpose(), rep.minus);
  }
}

TEST(IrrepGenerators, LorentzAlgebraForAllSmallPairs) {
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; b <= 4; ++b) {
      const SpinPair pair{Spin::from_twice(a), Spin::from_twice(b)};
      const GeneratorSet g = irrep_generators(pair);
      EXPECT_EQ(g.dimension(), pair.dimension());
      const auto reports = check_lorentz(g);
      EXPECT_EQ(reports.size(), 15u);
      EXPECT_TRUE(all_hold(reports)) << pair.to_string();
    }
  }
}

TEST(IrrepGenerators, CasimirsOfBothSpins) {
  // A² = A(A+1), B² = B(B+1) with A_k = (J_k + iK_k)/2, B_k = (J_k - iK_k)/2.
  const RadicalScalar i = RadicalScalar::imaginary_unit();
  const RadicalScalar half(Rational(1, 2));
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; b <= 4; ++b) {
      const SpinPair pair{Spin::from_twice(a), Spin::from_twice(b)};
      const GeneratorSet g = irrep_generators(pair);
      DenseMatrix ca(g.dimension(), g.dimension()), cb(g.dimension(), g.dimension());
      for (std::size_t k = 0; k < 3; ++k) {
        const DenseMatrix ak = half * (g.J[k] + i * g.K[k]);
        const DenseMatrix bk = half * (g.J[k] - i * g.K[k]);
        ca += ak * ak;
        cb += bk * bk;
      }
      const Rational A(a, 2), B(b, 2);
      EXPECT_EQ(ca, RadicalScalar(Rational(A * (A + 1))) * DenseMatrix::identity(g.dimension()));
      EXPECT_EQ(cb, RadicalScalar(Rational(B * (B + 1))) * DenseMatrix::identity(g.dimension()));
    }
  }
}

TEST(IrrepGenerators, HermitianRotationsAntiHermitianBoosts) {
  const GeneratorSet g = irrep_generators({Spin::from_twice(2), Spin::from_twice(1)});
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_EQ(g.J[k].conj_transpose(), g.J[k]);
    EXPECT_EQ(g.K[k].conj_transpose(), -g.K[k]);
  }
}

TEST(IrrepGenerators, ScalarIsZero) {
  const GeneratorSet g = irrep_generators({Spin::from_twice(0), Spin::from_twice(0)});
  EXPECT_EQ(g.dimension(), 1u);
  for (std::size_t k = 0; k < 3; ++k) EXPECT_TRUE(g.J[k].is_zero() && g.K[k].is_zero());
}

TEST(DirectSum, BlockDiagonal) {
  const SpinPair first{Spin::from_twice(1), Spin::from_twice(1)}, second{Spin::from_twice(0), Spin::from_twice(0)};
  const GeneratorSet g = direct_sum(first, second);
  EXPECT_EQ(g.dimension(), 5u);
  const GeneratorSet g1 = irrep_generators(first);
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_EQ(g.J[k].block(0, 0, 4, 4), g1.J[k]);
    EXPECT_TRUE(g.K[k].block(0, 4, 4, 1).is_zero());
  }
  EXPECT_TRUE(all_hold(check_lorentz(g)));
}
