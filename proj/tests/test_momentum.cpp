#include <gtest/gtest.h>

#include "helpers.hpp"
#include "poincare/momentum.hpp"
#include "poincare/verifier.hpp"

using namespace poincare;
using testing_support::admissible_quadruples;
using testing_support::label;
using testing_support::spins;

namespace {
Spin S(int twice) { return Spin::from_twice(twice); }
}  // namespace

TEST(Momentum, Keep12IsStrictlyUpperBlockTriangular) {
  const VectorSet v = closed_form_vectors(S(1), S(1), S(0), S(0), {1, 1});
  const VectorSet p = momentum_from_vectors(v, BlockChoice::Keep12);
  EXPECT_EQ(p.kind, VectorKind::Momentum);
  for (std::size_t mu = 0; mu < 4; ++mu) {
    EXPECT_TRUE(p.block21(mu).is_zero());
    EXPECT_EQ(p.block12(mu), v.block12(mu));
  }
  EXPECT_TRUE(all_hold(check_translations(p)));
  EXPECT_TRUE(p.params.t21.is_zero());
}

TEST(Momentum, ZeroInZeroOut) {
  const VectorSet zero = zero_vector_set({S(1), S(1)}, {S(0), S(0)});
  const VectorSet p = momentum_from_vectors(zero, BlockChoice::Keep21);
  for (const auto& m : p.V) EXPECT_TRUE(m.is_zero());
}

TEST(Momentum, Keep21MatchesKeep12OfSwappedRepresentation) {
  const VectorSet v = closed_form_vectors(S(2), S(1), S(1), S(2), {2, 5});
  const VectorSet keep21 = momentum_from_vectors(v, BlockChoice::Keep21);
  const VectorSet keep12_swapped = momentum_from_vectors(swap_blocks(v), BlockChoice::Keep12);
  EXPECT_EQ(swap_blocks(keep21).V, keep12_swapped.V);
}

TEST(Momentum, FullPoincareAlgebraForAllAdmissibleSpins) {
  for (const auto& q : admissible_quadruples(4)) {
    const auto s = spins(q);
    const GeneratorSet g = direct_sum(SpinPair{s[0], s[1]}, SpinPair{s[2], s[3]});
    const VectorSet v = closed_form_vectors(s[0], s[1], s[2], s[3], {1, 1});
    for (BlockChoice choice : {BlockChoice::Keep12, BlockChoice::Keep21}) {
      const auto reports = check_all(g, momentum_from_vectors(v, choice));
      EXPECT_EQ(reports.size(), 45u);
      EXPECT_TRUE(all_hold(reports)) << label(q) << " " << to_string(choice);
    }
  }
}

TEST(Momentum, BothBlocksDoNotCommute) {
  const VectorSet v = closed_form_vectors(S(1), S(1), S(0), S(0), {1, 1});
  EXPECT_FALSE(all_hold(check_translations(v)));
}

// [P⁺,P⁻]₁₁ = -((Ab + aB)/√(AB)) t12 t21 on the diagonal, zero elsewhere.
TEST(Witness, MatchesClosedFormForEveryCase1Quadruple) {
  const RadicalScalar t12 = RadicalScalar::radical(2), t21 = RadicalScalar::complex(1, 1);
  int checked = 0;
  for (const auto& q : admissible_quadruples(4)) {
    const auto s = spins(q);
    if (classify_case(s[0], s[1], s[2], s[3]) != CaseTag::Case1) continue;
    ++checked;
    const VectorSet v = closed_form_vectors(s[0], s[1], s[2], s[3], {t12, t21});
    const DenseMatrix w = noncommutativity_witness(v);
    const Rational A = s[0].value(), B = s[1].value();
    const RadicalScalar root_ab = sqrt_of_rational(A * B);
    for (HalfInt a : s[0].labels()) {
      for (HalfInt b : s[1].labels()) {
        const std::size_t i = flatten_index(v.upper, a, b);
        const Rational num = A * b.value() + a.value() * B;
        const RadicalScalar expected = -RadicalScalar(num).divided_by(root_ab) * t12 * t21;
        EXPECT_EQ(w(i, i), expected) << label(q);
        for (std::size_t j = 0; j < w.cols(); ++j) {
          if (j != i) EXPECT_TRUE(w(i, j).is_zero());
        }
      }
    }
    // Top corner: -2√(AB) t12 t21.
    EXPECT_EQ(w(0, 0), RadicalScalar(-2) * root_ab * t12 * t21);
  }
  EXPECT_GT(checked, 0);
}

TEST(Witness, VanishesWithOneBlock) {
  const VectorSet v = closed_form_vectors(S(1), S(1), S(0), S(0), {0, 1});
  EXPECT_TRUE(noncommutativity_witness(v).is_zero());
}
