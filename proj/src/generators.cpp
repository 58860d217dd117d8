#include "poincare/generators.hpp"

namespace poincare {

namespace {

// Kronecker product with an identity on one side: left ⊗ 1 or 1 ⊗ right.
DenseMatrix kron_left(const DenseMatrix& m, std::size_t inner) {
  DenseMatrix out(m.rows() * inner, m.cols() * inner);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c).is_zero()) continue;
      for (std::size_t k = 0; k < inner; ++k) out(r * inner + k, c * inner + k) = m(r, c);
    }
  }
  return out;
}

DenseMatrix kron_right(std::size_t outer, const DenseMatrix& m) {
  DenseMatrix out(outer * m.rows(), outer * m.cols());
  for (std::size_t k = 0; k < outer; ++k) out.set_block(k * m.rows(), k * m.cols(), m);
  return out;
}

const RadicalScalar& minus_i() {
  static const RadicalScalar value = RadicalScalar::complex(0, -1);
  return value;
}

}  // namespace

RadicalScalar ladder_coeff_r(Spin spin, HalfInt sigma) {
  if (!spin.contains(sigma)) return {};
  // (A - σ)(A + σ + 1) = (2A - 2σ)(2A + 2σ + 2) / 4
  const int lhs = spin.twice() - sigma.twice();
  const int rhs = spin.twice() + sigma.twice() + 2;
  if (lhs == 0) return {};
  return sqrt_of_rational(Rational(lhs * rhs, 4));
}

RadicalScalar ladder_coeff_s(Spin spin, HalfInt sigma) { return ladder_coeff_r(spin, -sigma); }

RotationRep rotation_rep(Spin spin) {
  const auto labels = spin.labels();
  const std::size_t n = labels.size();
  RotationRep rep{DenseMatrix(n, n), DenseMatrix(n, n), DenseMatrix(n, n)};
  for (std::size_t col = 0; col < n; ++col) {
    const HalfInt sigma1 = labels[col];
    rep.z(col, col) = sigma1.value();
    // Row index of σ = σ₁ ± 1 in the descending basis is col ∓ 1.
    if (col > 0) rep.plus(col - 1, col) = ladder_coeff_r(spin, sigma1);
    if (col + 1 < n) rep.minus(col + 1, col) = ladder_coeff_s(spin, sigma1);
  }
  return rep;
}

DenseMatrix GeneratorSet::j_plus() const { return J[0] + RadicalScalar::imaginary_unit() * J[1]; }
DenseMatrix GeneratorSet::j_minus() const { return J[0] - RadicalScalar::imaginary_unit() * J[1]; }

GeneratorSet irrep_generators(const SpinPair& pair) {
  const RotationRep a = rotation_rep(pair.left);
  const RotationRep b = rotation_rep(pair.right);
  const std::size_t na = pair.left.multiplicity();
  const std::size_t nb = pair.right.multiplicity();
  const RadicalScalar half(Rational(1, 2));
  const RadicalScalar half_over_i = RadicalScalar::complex(0, Rational(-1, 2));

  const std::array<DenseMatrix, 3> a_k = {
      kron_left(half * (a.plus + a.minus), nb),
      kron_left(half_over_i * (a.plus - a.minus), nb),
      kron_left(a.z, nb),
  };
  const std::array<DenseMatrix, 3> b_k = {
      kron_right(na, half * (b.plus + b.minus)),
      kron_right(na, half_over_i * (b.plus - b.minus)),
      kron_right(na, b.z),
  };

  GeneratorSet g;
  g.spins = {pair};
  for (std::size_t k = 0; k < 3; ++k) {
    g.J[k] = a_k[k] + b_k[k];
    g.K[k] = minus_i() * (a_k[k] - b_k[k]);
  }
  return g;
}

GeneratorSet direct_sum(const SpinPair& first, const SpinPair& second) {
  const GeneratorSet g1 = irrep_generators(first);
  const GeneratorSet g2 = irrep_generators(second);
  GeneratorSet g;
  g.spins = {first, second};
  for (std::size_t k = 0; k < 3; ++k) {
    g.J[k] = direct_sum(g1.J[k], g2.J[k]);
    g.K[k] = direct_sum(g1.K[k], g2.K[k]);
  }
  return g;
}

}  // namespace poincare
