#pragma once

#include <array>
#include <vector>

#include "poincare/dense_matrix.hpp"
#include "poincare/spin.hpp"

namespace poincare {

/// √((A - σ)(A + σ + 1)); zero when σ is not a label of A or σ = A.
RadicalScalar ladder_coeff_r(Spin spin, HalfInt sigma);
/// √((A + σ)(A - σ + 1)), i.e. ladder_coeff_r(A, -σ).
RadicalScalar ladder_coeff_s(Spin spin, HalfInt sigma);

/// Spin-A rotation matrices in the descending basis.
struct RotationRep {
  DenseMatrix plus;   // M⁺ = Mx + iMy
  DenseMatrix minus;  // M⁻ = Mx - iMy
  DenseMatrix z;
};

RotationRep rotation_rep(Spin spin);

/// The six Lorentz generators of a representation with one or two
/// irreducible blocks along the diagonal.
struct GeneratorSet {
  std::vector<SpinPair> spins;
  std::array<DenseMatrix, 3> J;
  std::array<DenseMatrix, 3> K;

  std::size_t dimension() const { return J[0].rows(); }
  /// J⁺ = Jx + iJy and J⁻ = Jx - iJy.
  DenseMatrix j_plus() const;
  DenseMatrix j_minus() const;
};

/// J_k = A_k + B_k, K_k = -i(A_k - B_k) on the (2A+1)(2B+1) product basis.
GeneratorSet irrep_generators(const SpinPair& pair);

/// Block-diagonal (A,B) ⊕ (C,D) generators; the first pair occupies the
/// leading block.
GeneratorSet direct_sum(const SpinPair& first, const SpinPair& second);

}  // namespace poincare
