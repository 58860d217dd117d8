#pragma once

#include <array>
#include <optional>
#include <string>

#include "poincare/dense_matrix.hpp"
#include "poincare/spin.hpp"
#include "poincare/vectors.hpp"

namespace poincare {

/// ⟨j1 m1, j2 m2 | J M⟩.
struct CGKey {
  Spin j1;
  HalfInt m1;
  Spin j2;
  HalfInt m2;
  Spin J;
  HalfInt M;
};

/// Clebsch-Gordan coefficient in the Condon–Shortley convention, computed
/// exactly by seeding the highest-weight state |J J⟩ from J⁺|J J⟩ = 0 with
/// ⟨j1 j1, j2 J-j1 | J J⟩ > 0 and applying J⁻ = j1⁻ + j2⁻. Zero outside the
/// selection rules. Thread-safe; tables are memoized per (j1, j2, J).
RadicalScalar clebsch_gordan(const CGKey& key);

/// The four 2×2 reference matrices V̄_x, V̄_y, V̄_z, V̄_t exactly as printed
/// in the reference table. Row index m and column index n run over -1/2, +1/2
/// in that order.
struct BarVTable {
  std::array<std::array<std::array<RadicalScalar, 2>, 2>, 4> entries;

  static const BarVTable& standard();
  const RadicalScalar& at(std::size_t mu, HalfInt m, HalfInt n) const;
};

/// Weight of the CG product carrying spinor indices (m, n) in component μ.
///
/// The printed column label is the conjugate (0,1/2) index, so coupling
/// index n reads column -n with phase (-1)^(1/2 - n); the printed V̄_t is the
/// contravariant component and is lowered with the metric diag(1,1,1,-1).
RadicalScalar coupling_weight(std::size_t mu, HalfInt m, HalfInt n);

struct LambdaParams {
  RadicalScalar lambda12;
  RadicalScalar lambda21;
};

/// Four off-diagonal blocks β_μ with the tag of the spin quadruple. For
/// NoSolution spins the CG coefficients vanish and so do the blocks; the tag
/// lets callers report that instead of using them.
struct BetaBlocks {
  std::array<DenseMatrix, 4> blocks;
  CaseTag tag = CaseTag::NoSolution;
};

/// (β_μ21)_{cd,ab} = λ21 Σ_{m,n} w_μ(m,n) ⟨1/2 m, A a|C c⟩⟨1/2 n, B b|D d⟩.
BetaBlocks beta_block_21(Spin a, Spin b, Spin c, Spin d, const RadicalScalar& lambda21);
/// (β_μ12)_{ab,cd} = λ12 Σ_{m,n} w_μ(m,n) ⟨1/2 m, C c|A a⟩⟨1/2 n, D d|B b⟩.
BetaBlocks beta_block_12(Spin a, Spin b, Spin c, Spin d, const RadicalScalar& lambda12);

/// Full vector set built from both β blocks. Throws NoSolutionError.
VectorSet lyubarskii_vectors(Spin a, Spin b, Spin c, Spin d, const LambdaParams& lambdas);

struct BlockMismatch {
  std::string block;  // "12" or "21"
  std::size_t mu = 0;
  std::size_t row = 0;  // within the block
  std::size_t col = 0;
  RadicalScalar expected;  // entry of the first argument
  RadicalScalar actual;    // ratio × entry of the second argument

  std::string describe() const;
};

struct EquivalenceReport {
  /// ratio12 · (second set's 12-block) = first set's 12-block; nullopt when
  /// both blocks vanish.
  std::optional<RadicalScalar> ratio12;
  std::optional<RadicalScalar> ratio21;
  std::optional<BlockMismatch> mismatch;

  bool equivalent() const { return !mismatch.has_value(); }
};

/// Finds one scalar per off-diagonal block mapping `from_b` onto `from_a`
/// for all four components, or reports the first entry that breaks
/// proportionality. Throws std::invalid_argument for different spins.
EquivalenceReport equivalence_ratio(const VectorSet& from_a, const VectorSet& from_b);

}  // namespace poincare
