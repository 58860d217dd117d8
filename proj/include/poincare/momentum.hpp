#pragma once

#include <string>

#include "poincare/dense_matrix.hpp"
#include "poincare/vectors.hpp"

namespace poincare {

/// Which off-diagonal block survives in a momentum set.
enum class BlockChoice { Keep12, Keep21 };

std::string to_string(BlockChoice choice);

/// Copy of `v` with the other off-diagonal block zeroed; kind = Momentum.
/// The result is block-triangular and nilpotent, so its components commute.
VectorSet momentum_from_vectors(const VectorSet& v, BlockChoice choice);

/// 11-block of [P⁺, P⁻] with both off-diagonal blocks of `v` kept. Nonzero
/// whenever t12·t21 ≠ 0, which is why one block must go.
DenseMatrix noncommutativity_witness(const VectorSet& v);

}  // namespace poincare
