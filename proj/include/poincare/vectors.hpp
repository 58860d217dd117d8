#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "poincare/dense_matrix.hpp"
#include "poincare/spin.hpp"

namespace poincare {

/// Four-vector component slots, in the order x, y, z, t.
inline constexpr std::size_t kX = 0;
inline constexpr std::size_t kY = 1;
inline constexpr std::size_t kZ = 2;
inline constexpr std::size_t kT = 3;

/// Which sign combination of A = C ± 1/2, B = D ± 1/2 holds.
enum class CaseTag {
  Case1,  // A = C + 1/2, B = D + 1/2
  Case2,  // A = C + 1/2, B = D - 1/2
  Case3,  // A = C - 1/2, B = D + 1/2
  Case4,  // A = C - 1/2, B = D - 1/2
  NoSolution,
};

std::string to_string(CaseTag tag);
/// Inverse of to_string; throws std::invalid_argument.
CaseTag case_tag_from_string(const std::string& name);

CaseTag classify_case(Spin a, Spin b, Spin c, Spin d);

/// Raised when a spin quadruple admits only zero vector matrices.
class NoSolutionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Names the violated half of the selection rule; empty for admissible spins.
std::string selection_rule_diagnostic(Spin a, Spin b, Spin c, Spin d);

/// Free parameters scaling the 12-block and the 21-block.
struct FreeParams {
  RadicalScalar t12;
  RadicalScalar t21;

  bool operator==(const FreeParams&) const = default;
};

/// Whether a set is a general vector matrix or a commuting momentum set
/// (one off-diagonal block zeroed).
enum class VectorKind { Vector, Momentum };

/// V_x, V_y, V_z, V_t on (A,B) ⊕ (C,D). The 11- and 22-blocks are zero; the
/// 12-block maps the (C,D) slot into the (A,B) slot.
struct VectorSet {
  SpinPair upper;  // (A,B)
  SpinPair lower;  // (C,D)
  CaseTag tag = CaseTag::NoSolution;
  FreeParams params;
  VectorKind kind = VectorKind::Vector;
  std::array<DenseMatrix, 4> V;

  std::size_t upper_dim() const { return upper.dimension(); }
  std::size_t lower_dim() const { return lower.dimension(); }
  std::size_t dimension() const { return upper_dim() + lower_dim(); }

  DenseMatrix block12(std::size_t mu) const;
  DenseMatrix block21(std::size_t mu) const;
  /// (V_x ± iV_y)/2.
  DenseMatrix plus() const;
  DenseMatrix minus() const;
};

/// Zero vector set of the right shape for (A,B) ⊕ (C,D).
VectorSet zero_vector_set(const SpinPair& upper, const SpinPair& lower);

/// Vector matrices assembled from the closed-form component tables of the
/// four cases. Throws NoSolutionError for inadmissible spins.
VectorSet closed_form_vectors(Spin a, Spin b, Spin c, Spin d, const FreeParams& params);

using LabelPair = std::pair<HalfInt, HalfInt>;
using CoefficientMap = std::map<LabelPair, RadicalScalar>;

/// Ladder coefficients of V⁺ (t) and V⁻ (u) for both off-diagonal blocks.
/// t12/u12 are keyed by the (a,b) labels of (A,B); t21/u21 by the (c,d)
/// labels of (C,D).
struct TUCoefficients {
  SpinPair upper;
  SpinPair lower;
  CaseTag tag = CaseTag::NoSolution;
  FreeParams params;
  CoefficientMap t12, u12, t21, u21;
};

/// Label range of t (shift = +1/2) or u (shift = -1/2) for one spin slot:
/// max[-P, -R + shift] <= p <= min[P, R + shift].
std::pair<HalfInt, HalfInt> coefficient_range(Spin row, Spin col, HalfInt shift);

/// Solves the step-up/step-down recursions from the anchors t_{max,max} = t
/// and u_{min,min} = ∓t. Throws NoSolutionError for inadmissible spins.
TUCoefficients recursion_solve(Spin a, Spin b, Spin c, Spin d, const FreeParams& params);

/// Places t and u on their delta-selected positions for V^±, and derives
/// V_z = [J⁺, V⁻] and V_t = [iK⁺, V⁻] from the ladder coefficients.
VectorSet vectors_from_coefficients(const TUCoefficients& coeffs);

/// Swaps (A,B) ⊕ (C,D) into (C,D) ⊕ (A,B), exchanging the 12 and 21 blocks.
VectorSet swap_blocks(const VectorSet& v);

}  // namespace poincare
