#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "poincare/dense_matrix.hpp"
#include "poincare/generators.hpp"
#include "poincare/vectors.hpp"

namespace poincare {

/// MN - NM. Throws std::invalid_argument unless both are square and equal in size.
DenseMatrix commutator(const DenseMatrix& m, const DenseMatrix& n);

struct Violation {
  std::size_t row = 0;
  std::size_t col = 0;
  RadicalScalar residual;
};

/// Outcome of one commutation rule; holds iff the residual matrix is zero.
struct RuleReport {
  std::string rule_id;  // e.g. "JJ.xy", "KV.zt", "PP.xt"
  bool holds = true;
  std::optional<Violation> first_violation;
};

/// [J_i,J_j] = iε J_k, [J_i,K_j] = iε K_k, [K_i,K_j] = -iε J_k: 15 reports.
std::vector<RuleReport> check_lorentz(const GeneratorSet& g);

/// [J_i,V_j] = iε V_k, [K_i,V_j] = -iδ_ij V_t, [J_i,V_t] = 0,
/// [K_i,V_t] = -iV_i: 24 reports. Throws std::invalid_argument on a
/// dimension mismatch.
std::vector<RuleReport> check_vector_rules(const GeneratorSet& g, const VectorSet& v);

/// [P_μ,P_ν] = 0 for the six pairs μ < ν.
std::vector<RuleReport> check_translations(const VectorSet& p);

/// Generators of the representation a vector set lives on.
GeneratorSet generators_for(const VectorSet& v);

/// 15 + 24 rules, plus the 6 translation rules for momentum sets.
std::vector<RuleReport> check_all(const GeneratorSet& g, const VectorSet& v);

bool all_hold(const std::vector<RuleReport>& reports);

/// {V_μ,V_ν} = k η_μν I with η = diag(1,1,1,-1); k carries its sign so
/// either overall metric sign can be read off.
struct CliffordReport {
  bool holds = false;
  bool degenerate = false;  // every anticommutator is zero
  RadicalScalar k;
  std::string detail;
};

CliffordReport check_clifford(const VectorSet& v);

Eigen::MatrixXcd to_float_matrix(const DenseMatrix& m);

/// Matrix exponential by scaling and squaring a Taylor series. Throws
/// std::runtime_error if the series fails to converge.
Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a);

enum class TransformKind { Rotation, Boost };

/// 4×4 Λ in (x,y,z,t) order for a rotation by `angle` or a boost of
/// rapidity `angle` along `axis` (0, 1, 2).
Eigen::Matrix4d lorentz_matrix(TransformKind kind, std::size_t axis, double angle);

/// max |D V_μ D⁻¹ - Λ_μ^ν V_ν| with D = exp(iθG), G = J_axis or K_axis.
/// Acceptance threshold used by the test suite: 1e-10.
double finite_covariance_check(const GeneratorSet& g, const VectorSet& v, TransformKind kind, std::size_t axis,
                               double angle);

}  // namespace poincare
