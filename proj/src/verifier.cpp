#include "poincare/verifier.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace poincare {

namespace {

constexpr std::array<char, 4> kAxisName = {'x', 'y', 'z', 't'};

// ε_ijk with ε_xyz = +1.
constexpr int kEpsilon[3][3][3] = {
    {{0, 0, 0}, {0, 0, 1}, {0, -1, 0}},
    {{0, 0, -1}, {0, 0, 0}, {1, 0, 0}},
    {{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}},
};

std::string rule_name(const char* family, std::size_t i, std::size_t j) {
  return std::string(family) + "." + kAxisName[i] + kAxisName[j];
}

RuleReport make_report(std::string id, const DenseMatrix& residual) {
  RuleReport report{std::move(id), true, std::nullopt};
  if (const auto pos = residual.first_nonzero()) {
    report.holds = false;
    report.first_violation = Violation{pos->first, pos->second, residual(pos->first, pos->second)};
  }
  return report;
}

// i Σ_k ε_ijk M_k
DenseMatrix i_epsilon(std::size_t i, std::size_t j, const std::array<DenseMatrix, 3>& m, std::size_t dim) {
  DenseMatrix out(dim, dim);
  for (std::size_t k = 0; k < 3; ++k) {
    if (kEpsilon[i][j][k] != 0) out += RadicalScalar::complex(0, kEpsilon[i][j][k]) * m[k];
  }
  return out;
}

}  // namespace

DenseMatrix commutator(const DenseMatrix& m, const DenseMatrix& n) {
  if (!m.is_square() || !n.is_square() || m.rows() != n.rows()) {
    throw std::invalid_argument("commutator: operands must be square and of equal size");
  }
  return m * n - n * m;
}

std::vector<RuleReport> check_lorentz(const GeneratorSet& g) {
  const std::size_t dim = g.dimension();
  std::vector<RuleReport> out;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      out.push_back(make_report(rule_name("JJ", i, j), commutator(g.J[i], g.J[j]) - i_epsilon(i, j, g.J, dim)));
    }
  }
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      out.push_back(make_report(rule_name("JK", i, j), commutator(g.J[i], g.K[j]) - i_epsilon(i, j, g.K, dim)));
    }
  }
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      out.push_back(make_report(rule_name("KK", i, j), commutator(g.K[i], g.K[j]) + i_epsilon(i, j, g.J, dim)));
    }
  }
  return out;
}

std::vector<RuleReport> check_vector_rules(const GeneratorSet& g, const VectorSet& v) {
  const std::size_t dim = g.dimension();
  for (const auto& m : v.V) {
    if (m.rows() != dim || m.cols() != dim) {
      throw std::invalid_argument("check_vector_rules: generator and vector dimensions differ");
    }
  }
  const std::array<DenseMatrix, 3> spatial = {v.V[kX], v.V[kY], v.V[kZ]};
  const RadicalScalar minus_i = RadicalScalar::complex(0, -1);
  std::vector<RuleReport> out;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      out.push_back(
          make_report(rule_name("JV", i, j), commutator(g.J[i], v.V[j]) - i_epsilon(i, j, spatial, dim)));
    }
  }
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      DenseMatrix residual = commutator(g.K[i], v.V[j]);
      if (i == j) residual -= minus_i * v.V[kT];
      out.push_back(make_report(rule_name("KV", i, j), residual));
    }
  }
  for (std::size_t i = 0; i < 3; ++i) {
    out.push_back(make_report(rule_name("JV", i, kT), commutator(g.J[i], v.V[kT])));
  }
  for (std::size_t i = 0; i < 3; ++i) {
    out.push_back(make_report(rule_name("KV", i, kT), commutator(g.K[i], v.V[kT]) - minus_i * v.V[i]));
  }
  return out;
}

std::vector<RuleReport> check_translations(const VectorSet& p) {
  std::vector<RuleReport> out;
  for (std::size_t mu = 0; mu < 4; ++mu) {
    for (std::size_t nu = mu + 1; nu < 4; ++nu) {
      out.push_back(make_report(rule_name("PP", mu, nu), commutator(p.V[mu], p.V[nu])));
    }
  }
  return out;
}

GeneratorSet generators_for(const VectorSet& v) { return direct_sum(v.upper, v.lower); }

std::vector<RuleReport> check_all(const GeneratorSet& g, const VectorSet& v) {
  std::vector<RuleReport> out = check_lorentz(g);
  const auto vec = check_vector_rules(g, v);
  out.insert(out.end(), vec.begin(), vec.end());
  if (v.kind == VectorKind::Momentum) {
    const auto pp = check_translations(v);
    out.insert(out.end(), pp.begin(), pp.end());
  }
  return out;
}

bool all_hold(const std::vector<RuleReport>& reports) {
  for (const auto& r : reports) {
    if (!r.holds) return false;
  }
  return true;
}

CliffordReport check_clifford(const VectorSet& v) {
  static constexpr std::array<int, 4> eta = {1, 1, 1, -1};
  const std::size_t dim = v.dimension();
  std::array<std::array<DenseMatrix, 4>, 4> anti;
  bool all_zero = true;
  for (std::size_t mu = 0; mu < 4; ++mu) {
    for (std::size_t nu = mu; nu < 4; ++nu) {
      anti[mu][nu] = v.V[mu] * v.V[nu] + v.V[nu] * v.V[mu];
      all_zero = all_zero && anti[mu][nu].is_zero();
    }
  }
  CliffordReport report;
  if (all_zero) {
    report.degenerate = true;
    report.detail = "all anticommutators vanish (k = 0)";
    return report;
  }
  // {V_x, V_x} = k I fixes k.
  report.k = dim == 0 ? RadicalScalar{} : anti[kX][kX](0, 0);
  const DenseMatrix identity = DenseMatrix::identity(dim);
  for (std::size_t mu = 0; mu < 4; ++mu) {
    for (std::size_t nu = mu; nu < 4; ++nu) {
      const DenseMatrix expected = mu == nu ? RadicalScalar(eta[mu]) * report.k * identity : DenseMatrix(dim, dim);
      if (anti[mu][nu] != expected) {
        report.detail = std::string("{V_") + kAxisName[mu] + ",V_" + kAxisName[nu] + "} is not k*eta*I";
        return report;
      }
    }
  }
  report.holds = !report.k.is_zero();
  if (!report.holds) report.detail = "k = 0 with nonzero anticommutators";
  return report;
}

Eigen::MatrixXcd to_float_matrix(const DenseMatrix& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).to_complex();
  }
  return out;
}

Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a) {
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const Eigen::MatrixXcd scaled = a / std::ldexp(1.0, squarings);

  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Identity(a.rows(), a.cols());
  Eigen::MatrixXcd term = sum;
  bool converged = false;
  for (int n = 1; n <= 60; ++n) {
    term = term * scaled / static_cast<double>(n);
    sum += term;
    if (term.cwiseAbs().maxCoeff() < 1e-18) {
      converged = true;
      break;
    }
  }
  if (!converged) throw std::runtime_error("expm: Taylor series did not converge");
  for (int k = 0; k < squarings; ++k) sum = sum * sum;
  return sum;
}

Eigen::Matrix4d lorentz_matrix(TransformKind kind, std::size_t axis, double angle) {
  if (axis > 2) throw std::invalid_argument("lorentz_matrix: axis must be 0, 1 or 2");
  Eigen::Matrix4d l = Eigen::Matrix4d::Zero();
  if (kind == TransformKind::Rotation) {
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t k = 0; k < 3; ++k) l(j, k) = -kEpsilon[axis][j][k];
    }
    return Eigen::Matrix4d::Identity() + std::sin(angle) * l + (1 - std::cos(angle)) * l * l;
  }
  l(axis, kT) = 1;
  l(kT, axis) = 1;
  return Eigen::Matrix4d::Identity() + std::sinh(angle) * l + (std::cosh(angle) - 1) * l * l;
}

double finite_covariance_check(const GeneratorSet& g, const VectorSet& v, TransformKind kind, std::size_t axis,
                               double angle) {
  if (axis > 2) throw std::invalid_argument("finite_covariance_check: axis must be 0, 1 or 2");
  const Eigen::MatrixXcd gen = to_float_matrix(kind == TransformKind::Rotation ? g.J[axis] : g.K[axis]);
  const std::complex<double> i(0, 1);
  const Eigen::MatrixXcd d = expm(i * angle * gen);
  const Eigen::MatrixXcd d_inv = expm(-i * angle * gen);
  const Eigen::Matrix4d lambda = lorentz_matrix(kind, axis, angle);

  std::array<Eigen::MatrixXcd, 4> vf;
  for (std::size_t mu = 0; mu < 4; ++mu) vf[mu] = to_float_matrix(v.V[mu]);
  double worst = 0;
  for (std::size_t mu = 0; mu < 4; ++mu) {
    Eigen::MatrixXcd rhs = Eigen::MatrixXcd::Zero(vf[mu].rows(), vf[mu].cols());
    for (std::size_t nu = 0; nu < 4; ++nu) rhs += lambda(mu, nu) * vf[nu];
    const Eigen::MatrixXcd lhs = d * vf[mu] * d_inv;
    if (lhs.size() > 0) worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  return worst;
}

}  // namespace poincare
