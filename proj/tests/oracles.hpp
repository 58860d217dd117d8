#pragma once
// Independent reference implementations used only by the tests.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "poincare/generators.hpp"
#include "poincare/radical_scalar.hpp"
#include "poincare/spin.hpp"

namespace oracle {

using poincare::BigInt;
using poincare::HalfInt;
using poincare::RadicalScalar;
using poincare::Rational;
using poincare::Spin;

/// n = outside² · core by plain trial over all k with k² ≤ n.
inline std::pair<std::uint64_t, std::uint64_t> split_square(std::uint64_t n) {
  std::uint64_t outside = 1;
  for (std::uint64_t k = 2; k * k <= n; ++k) {
    if (n % (k * k) == 0) outside = k;  // largest k with k² | n
  }
  return {outside, n / (outside * outside)};
}

inline BigInt factorial(long n) {
  BigInt out = 1;
  for (long k = 2; k <= n; ++k) out *= k;
  return out;
}

/// Racah's closed formula, evaluated exactly: CG = Σ · √(prefactor).
inline RadicalScalar racah_cg(Spin j1, HalfInt m1, Spin j2, HalfInt m2, Spin J, HalfInt M) {
  const long a = j1.twice(), b = j2.twice(), c = J.twice();
  const long ma = m1.twice(), mb = m2.twice(), mc = M.twice();
  if (ma + mb != mc) return {};
  if (std::abs(ma) > a || std::abs(mb) > b || std::abs(mc) > c) return {};
  if ((a - ma) % 2 || (b - mb) % 2 || (c - mc) % 2) return {};
  if (c > a + b || c < std::abs(a - b) || (a + b + c) % 2) return {};
  auto f = [](long twice) { return factorial(twice / 2); };
  Rational pre(BigInt((c + 1)) * f(c + a - b) * f(c - a + b) * f(a + b - c), f(a + b + c + 2));
  pre *= Rational(f(c + mc) * f(c - mc) * f(a - ma) * f(a + ma) * f(b - mb) * f(b + mb));
  pre.canonicalize();
  Rational sum = 0;
  for (long k = 0;; ++k) {
    const std::array<long, 6> args = {a + b - c - 2 * k, a - ma - 2 * k, b + mb - 2 * k,
                                      c - b + ma + 2 * k, c - a - mb + 2 * k, 2 * k};
    if (args[0] < 0 || args[1] < 0 || args[2] < 0) break;
    if (args[3] < 0 || args[4] < 0) continue;
    BigInt den = 1;
    for (long x : args) den *= f(x);
    sum += Rational(k % 2 ? -1 : 1, 1) / Rational(den);
  }
  return RadicalScalar(sum) * poincare::sqrt_of_rational(pre);
}

inline Eigen::MatrixXcd to_eigen(const poincare::DenseMatrix& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).to_complex();
  }
  return out;
}

/// Dimension of the space of 4-tuples of (rows × cols) matrices X_μ obeying
///   J_i X_j - X_j J'_i = iε_ijk X_k,  K_i X_j - X_j K'_i = -iδ_ij X_t,
///   J_i X_t - X_t J'_i = 0,           K_i X_t - X_t K'_i = -i X_i,
/// i.e. one block of the 24 vector rules with row generators (J, K) and
/// column generators (J', K'). Counted from the normal matrix spectrum.
inline int vector_rule_nullity(const poincare::GeneratorSet& row, const poincare::GeneratorSet& col) {
  const std::complex<double> I(0, 1);
  std::array<Eigen::MatrixXcd, 3> J, K, Jc, Kc;
  for (int k = 0; k < 3; ++k) {
    J[k] = to_eigen(row.J[k]);
    K[k] = to_eigen(row.K[k]);
    Jc[k] = to_eigen(col.J[k]);
    Kc[k] = to_eigen(col.K[k]);
  }
  const Eigen::Index n = J[0].rows(), m = Jc[0].rows();
  const Eigen::Index block = n * m, unknowns = 4 * block;
  if (unknowns == 0) return 0;
  const int eps[3][3][3] = {{{0, 0, 0}, {0, 0, 1}, {0, -1, 0}}, {{0, 0, -1}, {0, 0, 0}, {1, 0, 0}},
                            {{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}};

  Eigen::MatrixXcd system(24 * block, unknowns);
  for (Eigen::Index u = 0; u < unknowns; ++u) {
    std::array<Eigen::MatrixXcd, 4> X;
    for (auto& x : X) x = Eigen::MatrixXcd::Zero(n, m);
    X[u / block](u % block / m, u % m) = 1;
    std::vector<Eigen::MatrixXcd> residuals;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        Eigen::MatrixXcd r = J[i] * X[j] - X[j] * Jc[i];
        for (int k = 0; k < 3; ++k) r -= I * double(eps[i][j][k]) * X[k];
        residuals.push_back(r);
        Eigen::MatrixXcd s = K[i] * X[j] - X[j] * Kc[i];
        if (i == j) s += I * X[3];
        residuals.push_back(s);
      }
      residuals.push_back(J[i] * X[3] - X[3] * Jc[i]);
      residuals.push_back(K[i] * X[3] - X[3] * Kc[i] + I * X[i]);
    }
    for (std::size_t q = 0; q < residuals.size(); ++q) {
      system.block(q * block, u, block, 1) = residuals[q].reshaped(block, 1);
    }
  }
  const Eigen::MatrixXcd normal = system.adjoint() * system;
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(normal);
  const double scale = std::max(1.0, solver.eigenvalues().cwiseAbs().maxCoeff());
  int nullity = 0;
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
    if (std::abs(solver.eigenvalues()(k)) < 1e-9 * scale) ++nullity;
  }
  return nullity;
}

}  // namespace oracle
