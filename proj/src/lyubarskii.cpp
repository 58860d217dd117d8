#include "poincare/lyubarskii.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "poincare/generators.hpp"

namespace poincare {

namespace {

// Coefficients ⟨j1 m1, j2 m2 | J M⟩ of one coupling, keyed by (2m1, 2m2).
using CGTable = std::map<std::pair<int, int>, RadicalScalar>;

bool triangle(Spin j1, Spin j2, Spin J) {
  const int a = j1.twice(), b = j2.twice(), c = J.twice();
  return c <= a + b && c >= std::abs(a - b) && (a + b + c) % 2 == 0;
}

CGTable build_table(Spin j1, Spin j2, Spin J) {
  CGTable table;
  const HalfInt top = J.as_half_int();

  // Highest weight: J⁺|J J⟩ = 0 gives
  //   c(m1-1, m2+1) = -c(m1, m2) r^{j2}_{m2} / r^{j1}_{m1-1}.
  std::map<std::pair<int, int>, RadicalScalar> state;
  HalfInt m1 = j1.as_half_int();
  HalfInt m2 = top - m1;
  RadicalScalar c(1);
  Rational norm_sq = 0;
  while (j1.contains(m1) && j2.contains(m2)) {
    state[{m1.twice(), m2.twice()}] = c;
    norm_sq += (c * c).terms().front().re;  // c is a real monomial
    const RadicalScalar up = ladder_coeff_r(j2, m2);
    if (up.is_zero()) break;
    c = -(c * up).divided_by(ladder_coeff_r(j1, m1 - kOne));
    m1 = m1 - kOne;
    m2 = m2 + kOne;
  }
  const RadicalScalar normalizer = sqrt_of_rational(Rational(1) / norm_sq);
  for (auto& [key, value] : state) value *= normalizer;

  // Lowering: J⁻|J M⟩ = s^J_M |J M-1⟩ with J⁻ = j1⁻ + j2⁻.
  for (HalfInt M = top;; M = M - kOne) {
    for (const auto& [key, value] : state) table[key] = value;
    if (M == -top) break;
    std::map<std::pair<int, int>, RadicalScalar> lowered;
    for (const auto& [key, value] : state) {
      const HalfInt a = HalfInt::from_twice(key.first);
      const HalfInt b = HalfInt::from_twice(key.second);
      const RadicalScalar s1 = ladder_coeff_s(j1, a);
      const RadicalScalar s2 = ladder_coeff_s(j2, b);
      if (!s1.is_zero()) lowered[{key.first - 2, key.second}] += s1 * value;
      if (!s2.is_zero()) lowered[{key.first, key.second - 2}] += s2 * value;
    }
    const RadicalScalar step = ladder_coeff_s(J, M);
    state.clear();
    for (auto& [key, value] : lowered) {
      if (!value.is_zero()) state[key] = value.divided_by(step);
    }
  }
  return table;
}

const CGTable& cached_table(Spin j1, Spin j2, Spin J) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, CGTable> cache;
  std::lock_guard<std::mutex> lock(mutex);
  const auto key = std::make_tuple(j1.twice(), j2.twice(), J.twice());
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_table(j1, j2, J)).first;
  return it->second;
}

const Spin& spin_half() {
  static const Spin half = Spin::from_twice(1);
  return half;
}

std::size_t spinor_slot(HalfInt m) { return m.twice() < 0 ? 0 : 1; }

// Entry (row, col) couples spin-1/2 ⊗ col-spin into row-spin in each slot;
// both block orientations use the row pair as the coupling target.
BetaBlocks beta_blocks(const SpinPair& row, const SpinPair& col, const RadicalScalar& lambda) {
  BetaBlocks out;
  for (auto& m : out.blocks) m = DenseMatrix(row.dimension(), col.dimension());
  if (lambda.is_zero()) return out;
  const Spin& half = spin_half();
  for (HalfInt p : row.left.labels()) {
    for (HalfInt q : row.right.labels()) {
      const std::size_t i = flatten_index(row, p, q);
      for (HalfInt r : col.left.labels()) {
        for (HalfInt s : col.right.labels()) {
          const HalfInt m = p - r;
          const HalfInt n = q - s;
          if (!half.contains(m) || !half.contains(n)) continue;
          const RadicalScalar cg = clebsch_gordan({half, m, col.left, r, row.left, p}) *
                                   clebsch_gordan({half, n, col.right, s, row.right, q});
          if (cg.is_zero()) continue;
          const std::size_t j = flatten_index(col, r, s);
          for (std::size_t mu = 0; mu < 4; ++mu) {
            const RadicalScalar w = coupling_weight(mu, m, n);
            if (!w.is_zero()) out.blocks[mu](i, j) = lambda * w * cg;
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

RadicalScalar clebsch_gordan(const CGKey& k) {
  if (!k.j1.contains(k.m1) || !k.j2.contains(k.m2) || !k.J.contains(k.M)) return {};
  if (k.m1 + k.m2 != k.M || !triangle(k.j1, k.j2, k.J)) return {};
  const CGTable& table = cached_table(k.j1, k.j2, k.J);
  const auto it = table.find({k.m1.twice(), k.m2.twice()});
  return it == table.end() ? RadicalScalar{} : it->second;
}

const BarVTable& BarVTable::standard() {
  static const BarVTable table = [] {
    const RadicalScalar i = RadicalScalar::imaginary_unit();
    BarVTable t;
    t.entries[kX] = {{{0, 1}, {1, 0}}};
    t.entries[kY] = {{{0, i}, {-i, 0}}};
    t.entries[kZ] = {{{-1, 0}, {0, 1}}};
    t.entries[kT] = {{{-1, 0}, {0, -1}}};
    return t;
  }();
  return table;
}

const RadicalScalar& BarVTable::at(std::size_t mu, HalfInt m, HalfInt n) const {
  return entries.at(mu)[spinor_slot(m)][spinor_slot(n)];
}

RadicalScalar coupling_weight(std::size_t mu, HalfInt m, HalfInt n) {
  RadicalScalar w = BarVTable::standard().at(mu, m, -n);
  // (-1)^(1/2 - n): +1 for n = +1/2, -1 for n = -1/2.
  if (n.twice() < 0) w = -w;
  if (mu == kT) w = -w;
  return w;
}

BetaBlocks beta_block_21(Spin a, Spin b, Spin c, Spin d, const RadicalScalar& lambda21) {
  BetaBlocks out = beta_blocks({c, d}, {a, b}, lambda21);
  out.tag = classify_case(a, b, c, d);
  return out;
}

BetaBlocks beta_block_12(Spin a, Spin b, Spin c, Spin d, const RadicalScalar& lambda12) {
  BetaBlocks out = beta_blocks({a, b}, {c, d}, lambda12);
  out.tag = classify_case(a, b, c, d);
  return out;
}

VectorSet lyubarskii_vectors(Spin a, Spin b, Spin c, Spin d, const LambdaParams& lambdas) {
  const std::string why = selection_rule_diagnostic(a, b, c, d);
  if (!why.empty()) throw NoSolutionError(why);
  VectorSet v = zero_vector_set({a, b}, {c, d});
  v.params = {lambdas.lambda12, lambdas.lambda21};
  const BetaBlocks b12 = beta_block_12(a, b, c, d, lambdas.lambda12);
  const BetaBlocks b21 = beta_block_21(a, b, c, d, lambdas.lambda21);
  for (std::size_t mu = 0; mu < 4; ++mu) {
    v.V[mu].set_block(0, v.upper_dim(), b12.blocks[mu]);
    v.V[mu].set_block(v.upper_dim(), 0, b21.blocks[mu]);
  }
  return v;
}

std::string BlockMismatch::describe() const {
  static const char* names[] = {"x", "y", "z", "t"};
  return "block " + block + ", V_" + names[mu] + " entry (" + std::to_string(row) + "," + std::to_string(col) +
         "): expected " + expected.to_string() + ", got " + actual.to_string();
}

namespace {

// Fits `ratio` with ratio·b = a over all four components of one block.
std::optional<RadicalScalar> fit_block(const std::array<DenseMatrix, 4>& a, const std::array<DenseMatrix, 4>& b,
                                       const std::string& name, std::optional<BlockMismatch>& mismatch) {
  std::optional<RadicalScalar> ratio;
  for (std::size_t mu = 0; mu < 4 && !ratio; ++mu) {
    if (const auto pos = b[mu].first_nonzero()) {
      const RadicalScalar& divisor = b[mu](pos->first, pos->second);
      if (!divisor.is_monomial()) {
        mismatch = BlockMismatch{name, mu, pos->first, pos->second, a[mu](pos->first, pos->second), divisor};
        return std::nullopt;
      }
      ratio = a[mu](pos->first, pos->second).divided_by(divisor);
    }
  }
  const RadicalScalar scale = ratio.value_or(RadicalScalar{});
  for (std::size_t mu = 0; mu < 4; ++mu) {
    for (std::size_t r = 0; r < a[mu].rows(); ++r) {
      for (std::size_t c = 0; c < a[mu].cols(); ++c) {
        const RadicalScalar scaled = scale * b[mu](r, c);
        if (scaled != a[mu](r, c)) {
          mismatch = BlockMismatch{name, mu, r, c, a[mu](r, c), scaled};
          return ratio;
        }
      }
    }
  }
  return ratio;
}

}  // namespace

EquivalenceReport equivalence_ratio(const VectorSet& from_a, const VectorSet& from_b) {
  if (!(from_a.upper == from_b.upper) || !(from_a.lower == from_b.lower)) {
    throw std::invalid_argument("equivalence_ratio: vector sets carry different spins");
  }
  std::array<DenseMatrix, 4> a12, b12, a21, b21;
  for (std::size_t mu = 0; mu < 4; ++mu) {
    a12[mu] = from_a.block12(mu);
    b12[mu] = from_b.block12(mu);
    a21[mu] = from_a.block21(mu);
    b21[mu] = from_b.block21(mu);
  }
  EquivalenceReport report;
  report.ratio12 = fit_block(a12, b12, "12", report.mismatch);
  if (report.mismatch) return report;
  report.ratio21 = fit_block(a21, b21, "21", report.mismatch);
  return report;
}

}  // namespace poincare
