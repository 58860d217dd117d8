#include "poincare/vectors.hpp"

#include <cstdlib>
#include <functional>

#include "poincare/generators.hpp"

namespace poincare {

namespace {

RadicalScalar root(const Rational& x) { return sqrt_of_rational(x); }

int sign_of(int x) { return (x > 0) - (x < 0); }

// Entry families of one off-diagonal block, keyed by the row label (p,q)
// and column label (r,s). `sg` selects the upper (+1) or lower (-1) sign.
struct BlockFormulas {
  // (V^±)_{pq,rs}, populated where p = r ± 1/2, q = s ± 1/2.
  std::function<RadicalScalar(int sg, const Rational& p, const Rational& q, const Rational& r,
                              const Rational& s)>
      ladder;
  // ½(V_z ± V_t)_{pq,rs}, populated where p = r ± 1/2, q = s ∓ 1/2.
  std::function<RadicalScalar(int sg, const Rational& p, const Rational& q, const Rational& r,
                              const Rational& s)>
      diagonal;
};

struct BlockParts {
  DenseMatrix plus, minus, zplus, zminus;
};

BlockParts assemble_block(const SpinPair& row, const SpinPair& col, const BlockFormulas& f) {
  const std::size_t nr = row.dimension();
  const std::size_t nc = col.dimension();
  BlockParts parts{DenseMatrix(nr, nc), DenseMatrix(nr, nc), DenseMatrix(nr, nc), DenseMatrix(nr, nc)};
  for (HalfInt p : row.left.labels()) {
    for (HalfInt q : row.right.labels()) {
      const std::size_t i = flatten_index(row, p, q);
      for (int sg : {+1, -1}) {
        const HalfInt shift = HalfInt::from_twice(sg);
        // Ladder family: r = p ∓ 1/2, s = q ∓ 1/2.
        if (col.left.contains(p - shift) && col.right.contains(q - shift)) {
          const std::size_t j = flatten_index(col, p - shift, q - shift);
          auto& target = sg > 0 ? parts.plus : parts.minus;
          target(i, j) = f.ladder(sg, p.value(), q.value(), (p - shift).value(), (q - shift).value());
        }
        // Diagonal family: r = p ∓ 1/2, s = q ± 1/2.
        if (col.left.contains(p - shift) && col.right.contains(q + shift)) {
          const std::size_t j = flatten_index(col, p - shift, q + shift);
          auto& target = sg > 0 ? parts.zplus : parts.zminus;
          target(i, j) = f.diagonal(sg, p.value(), q.value(), (p - shift).value(), (q + shift).value());
        }
      }
    }
  }
  return parts;
}

// Writes Cartesian components of one block into the full matrices:
// V_x = V⁺ + V⁻, V_y = -i(V⁺ - V⁻), V_z = Z⁺ + Z⁻, V_t = Z⁺ - Z⁻.
void place_block(VectorSet& v, const BlockParts& parts, std::size_t row0, std::size_t col0,
                 const RadicalScalar& scale) {
  const RadicalScalar minus_i = RadicalScalar::complex(0, -1);
  v.V[kX].set_block(row0, col0, scale * (parts.plus + parts.minus));
  v.V[kY].set_block(row0, col0, (minus_i * scale) * (parts.plus - parts.minus));
  v.V[kZ].set_block(row0, col0, scale * (parts.zplus + parts.zminus));
  v.V[kT].set_block(row0, col0, scale * (parts.zplus - parts.zminus));
}

// Closed-form tables; A, B, C, D are the spins of (A,B) ⊕ (C,D). Row labels
// of the 12-block are (a,b), of the 21-block (c,d).
std::pair<BlockFormulas, BlockFormulas> case_formulas(CaseTag tag, const Rational& A, const Rational& B,
                                                      const Rational& C, const Rational& D) {
  using R = const Rational&;
  BlockFormulas f12;
  BlockFormulas f21;
  switch (tag) {
    case CaseTag::Case1:
      f12.ladder = [=](int sg, R a, R b, R, R) {
        return RadicalScalar(sg) * root((A + sg * a) * (B + sg * b) / (4 * A * B));
      };
      f12.diagonal = [=](int sg, R a, R b, R, R) {
        return -root((A + sg * a) * (B - sg * b) / (4 * A * B));
      };
      f21.ladder = [=](int sg, R, R, R a, R b) { return RadicalScalar(sg) * root((A - sg * a) * (B - sg * b)); };
      f21.diagonal = [=](int sg, R, R, R a, R b) { return root((A - sg * a) * (B + sg * b)); };
      break;
    case CaseTag::Case2:
      f12.ladder = [=](int sg, R a, R, R, R d) { return root((A + sg * a) / (2 * A) * (D - sg * d)); };
      f12.diagonal = [=](int sg, R a, R, R, R d) {
        return RadicalScalar(sg) * root((A + sg * a) / (2 * A) * (D + sg * d));
      };
      f21.ladder = [=](int sg, R, R d, R a, R) { return root((A - sg * a) * (D + sg * d) / (2 * D)); };
      f21.diagonal = [=](int sg, R, R d, R a, R) {
        return RadicalScalar(-sg) * root((A - sg * a) * (D - sg * d) / (2 * D));
      };
      break;
    case CaseTag::Case3:
      f12.ladder = [=](int sg, R, R b, R c, R) { return root((C - sg * c) * (B + sg * b) / (2 * B)); };
      f12.diagonal = [=](int sg, R, R b, R c, R) {
        return RadicalScalar(-sg) * root((C - sg * c) * (B - sg * b) / (2 * B));
      };
      f21.ladder = [=](int sg, R c, R, R, R b) { return root((C + sg * c) / (2 * C) * (B - sg * b)); };
      f21.diagonal = [=](int sg, R c, R, R, R b) {
        return RadicalScalar(sg) * root((C + sg * c) / (2 * C) * (B + sg * b));
      };
      break;
    case CaseTag::Case4:
      f12.ladder = [=](int sg, R, R, R c, R d) { return RadicalScalar(sg) * root((C - sg * c) * (D - sg * d)); };
      f12.diagonal = [=](int sg, R, R, R c, R d) { return root((C - sg * c) * (D + sg * d)); };
      f21.ladder = [=](int sg, R c, R d, R, R) {
        return RadicalScalar(sg) * root((C + sg * c) * (D + sg * d) / (4 * C * D));
      };
      f21.diagonal = [=](int sg, R c, R d, R, R) {
        return -root((C + sg * c) * (D - sg * d) / (4 * C * D));
      };
      break;
    case CaseTag::NoSolution:
      break;
  }
  return {f12, f21};
}

void require_admissible(Spin a, Spin b, Spin c, Spin d) {
  const std::string why = selection_rule_diagnostic(a, b, c, d);
  if (!why.empty()) throw NoSolutionError(why);
}

CaseTag swapped(CaseTag tag) {
  switch (tag) {
    case CaseTag::Case1: return CaseTag::Case4;
    case CaseTag::Case2: return CaseTag::Case3;
    case CaseTag::Case3: return CaseTag::Case2;
    case CaseTag::Case4: return CaseTag::Case1;
    case CaseTag::NoSolution: break;
  }
  return CaseTag::NoSolution;
}

RadicalScalar lookup(const CoefficientMap& m, HalfInt p, HalfInt q) {
  const auto it = m.find({p, q});
  return it == m.end() ? RadicalScalar{} : it->second;
}

// Fills t (V⁺) and u (V⁻) for one block with row spins (P,Q) and column spins (R,S).
void solve_block(const SpinPair& row, const SpinPair& col, const RadicalScalar& anchor,
                 CoefficientMap& t, CoefficientMap& u) {
  const Spin P = row.left, Q = row.right, R = col.left, S = col.right;
  const auto [tp_lo, tp_hi] = coefficient_range(P, R, kHalf);
  const auto [tq_lo, tq_hi] = coefficient_range(Q, S, kHalf);
  const auto [up_lo, up_hi] = coefficient_range(P, R, -kHalf);
  const auto [uq_lo, uq_hi] = coefficient_range(Q, S, -kHalf);
  const HalfInt three_halves = HalfInt::from_twice(3);

  auto ratio = [](const RadicalScalar& num, const RadicalScalar& den) {
    if (den.is_zero()) throw std::logic_error("recursion step divides by a vanishing ladder coefficient");
    return num.divided_by(den);
  };

  // Step down in p along q = max, then down each column in q:
  //   r^P_{p-1} t_{p-1,q} = r^R_{p-3/2} t_{p,q},  r^Q_{q-1} t_{p,q-1} = r^S_{q-3/2} t_{p,q}.
  t[{tp_hi, tq_hi}] = anchor;
  for (HalfInt p = tp_hi; p > tp_lo; p = p - kOne) {
    t[{p - kOne, tq_hi}] = ratio(ladder_coeff_r(R, p - three_halves), ladder_coeff_r(P, p - kOne)) * t[{p, tq_hi}];
  }
  for (HalfInt p = tp_lo; p <= tp_hi; p = p + kOne) {
    for (HalfInt q = tq_hi; q > tq_lo; q = q - kOne) {
      t[{p, q - kOne}] = ratio(ladder_coeff_r(S, q - three_halves), ladder_coeff_r(Q, q - kOne)) * t[{p, q}];
    }
  }

  // u anchored at (min, min) with the case sign, then stepped up in p and q:
  //   s^P_{p+1} u_{p+1,q} = s^R_{p+3/2} u_{p,q},  s^Q_{q+1} u_{p,q+1} = s^S_{q+3/2} u_{p,q}.
  const int sign = -sign_of(P.twice() - R.twice()) * sign_of(Q.twice() - S.twice());
  u[{up_lo, uq_lo}] = RadicalScalar(sign) * anchor;
  for (HalfInt p = up_lo; p < up_hi; p = p + kOne) {
    u[{p + kOne, uq_lo}] = ratio(ladder_coeff_s(R, p + three_halves), ladder_coeff_s(P, p + kOne)) * u[{p, uq_lo}];
  }
  for (HalfInt p = up_lo; p <= up_hi; p = p + kOne) {
    for (HalfInt q = uq_lo; q < uq_hi; q = q + kOne) {
      u[{p, q + kOne}] = ratio(ladder_coeff_s(S, q + three_halves), ladder_coeff_s(Q, q + kOne)) * u[{p, q}];
    }
  }
}

BlockParts block_from_coefficients(const SpinPair& row, const SpinPair& col, const CoefficientMap& t,
                                   const CoefficientMap& u) {
  const std::size_t nr = row.dimension();
  const std::size_t nc = col.dimension();
  BlockParts parts{DenseMatrix(nr, nc), DenseMatrix(nr, nc), DenseMatrix(nr, nc), DenseMatrix(nr, nc)};
  const Spin P = row.left, Q = row.right, R = col.left, S = col.right;
  for (HalfInt p : P.labels()) {
    for (HalfInt q : Q.labels()) {
      const std::size_t i = flatten_index(row, p, q);
      if (R.contains(p - kHalf) && S.contains(q - kHalf)) {
        parts.plus(i, flatten_index(col, p - kHalf, q - kHalf)) = lookup(t, p, q);
      }
      if (R.contains(p + kHalf) && S.contains(q + kHalf)) {
        parts.minus(i, flatten_index(col, p + kHalf, q + kHalf)) = lookup(u, p, q);
      }
      // V_z = X₁ + X₂ and V_t = X₁ - X₂ with
      //   X₁ = r^P_{p-1} u_{p-1,q} - r^R_r u_{p,q}   at r = p - 1/2, s = q + 1/2,
      //   X₂ = r^Q_{q-1} u_{p,q-1} - r^S_s u_{p,q}   at r = p + 1/2, s = q - 1/2.
      // So Z⁺ = ½(V_z + V_t) carries X₁ and Z⁻ = ½(V_z - V_t) carries X₂.
      if (R.contains(p - kHalf) && S.contains(q + kHalf)) {
        const HalfInt r = p - kHalf;
        parts.zplus(i, flatten_index(col, r, q + kHalf)) =
            ladder_coeff_r(P, p - kOne) * lookup(u, p - kOne, q) - ladder_coeff_r(R, r) * lookup(u, p, q);
      }
      if (R.contains(p + kHalf) && S.contains(q - kHalf)) {
        const HalfInt s = q - kHalf;
        parts.zminus(i, flatten_index(col, p + kHalf, s)) =
            ladder_coeff_r(Q, q - kOne) * lookup(u, p, q - kOne) - ladder_coeff_r(S, s) * lookup(u, p, q);
      }
    }
  }
  return parts;
}

}  // namespace

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::Case1: return "Case1";
    case CaseTag::Case2: return "Case2";
    case CaseTag::Case3: return "Case3";
    case CaseTag::Case4: return "Case4";
    case CaseTag::NoSolution: return "NoSolution";
  }
  return "NoSolution";
}

CaseTag case_tag_from_string(const std::string& name) {
  for (CaseTag tag : {CaseTag::Case1, CaseTag::Case2, CaseTag::Case3, CaseTag::Case4, CaseTag::NoSolution}) {
    if (to_string(tag) == name) return tag;
  }
  throw std::invalid_argument("unknown case tag '" + name + "'");
}

CaseTag classify_case(Spin a, Spin b, Spin c, Spin d) {
  const int ac = a.twice() - c.twice();
  const int bd = b.twice() - d.twice();
  if (ac == 1 && bd == 1) return CaseTag::Case1;
  if (ac == 1 && bd == -1) return CaseTag::Case2;
  if (ac == -1 && bd == 1) return CaseTag::Case3;
  if (ac == -1 && bd == -1) return CaseTag::Case4;
  return CaseTag::NoSolution;
}

std::string selection_rule_diagnostic(Spin a, Spin b, Spin c, Spin d) {
  if (classify_case(a, b, c, d) != CaseTag::NoSolution) return {};
  std::string violated;
  if (std::abs(a.twice() - c.twice()) != 1) violated += "A = " + a.to_string() + ", C = " + c.to_string();
  if (std::abs(b.twice() - d.twice()) != 1) {
    if (!violated.empty()) violated += "; ";
    violated += "B = " + b.to_string() + ", D = " + d.to_string();
  }
  return "no nonzero vector matrices: selection rule A = C ± 1/2 and B = D ± 1/2 violated (" + violated + ")";
}

DenseMatrix VectorSet::block12(std::size_t mu) const { return V[mu].block(0, upper_dim(), upper_dim(), lower_dim()); }

DenseMatrix VectorSet::block21(std::size_t mu) const { return V[mu].block(upper_dim(), 0, lower_dim(), upper_dim()); }

DenseMatrix VectorSet::plus() const {
  return RadicalScalar(Rational(1, 2)) * (V[kX] + RadicalScalar::imaginary_unit() * V[kY]);
}

DenseMatrix VectorSet::minus() const {
  return RadicalScalar(Rational(1, 2)) * (V[kX] - RadicalScalar::imaginary_unit() * V[kY]);
}

VectorSet zero_vector_set(const SpinPair& upper, const SpinPair& lower) {
  VectorSet v;
  v.upper = upper;
  v.lower = lower;
  v.tag = classify_case(upper.left, upper.right, lower.left, lower.right);
  const std::size_t n = upper.dimension() + lower.dimension();
  for (auto& m : v.V) m = DenseMatrix(n, n);
  return v;
}

VectorSet closed_form_vectors(Spin a, Spin b, Spin c, Spin d, const FreeParams& params) {
  require_admissible(a, b, c, d);
  VectorSet v = zero_vector_set({a, b}, {c, d});
  v.params = params;
  const auto [f12, f21] = case_formulas(v.tag, a.value(), b.value(), c.value(), d.value());
  if (!params.t12.is_zero()) place_block(v, assemble_block(v.upper, v.lower, f12), 0, v.upper_dim(), params.t12);
  if (!params.t21.is_zero()) place_block(v, assemble_block(v.lower, v.upper, f21), v.upper_dim(), 0, params.t21);
  return v;
}

std::pair<HalfInt, HalfInt> coefficient_range(Spin row, Spin col, HalfInt shift) {
  const HalfInt P = row.as_half_int();
  const HalfInt R = col.as_half_int();
  return {std::max(-P, -R + shift), std::min(P, R + shift)};
}

TUCoefficients recursion_solve(Spin a, Spin b, Spin c, Spin d, const FreeParams& params) {
  require_admissible(a, b, c, d);
  TUCoefficients out;
  out.upper = {a, b};
  out.lower = {c, d};
  out.tag = classify_case(a, b, c, d);
  out.params = params;
  solve_block(out.upper, out.lower, params.t12, out.t12, out.u12);
  solve_block(out.lower, out.upper, params.t21, out.t21, out.u21);
  return out;
}

VectorSet vectors_from_coefficients(const TUCoefficients& coeffs) {
  VectorSet v = zero_vector_set(coeffs.upper, coeffs.lower);
  v.params = coeffs.params;
  const RadicalScalar one(1);
  place_block(v, block_from_coefficients(v.upper, v.lower, coeffs.t12, coeffs.u12), 0, v.upper_dim(), one);
  place_block(v, block_from_coefficients(v.lower, v.upper, coeffs.t21, coeffs.u21), v.upper_dim(), 0, one);
  return v;
}

VectorSet swap_blocks(const VectorSet& v) {
  VectorSet out = zero_vector_set(v.lower, v.upper);
  out.tag = swapped(v.tag);
  out.params = {v.params.t21, v.params.t12};
  out.kind = v.kind;
  const std::size_t n1 = v.upper_dim();
  const std::size_t n2 = v.lower_dim();
  for (std::size_t mu = 0; mu < 4; ++mu) {
    out.V[mu].set_block(0, n2, v.V[mu].block(n1, 0, n2, n1));
    out.V[mu].set_block(n2, 0, v.V[mu].block(0, n1, n1, n2));
    out.V[mu].set_block(0, 0, v.V[mu].block(n1, n1, n2, n2));
    out.V[mu].set_block(n2, n2, v.V[mu].block(0, 0, n1, n1));
  }
  return out;
}

}  // namespace poincare
