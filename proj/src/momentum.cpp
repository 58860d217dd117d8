#include "poincare/momentum.hpp"

namespace poincare {

std::string to_string(BlockChoice choice) { return choice == BlockChoice::Keep12 ? "keep12" : "keep21"; }

VectorSet momentum_from_vectors(const VectorSet& v, BlockChoice choice) {
  VectorSet p = v;
  p.kind = VectorKind::Momentum;
  const std::size_t n1 = v.upper_dim();
  const std::size_t n2 = v.lower_dim();
  for (auto& m : p.V) {
    if (choice == BlockChoice::Keep12) {
      m.set_block(n1, 0, DenseMatrix(n2, n1));
    } else {
      m.set_block(0, n1, DenseMatrix(n1, n2));
    }
  }
  if (choice == BlockChoice::Keep12) {
    p.params.t21 = RadicalScalar{};
  } else {
    p.params.t12 = RadicalScalar{};
  }
  return p;
}

DenseMatrix noncommutativity_witness(const VectorSet& v) {
  const DenseMatrix plus = v.plus();
  const DenseMatrix minus = v.minus();
  const DenseMatrix c = plus * minus - minus * plus;
  return c.block(0, 0, v.upper_dim(), v.upper_dim());
}

}  // namespace poincare
