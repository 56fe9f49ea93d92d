#include "superb/product_state.hpp"

#include <stdexcept>

#include "superb/spin_algebra.hpp"

namespace superb::product {

double BlockWeights::total() const {
  double acc = 0.0;
  for (const auto& b : blocks) acc += b.multiplicity * b.w.sum();
  return acc;
}

const BlockWeights::Block& BlockWeights::block(SpinLabel l) const {
  for (const auto& b : blocks)
    if (b.l == l) return b;
  throw std::out_of_range("BlockWeights: no block with 2l = " +
                          std::to_string(l.two_j));
}

BlockWeights decompose(int n_copies, const BlochQubit& q) {
  if (n_copies < 1) throw std::invalid_argument("decompose: need N >= 1");
  BlockWeights out;
  out.n_copies = n_copies;
  out.axis = q.axis;
  for (int two_l = lowest_two_j(n_copies); two_l <= n_copies; two_l += 2) {
    BlockWeights::Block b;
    b.l = SpinLabel(two_l);
    b.multiplicity = spin::multiplicity(n_copies, b.l);
    b.w.resize(two_l + 1);
    for (int i = 0; i <= two_l; ++i)
      b.w(i) = spin::block_weight(n_copies, two_l, -two_l + 2 * i, q.r);
    out.blocks.push_back(std::move(b));
  }
  return out;
}

}  // namespace superb::product
