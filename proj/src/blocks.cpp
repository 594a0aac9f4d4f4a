#include "minci/blocks.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace minci {

std::string BasisState::to_string() const {
  std::string out;
  for (const BasisTerm &t : terms) {
    if (!out.empty()) {
      out += t.weight < 0 ? " - " : " + ";
    } else if (t.weight < 0) {
      out += "-";
    }
    const int w = std::abs(t.weight);
    if (w != 1) {
      out += std::to_string(w);
    }
    out += "|" + t.determinant + ">";
  }
  return out;
}

bool SymmetryBlock::uses_2s() const {
  return std::any_of(diagonal.begin(), diagonal.end(), [](const SymbolicEnergy &e) {
    return e.uses(IntegralSymbol::h22);
  });
}

bool SymmetryBlock::uses_2p() const {
  return std::any_of(diagonal.begin(), diagonal.end(), [](const SymbolicEnergy &e) {
    return e.uses(IntegralSymbol::h33);
  });
}

const std::vector<SymmetryBlock> &BlockCatalog::blocks(int electrons) const {
  const auto it = blocks_.find(electrons);
  if (electrons < 3 || electrons > 10 || it == blocks_.end()) {
    throw std::domain_error("symmetry blocks exist for 3..10 electrons, got " +
                            std::to_string(electrons));
  }
  return it->second;
}

const SymmetryBlock &BlockCatalog::find(int electrons, const SymmetryLabel &label) const {
  for (const SymmetryBlock &b : blocks(electrons)) {
    if (b.label == label) {
      return b;
    }
  }
  throw std::invalid_argument("no " + label.ascii() + " block for " +
                              std::to_string(electrons) + " electrons");
}

std::vector<SymmetryBlock> &BlockCatalog::mutable_blocks(int electrons) {
  return blocks_[electrons];
}

const std::vector<SymmetryBlock> &blocks_for(int electrons) {
  return default_catalog().blocks(electrons);
}

BlockMatrix evaluate_block(const SymmetryBlock &block, const IntegralSet &ints) {
  BlockMatrix m;
  m.label = block.label;
  m.dimension = block.dimension();
  m.h11 = block.diagonal.at(0).evaluate(ints);
  if (m.dimension == 2) {
    m.h22 = block.diagonal.at(1).evaluate(ints);
    m.h12 = block.cross ? block.cross->evaluate(ints) : 0.0;
  }
  return m;
}

std::vector<BlockEigenpair> solve_block(const BlockMatrix &matrix) {
  if (matrix.dimension == 1) {
    return {BlockEigenpair{matrix.h11, {1.0, 0.0}, std::nullopt, matrix.label, Root::lower}};
  }
  if (matrix.dimension != 2) {
    throw std::invalid_argument("blocks are 1x1 or 2x2");
  }
  const double h11 = matrix.h11, h22 = matrix.h22, h12 = matrix.h12;

  if (h12 == 0.0) {
    BlockEigenpair first{h11, {1.0, 0.0}, 0.0, matrix.label, Root::lower};
    BlockEigenpair second{h22, {0.0, 1.0}, std::nullopt, matrix.label, Root::upper};
    if (h22 < h11) {
      std::swap(first, second);
      first.root = Root::lower;
      first.mixing = 0.0;
      second.root = Root::upper;
      second.mixing = 0.0;
    }
    return {first, second};
  }

  const double mean = 0.5 * (h11 + h22);
  const double half_diff = 0.5 * (h22 - h11);
  const double radius = std::hypot(half_diff, h12);
  // c_+ c_- = -1; evaluate the root free of cancellation and invert.
  double c_plus, c_minus;
  if (half_diff >= 0.0) {
    c_plus = (half_diff + radius) / h12;
    c_minus = -1.0 / c_plus;
  } else {
    c_minus = (half_diff - radius) / h12;
    c_plus = -1.0 / c_minus;
  }
  auto pair = [&](double energy, double c, Root root) {
    const double n = 1.0 / std::sqrt(1.0 + c * c);
    return BlockEigenpair{energy, {n, c * n}, c, matrix.label, root};
  };
  return {pair(mean - radius, c_minus, Root::lower), pair(mean + radius, c_plus, Root::upper)};
}

} // namespace minci
