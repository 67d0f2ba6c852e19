#include "unpol/fock.hpp"

#include <string>

namespace unpol {

namespace {

void require_manifold(int n) {
  if (n < 0) {
    throw std::invalid_argument("manifold index must be nonnegative, got " +
                                std::to_string(n));
  }
}

}  // namespace

int manifold_dimension(int n) {
  require_manifold(n);
  return n + 1;
}

std::size_t truncated_dimension(int n_max) {
  require_manifold(n_max);
  const auto m = static_cast<std::size_t>(n_max);
  return (m + 1) * (m + 2) / 2;
}

BasisPosition basis_offset(const ModeOccupation& occ) {
  if (occ.n_a < 0 || occ.n_b < 0) {
    throw std::invalid_argument("mode occupations must be nonnegative");
  }
  return {occ.total(), occ.n_a};
}

ModeOccupation occupation_at(const BasisPosition& pos) {
  require_manifold(pos.manifold);
  if (pos.offset < 0 || pos.offset > pos.manifold) {
    throw std::out_of_range("offset outside manifold");
  }
  return {pos.offset, pos.manifold - pos.offset};
}

std::size_t flat_index(const ModeOccupation& occ) {
  const BasisPosition pos = basis_offset(occ);
  const std::size_t before =
      pos.manifold == 0 ? 0 : truncated_dimension(pos.manifold - 1);
  return before + static_cast<std::size_t>(pos.offset);
}

// ---------------------------------------------------------------------------
// BlockOperator

BlockOperator::BlockOperator(int n, Matrix entries)
    : n_(n), entries_(std::move(entries)) {
  require_manifold(n);
  if (entries_.rows() != n + 1 || entries_.cols() != n + 1) {
    throw DimensionMismatch("block at manifold " + std::to_string(n) +
                            " must be " + std::to_string(n + 1) + "x" +
                            std::to_string(n + 1));
  }
}

BlockOperator BlockOperator::zero(int n) {
  require_manifold(n);
  return {n, Matrix::Zero(n + 1, n + 1)};
}

BlockOperator BlockOperator::identity(int n) {
  require_manifold(n);
  return {n, Matrix::Identity(n + 1, n + 1)};
}

BlockOperator BlockOperator::adjoint() const {
  return {n_, entries_.adjoint()};
}

void BlockOperator::require_same_manifold(const BlockOperator& other) const {
  if (other.n_ != n_) {
    throw DimensionMismatch("blocks belong to manifolds " + std::to_string(n_) +
                            " and " + std::to_string(other.n_));
  }
}

BlockOperator BlockOperator::operator+(const BlockOperator& other) const {
  require_same_manifold(other);
  return {n_, entries_ + other.entries_};
}

BlockOperator BlockOperator::operator-(const BlockOperator& other) const {
  require_same_manifold(other);
  return {n_, entries_ - other.entries_};
}

BlockOperator BlockOperator::operator*(const BlockOperator& other) const {
  require_same_manifold(other);
  return {n_, entries_ * other.entries_};
}

BlockOperator BlockOperator::operator*(Complex scale) const {
  return {n_, entries_ * scale};
}

// ---------------------------------------------------------------------------
// DirectSumOperator

DirectSumOperator::DirectSumOperator(std::vector<BlockOperator> blocks)
    : blocks_(std::move(blocks)) {
  if (blocks_.empty()) {
    throw std::invalid_argument("direct sum needs at least the vacuum block");
  }
  for (std::size_t n = 0; n < blocks_.size(); ++n) {
    if (blocks_[n].manifold() != static_cast<int>(n)) {
      throw DimensionMismatch("block " + std::to_string(n) +
                              " carries manifold index " +
                              std::to_string(blocks_[n].manifold()));
    }
  }
  std::size_t total = 0;
  for (const auto& b : blocks_) total += static_cast<std::size_t>(b.dimension());
  if (total != truncated_dimension(n_max())) {
    throw std::logic_error("direct sum dimension does not match truncation");
  }
}

DirectSumOperator DirectSumOperator::zero(int n_max) {
  require_manifold(n_max);
  std::vector<BlockOperator> blocks;
  blocks.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) blocks.push_back(BlockOperator::zero(n));
  return DirectSumOperator(std::move(blocks));
}

DirectSumOperator DirectSumOperator::identity(int n_max) {
  require_manifold(n_max);
  std::vector<BlockOperator> blocks;
  blocks.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) blocks.push_back(BlockOperator::identity(n));
  return DirectSumOperator(std::move(blocks));
}

std::size_t DirectSumOperator::total_dimension() const {
  return truncated_dimension(n_max());
}

const BlockOperator& DirectSumOperator::block(int n) const {
  if (n < 0 || n > n_max()) {
    throw TruncationError("manifold " + std::to_string(n) +
                          " outside truncation n_max=" +
                          std::to_string(n_max()));
  }
  return blocks_[static_cast<std::size_t>(n)];
}

DirectSumOperator DirectSumOperator::adjoint() const {
  std::vector<BlockOperator> out;
  out.reserve(blocks_.size());
  for (const auto& b : blocks_) out.push_back(b.adjoint());
  return DirectSumOperator(std::move(out));
}

DirectSumOperator DirectSumOperator::operator*(
    const DirectSumOperator& other) const {
  if (other.n_max() != n_max()) {
    throw DimensionMismatch("direct sums have different truncations");
  }
  std::vector<BlockOperator> out;
  out.reserve(blocks_.size());
  for (std::size_t n = 0; n < blocks_.size(); ++n) {
    out.push_back(blocks_[n] * other.blocks_[n]);
  }
  return DirectSumOperator(std::move(out));
}

Matrix DirectSumOperator::to_dense() const {
  const auto dim = static_cast<Eigen::Index>(total_dimension());
  Matrix dense = Matrix::Zero(dim, dim);
  Eigen::Index offset = 0;
  for (const auto& b : blocks_) {
    const Eigen::Index d = b.dimension();
    dense.block(offset, offset, d, d) = b.matrix();
    offset += d;
  }
  return dense;
}

DirectSumOperator embed_block(const BlockOperator& block, int n_max) {
  if (block.manifold() > n_max) {
    throw TruncationError("block at manifold " +
                          std::to_string(block.manifold()) +
                          " does not fit n_max=" + std::to_string(n_max));
  }
  std::vector<BlockOperator> blocks;
  blocks.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    blocks.push_back(n == block.manifold() ? block : BlockOperator::zero(n));
  }
  return DirectSumOperator(std::move(blocks));
}

}  // namespace unpol
