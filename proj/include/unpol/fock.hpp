#pragma once

// Two-mode Fock basis and the excitation-manifold direct-sum data model.
//
// Every operator in this library conserves the total photon number, so it is
// stored as one dense block per manifold n = n_a + n_b (dimension n + 1).
// Inside a manifold the basis is ordered by n_a ascending:
//   |0,n>, |1,n-1>, ..., |n,0>
// Cross-manifold matrix elements are identically zero and never stored.

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace unpol {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Raised when a manifold index exceeds the truncation of the operator it
/// is being placed into.
class TruncationError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Raised when two operators live on different manifolds or truncations.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Basis label |n_a, n_b> of the two-mode Fock space.
struct ModeOccupation {
  int n_a = 0;
  int n_b = 0;

  int total() const { return n_a + n_b; }
  bool operator==(const ModeOccupation&) const = default;
};

/// Position of a basis state: its manifold and its offset inside it.
struct BasisPosition {
  int manifold = 0;
  int offset = 0;

  bool operator==(const BasisPosition&) const = default;
};

/// Number of basis states with n photons in total.
int manifold_dimension(int n);

/// Dimension of the space truncated to manifolds 0..n_max.
std::size_t truncated_dimension(int n_max);

BasisPosition basis_offset(const ModeOccupation& occ);
ModeOccupation occupation_at(const BasisPosition& pos);

/// Index of a basis state in the flat ordering (manifolds ascending, then
/// offset ascending): |0,0>, |0,1>, |1,0>, |0,2>, |1,1>, |2,0>, ...
std::size_t flat_index(const ModeOccupation& occ);

/// Dense operator acting inside a single excitation manifold.
class BlockOperator {
 public:
  BlockOperator(int n, Matrix entries);

  static BlockOperator zero(int n);
  static BlockOperator identity(int n);

  int manifold() const { return n_; }
  int dimension() const { return n_ + 1; }
  const Matrix& matrix() const { return entries_; }

  BlockOperator adjoint() const;

  BlockOperator operator+(const BlockOperator& other) const;
  BlockOperator operator-(const BlockOperator& other) const;
  BlockOperator operator*(const BlockOperator& other) const;
  BlockOperator operator*(Complex scale) const;

 private:
  void require_same_manifold(const BlockOperator& other) const;

  int n_;
  Matrix entries_;
};

/// Excitation-conserving operator truncated to manifolds 0..n_max.
class DirectSumOperator {
 public:
  explicit DirectSumOperator(std::vector<BlockOperator> blocks);

  static DirectSumOperator zero(int n_max);
  static DirectSumOperator identity(int n_max);

  int n_max() const { return static_cast<int>(blocks_.size()) - 1; }
  std::size_t total_dimension() const;

  const BlockOperator& block(int n) const;
  const std::vector<BlockOperator>& blocks() const { return blocks_; }

  DirectSumOperator adjoint() const;
  DirectSumOperator operator*(const DirectSumOperator& other) const;

  /// Dense matrix on the truncated space in flat basis order.
  Matrix to_dense() const;

 private:
  std::vector<BlockOperator> blocks_;
};

/// Direct sum that equals `block` on its manifold and zero elsewhere.
DirectSumOperator embed_block(const BlockOperator& block, int n_max);

}  // namespace unpol
