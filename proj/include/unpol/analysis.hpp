#pragma once

// Detectors for unpolarized light and the checks around them.
//
// A state is unpolarized when it commutes with the generators of geometric
// rotations (L2) and differential phase shifts (L3). Since [L2, L3] = i L1,
// it then commutes with L1 too, and since each manifold carries an
// irreducible representation, every block must be a multiple of the identity.
// The routes below test these statements independently:
//
//   * block-scalar residual   ||rho_n - (tr rho_n / (n+1)) I||_F
//   * commutator norms        ||[rho_n, L_k]||_F, k = 1, 2, 3
//   * commutant dimension     brute-force nullspace of the commutation map
//   * invariance Monte Carlo  ||U rho U^+ - rho||_F over sampled unitaries

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "unpol/states.hpp"
#include "unpol/su2.hpp"
#include "unpol/transforms.hpp"

namespace unpol {

/// Per-block tolerance is kDefaultTolerance * (n + 1).
inline constexpr double kDefaultTolerance = 1e-10;

/// ||[rho_n, L_k]||_F, indexed [n][k - 1].
using CommutatorNorms = std::vector<std::array<double, 3>>;

struct UnpolarizationReport {
  double tolerance = kDefaultTolerance;
  CommutatorNorms commutator_norms;
  std::vector<double> block_scalar_residuals;
  bool block_scalar_verdict = false;
  bool commutator_verdict = false;
  /// Both routes agree that the state is unpolarized.
  bool verdict = false;
};

CommutatorNorms commutator_norms(const DensityOperator& rho);

/// Distance of each block from its trace-matched multiple of the identity.
std::vector<double> block_scalar_residuals(const DensityOperator& rho);

UnpolarizationReport is_unpolarized(const DensityOperator& rho,
                                    double tol = kDefaultTolerance);

// ---------------------------------------------------------------------------
// Commutant oracle

inline constexpr double kRankCutoff = 1e-8;

/// Real basis of the Hermitian (n+1)x(n+1) matrices: diagonal units, then
/// symmetric and antisymmetric off-diagonal pairs. Size (n+1)^2.
std::vector<Matrix> hermitian_basis(int n);

/// Hermitian matrices X on manifold n with [X, g] = 0 for every g in
/// `generators`, as an orthonormal basis (Frobenius inner product).
std::vector<Matrix> commutant_basis(int n, std::span<const Generator> generators);

/// Dimension of the real space of Hermitian X with [X, L2] = [X, L3] = 0.
int commutant_dimension(int n);

// ---------------------------------------------------------------------------
// Invariance

enum class TransformFamily { Linear, General };

/// sum_n ||U_n rho_n U_n^+ - rho_n||_F
double invariance_deviation(const DensityOperator& rho, const LosslessUnitary& u);

/// U rho U^+ with the truncation deficit carried over.
DensityOperator transformed(const DensityOperator& rho, const LosslessUnitary& u);

struct MonteCarloResult {
  double max_deviation = 0.0;
  int trials = 0;
};

/// Max of invariance_deviation over `trials` unitaries of the family. Trial i
/// uses derive_seed(seed, i), so the result depends only on the arguments.
MonteCarloResult monte_carlo_invariance(const DensityOperator& rho, int trials,
                                        RandomSeed seed, TransformFamily family);

/// Threshold matching is_unpolarized: tol * sum_n (n + 1).
double invariance_threshold(int n_max, double tol = kDefaultTolerance);

// ---------------------------------------------------------------------------
// Stokes moments

inline constexpr int kMaxMomentOrder = 6;

/// <L_{k1} L_{k2} ... L_{km}> for all index tuples, k1 most significant.
class MomentTensor {
 public:
  MomentTensor(int order, std::vector<Complex> entries);

  int order() const { return order_; }
  std::size_t size() const { return entries_.size(); }
  const std::vector<Complex>& entries() const { return entries_; }

  /// Entry for generator indices in {1, 2, 3}.
  Complex at(std::span<const int> indices) const;
  Complex at(std::initializer_list<int> indices) const;

  /// Generator indices of the flat entry `flat`.
  std::vector<int> indices_of(std::size_t flat) const;

 private:
  int order_;
  std::vector<Complex> entries_;
};

/// Throws std::invalid_argument unless 1 <= order <= kMaxMomentOrder.
MomentTensor stokes_moment_tensor(const DensityOperator& rho, int order);

/// Vanishing Stokes vector: |<L_k>| <= tol for k = 1, 2, 3.
bool classical_unpolarized_test(const DensityOperator& rho, double tol = kDefaultTolerance);

// ---------------------------------------------------------------------------
// Rotation-invariant states

struct RotationEigenstate {
  double eigenvalue = 0.0;
  Vector vector;
};

/// Eigenstates of L2 on manifold n, eigenvalues ascending from -n/2 to n/2.
std::vector<RotationEigenstate> rotation_eigenbasis(int n);

}  // namespace unpol
