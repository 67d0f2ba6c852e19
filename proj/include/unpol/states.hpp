#pragma once

// Density operators on the truncated two-mode space.
//
// States are block diagonal over excitation manifolds. Coherences between
// manifolds are not representable; pure_density() dephases them and says so.

#include <vector>

#include "unpol/fock.hpp"

namespace unpol {

/// Residuals checked against the density-operator invariants.
struct DensityDiagnostics {
  double hermiticity_residual = 0.0;  // max over blocks of ||rho_n - rho_n^+||_F
  double min_eigenvalue = 0.0;        // smallest eigenvalue over all blocks
  double trace_residual = 0.0;        // |tr rho + truncation_deficit - 1|
  bool hermitian = true;
  bool positive = true;
  bool normalized = true;

  bool passed() const { return hermitian && positive && normalized; }
};

inline constexpr double kHermiticityTolerance = 1e-12;
inline constexpr double kPositivityTolerance = 1e-10;  // times (n + 1)
inline constexpr double kTraceTolerance = 1e-10;

class DensityOperator {
 public:
  /// Validates the invariants and throws std::invalid_argument on failure.
  explicit DensityOperator(DirectSumOperator op, double truncation_deficit = 0.0);

  /// Skips validation; for diagnostics on operators that may be invalid.
  static DensityOperator unchecked(DirectSumOperator op,
                                   double truncation_deficit = 0.0);

  int n_max() const { return op_.n_max(); }
  const BlockOperator& block(int n) const { return op_.block(n); }
  const DirectSumOperator& op() const { return op_; }

  /// Probability weight cut away by truncation (0 when nothing was lost).
  double truncation_deficit() const { return truncation_deficit_; }

  double trace() const;
  /// tr rho_n, the probability of finding n photons.
  double manifold_probability(int n) const;

 private:
  struct NoCheck {};
  DensityOperator(DirectSumOperator op, double truncation_deficit, NoCheck);

  DirectSumOperator op_;
  double truncation_deficit_;
};

DensityDiagnostics validate(const DensityOperator& rho);

/// Weights r_n, n = 0..n_max, of a block-scalar state. Each manifold holds
/// r_n * I, so normalization reads sum_n (n + 1) r_n = 1.
class ManifoldWeights {
 public:
  /// Throws std::invalid_argument for negative weights or when the
  /// normalization misses 1 by more than 1e-10.
  explicit ManifoldWeights(std::vector<double> weights);

  int n_max() const { return static_cast<int>(weights_.size()) - 1; }
  double operator[](int n) const { return weights_.at(static_cast<std::size_t>(n)); }
  const std::vector<double>& values() const { return weights_; }

  /// sum_n (n + 1) r_n
  double normalization() const;

 private:
  std::vector<double> weights_;
};

/// Unit-norm amplitudes in flat basis order (see flat_index).
class PureStateVector {
 public:
  /// Throws std::invalid_argument if the size is not a truncated dimension or
  /// the norm differs from 1 by more than 1e-12.
  explicit PureStateVector(Vector amplitudes);

  static PureStateVector number_state(const ModeOccupation& occ, int n_max);

  int n_max() const { return n_max_; }
  const Vector& amplitudes() const { return amplitudes_; }
  /// Amplitudes restricted to manifold n, ordered by n_a.
  Vector manifold_component(int n) const;

 private:
  Vector amplitudes_;
  int n_max_;
};

struct PureDensity {
  DensityOperator rho;
  bool coherences_discarded = false;
};

DensityOperator unpolarized_state(const ManifoldWeights& weights);

/// Two-mode thermal state with mean photon number per mode `mean_photons`,
/// truncated at n_max. The weight beyond n_max is recorded as the truncation
/// deficit; the kept blocks are not renormalized.
DensityOperator thermal_state(double mean_photons, int n_max);

/// Per-basis-state weights (1 - x)^2 x^n, x = nbar / (1 + nbar), for
/// n = 0..n_max. Not renormalized.
std::vector<double> thermal_weights(double mean_photons, int n_max);

/// 1 - (1 - x)^2 sum_{n <= n_max} (n + 1) x^n, in closed form.
double thermal_truncation_deficit(double mean_photons, int n_max);

/// Rescales the kept blocks to unit trace and clears the deficit.
DensityOperator renormalized(const DensityOperator& rho);

/// |psi><psi| restricted to its block-diagonal part.
PureDensity pure_density(const PureStateVector& psi);

}  // namespace unpol
