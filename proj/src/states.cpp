#include "unpol/states.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace unpol {

namespace {

std::string describe(const DensityDiagnostics& d) {
  std::string msg = "invalid density operator:";
  if (!d.hermitian) msg += " hermiticity residual " + std::to_string(d.hermiticity_residual);
  if (!d.positive) msg += " min eigenvalue " + std::to_string(d.min_eigenvalue);
  if (!d.normalized) msg += " trace residual " + std::to_string(d.trace_residual);
  return msg;
}

// Number of non-negligible manifolds a vector touches.
int support_count(const PureStateVector& psi) {
  int count = 0;
  for (int n = 0; n <= psi.n_max(); ++n) {
    if (psi.manifold_component(n).squaredNorm() > 0.0) ++count;
  }
  return count;
}

}  // namespace

// ---------------------------------------------------------------------------
// DensityOperator

DensityOperator::DensityOperator(DirectSumOperator op, double truncation_deficit)
    : op_(std::move(op)), truncation_deficit_(truncation_deficit) {
  const DensityDiagnostics d = validate(*this);
  if (!d.passed()) throw std::invalid_argument(describe(d));
}

DensityOperator::DensityOperator(DirectSumOperator op, double truncation_deficit,
                                 NoCheck)
    : op_(std::move(op)), truncation_deficit_(truncation_deficit) {}

DensityOperator DensityOperator::unchecked(DirectSumOperator op,
                                           double truncation_deficit) {
  return {std::move(op), truncation_deficit, NoCheck{}};
}

double DensityOperator::trace() const {
  double t = 0.0;
  for (int n = 0; n <= n_max(); ++n) t += manifold_probability(n);
  return t;
}

double DensityOperator::manifold_probability(int n) const {
  return block(n).matrix().trace().real();
}

DensityDiagnostics validate(const DensityOperator& rho) {
  DensityDiagnostics d;
  d.min_eigenvalue = std::numeric_limits<double>::infinity();
  for (const auto& b : rho.op().blocks()) {
    const Matrix& m = b.matrix();
    const double herm = (m - m.adjoint()).norm();
    d.hermiticity_residual = std::max(d.hermiticity_residual, herm);
    if (herm > kHermiticityTolerance) d.hermitian = false;

    // Eigenvalues of the Hermitian part; the anti-Hermitian part is caught above.
    const Matrix sym = 0.5 * (m + m.adjoint());
    const Eigen::SelfAdjointEigenSolver<Matrix> eig(sym, Eigen::EigenvaluesOnly);
    const double lo = eig.eigenvalues().minCoeff();
    d.min_eigenvalue = std::min(d.min_eigenvalue, lo);
    if (lo < -kPositivityTolerance * b.dimension()) d.positive = false;
  }
  // Exact zeros read better than -0 or 1e-17 in reports.
  if (std::abs(d.min_eigenvalue) < std::numeric_limits<double>::epsilon()) {
    d.min_eigenvalue = 0.0;
  }
  d.trace_residual = std::abs(rho.trace() + rho.truncation_deficit() - 1.0);
  d.normalized = d.trace_residual <= kTraceTolerance;
  return d;
}

// ---------------------------------------------------------------------------
// ManifoldWeights

ManifoldWeights::ManifoldWeights(std::vector<double> weights)
    : weights_(std::move(weights)) {
  if (weights_.empty()) {
    throw std::invalid_argument("at least one manifold weight is required");
  }
  for (std::size_t n = 0; n < weights_.size(); ++n) {
    if (!std::isfinite(weights_[n]) || weights_[n] < 0.0) {
      throw std::invalid_argument("manifold weight r_" + std::to_string(n) +
                                  " must be a nonnegative number");
    }
  }
  const double total = normalization();
  if (std::abs(total - 1.0) > kTraceTolerance) {
    throw std::invalid_argument("weights give sum (n+1) r_n = " +
                                std::to_string(total) + ", expected 1");
  }
}

double ManifoldWeights::normalization() const {
  double total = 0.0;
  for (std::size_t n = 0; n < weights_.size(); ++n) {
    total += static_cast<double>(n + 1) * weights_[n];
  }
  return total;
}

// ---------------------------------------------------------------------------
// PureStateVector

PureStateVector::PureStateVector(Vector amplitudes)
    : amplitudes_(std::move(amplitudes)), n_max_(-1) {
  const auto size = static_cast<std::size_t>(amplitudes_.size());
  for (int m = 0; truncated_dimension(m) <= size; ++m) {
    if (truncated_dimension(m) == size) {
      n_max_ = m;
      break;
    }
  }
  if (n_max_ < 0) {
    throw std::invalid_argument("amplitude count " + std::to_string(size) +
                                " is not (n_max+1)(n_max+2)/2 for any n_max");
  }
  if (std::abs(amplitudes_.norm() - 1.0) > 1e-12) {
    throw std::invalid_argument("pure state must have unit norm");
  }
}

PureStateVector PureStateVector::number_state(const ModeOccupation& occ,
                                              int n_max) {
  if (occ.total() > n_max) {
    throw TruncationError("number state lies above n_max");
  }
  Vector v = Vector::Zero(static_cast<Eigen::Index>(truncated_dimension(n_max)));
  v(static_cast<Eigen::Index>(flat_index(occ))) = 1.0;
  return PureStateVector(std::move(v));
}

Vector PureStateVector::manifold_component(int n) const {
  if (n < 0 || n > n_max_) throw TruncationError("manifold outside state");
  const auto start = static_cast<Eigen::Index>(flat_index({0, n}));
  return amplitudes_.segment(start, n + 1);
}

// ---------------------------------------------------------------------------
// Constructors

DensityOperator unpolarized_state(const ManifoldWeights& weights) {
  std::vector<BlockOperator> blocks;
  blocks.reserve(weights.values().size());
  for (int n = 0; n <= weights.n_max(); ++n) {
    blocks.push_back(BlockOperator::identity(n) * Complex(weights[n]));
  }
  return DensityOperator(DirectSumOperator(std::move(blocks)));
}

namespace {

double thermal_ratio(double mean_photons) {
  if (!(mean_photons > 0.0) || !std::isfinite(mean_photons)) {
    throw std::invalid_argument("mean photon number must be positive");
  }
  return mean_photons / (1.0 + mean_photons);
}

}  // namespace

double thermal_truncation_deficit(double mean_photons, int n_max) {
  const double x = thermal_ratio(mean_photons);
  manifold_dimension(n_max);
  // sum_{n<=M} (n+1) x^n = (1 - (M+2) x^{M+1} + (M+1) x^{M+2}) / (1-x)^2
  const double m = n_max;
  const double tail = std::pow(x, m + 1.0);
  return (m + 2.0) * tail - (m + 1.0) * tail * x;
}

std::vector<double> thermal_weights(double mean_photons, int n_max) {
  const double x = thermal_ratio(mean_photons);
  manifold_dimension(n_max);
  const double ground = (1.0 - x) * (1.0 - x);
  std::vector<double> w(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) w[static_cast<std::size_t>(n)] = ground * std::pow(x, n);
  return w;
}

DensityOperator thermal_state(double mean_photons, int n_max) {
  const std::vector<double> w = thermal_weights(mean_photons, n_max);
  const double deficit = thermal_truncation_deficit(mean_photons, n_max);
  std::vector<BlockOperator> blocks;
  blocks.reserve(w.size());
  for (int n = 0; n <= n_max; ++n) {
    blocks.push_back(BlockOperator::identity(n) * Complex(w[static_cast<std::size_t>(n)]));
  }
  return DensityOperator(DirectSumOperator(std::move(blocks)), deficit);
}

DensityOperator renormalized(const DensityOperator& rho) {
  const double t = rho.trace();
  if (!(t > 0.0)) throw std::invalid_argument("cannot renormalize a zero operator");
  std::vector<BlockOperator> blocks;
  blocks.reserve(rho.op().blocks().size());
  for (const auto& b : rho.op().blocks()) blocks.push_back(b * Complex(1.0 / t));
  return DensityOperator(DirectSumOperator(std::move(blocks)));
}

PureDensity pure_density(const PureStateVector& psi) {
  std::vector<BlockOperator> blocks;
  blocks.reserve(static_cast<std::size_t>(psi.n_max()) + 1);
  for (int n = 0; n <= psi.n_max(); ++n) {
    const Vector c = psi.manifold_component(n);
    blocks.emplace_back(n, c * c.adjoint());
  }
  return {DensityOperator(DirectSumOperator(std::move(blocks))),
          support_count(psi) > 1};
}

}  // namespace unpol
