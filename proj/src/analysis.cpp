#include "unpol/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace unpol {

namespace {

double block_tolerance(double tol, int n) { return tol * (n + 1); }

}  // namespace

CommutatorNorms commutator_norms(const DensityOperator& rho) {
  CommutatorNorms norms(static_cast<std::size_t>(rho.n_max()) + 1);
  for (int n = 0; n <= rho.n_max(); ++n) {
    for (Generator g : kGenerators) {
      norms[static_cast<std::size_t>(n)][static_cast<std::size_t>(generator_index(g) - 1)] =
          commutator(rho.block(n), schwinger_block(g, n)).matrix().norm();
    }
  }
  return norms;
}

std::vector<double> block_scalar_residuals(const DensityOperator& rho) {
  std::vector<double> residuals;
  residuals.reserve(static_cast<std::size_t>(rho.n_max()) + 1);
  for (const auto& b : rho.op().blocks()) {
    const Matrix& m = b.matrix();
    const Complex mean = m.trace() / static_cast<double>(b.dimension());
    residuals.push_back((m - mean * Matrix::Identity(m.rows(), m.cols())).norm());
  }
  return residuals;
}

UnpolarizationReport is_unpolarized(const DensityOperator& rho, double tol) {
  UnpolarizationReport report;
  report.tolerance = tol;
  report.commutator_norms = commutator_norms(rho);
  report.block_scalar_residuals = block_scalar_residuals(rho);
  report.block_scalar_verdict = true;
  report.commutator_verdict = true;
  for (int n = 0; n <= rho.n_max(); ++n) {
    const auto i = static_cast<std::size_t>(n);
    const double limit = block_tolerance(tol, n);
    if (report.block_scalar_residuals[i] > limit) report.block_scalar_verdict = false;
    for (double c : report.commutator_norms[i]) {
      if (c > limit) report.commutator_verdict = false;
    }
  }
  report.verdict = report.block_scalar_verdict && report.commutator_verdict;
  return report;
}

// ---------------------------------------------------------------------------
// Commutant oracle

std::vector<Matrix> hermitian_basis(int n) {
  const int dim = manifold_dimension(n);
  const double s = 1.0 / std::sqrt(2.0);
  std::vector<Matrix> basis;
  basis.reserve(static_cast<std::size_t>(dim * dim));
  for (int i = 0; i < dim; ++i) {
    Matrix e = Matrix::Zero(dim, dim);
    e(i, i) = 1.0;
    basis.push_back(std::move(e));
  }
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      Matrix sym = Matrix::Zero(dim, dim);
      sym(i, j) = s;
      sym(j, i) = s;
      basis.push_back(std::move(sym));

      Matrix anti = Matrix::Zero(dim, dim);
      anti(i, j) = Complex(0.0, s);
      anti(j, i) = Complex(0.0, -s);
      basis.push_back(std::move(anti));
    }
  }
  return basis;
}

std::vector<Matrix> commutant_basis(int n, std::span<const Generator> generators) {
  const std::vector<Matrix> basis = hermitian_basis(n);
  if (generators.empty()) return basis;
  const auto unknowns = static_cast<Eigen::Index>(basis.size());
  const Eigen::Index dim = n + 1;
  const Eigen::Index rows_per_generator = 2 * dim * dim;

  // Column a holds [B_a, g] for each g, split into real and imaginary parts.
  Eigen::MatrixXd constraints = Eigen::MatrixXd::Zero(
      rows_per_generator * static_cast<Eigen::Index>(generators.size()), unknowns);
  for (std::size_t gi = 0; gi < generators.size(); ++gi) {
    const Matrix g = schwinger_block(generators[gi], n).matrix();
    const Eigen::Index row0 = rows_per_generator * static_cast<Eigen::Index>(gi);
    for (Eigen::Index a = 0; a < unknowns; ++a) {
      const Matrix& b = basis[static_cast<std::size_t>(a)];
      const Matrix c = b * g - g * b;
      const Eigen::Map<const Vector> flat(c.data(), c.size());
      constraints.block(row0, a, dim * dim, 1) = flat.real();
      constraints.block(row0 + dim * dim, a, dim * dim, 1) = flat.imag();
    }
  }

  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(constraints, Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double largest = sv.size() > 0 ? sv(0) : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (largest > 0.0 && sv(i) > kRankCutoff * largest) ++rank;
  }

  std::vector<Matrix> out;
  const Eigen::MatrixXd& v = svd.matrixV();
  for (Eigen::Index col = rank; col < unknowns; ++col) {
    Matrix x = Matrix::Zero(dim, dim);
    for (Eigen::Index a = 0; a < unknowns; ++a) {
      x += v(a, col) * basis[static_cast<std::size_t>(a)];
    }
    out.push_back(std::move(x));
  }
  return out;
}

int commutant_dimension(int n) {
  constexpr std::array<Generator, 2> kRotationAndPhase = {Generator::L2, Generator::L3};
  return static_cast<int>(commutant_basis(n, kRotationAndPhase).size());
}

// ---------------------------------------------------------------------------
// Invariance

namespace {

void require_same_truncation(const DensityOperator& rho, const LosslessUnitary& u) {
  if (rho.n_max() != u.n_max()) {
    throw DimensionMismatch("state has n_max=" + std::to_string(rho.n_max()) +
                            " but unitary has n_max=" + std::to_string(u.n_max()));
  }
}

}  // namespace

double invariance_deviation(const DensityOperator& rho, const LosslessUnitary& u) {
  require_same_truncation(rho, u);
  double total = 0.0;
  for (int n = 0; n <= rho.n_max(); ++n) {
    const Matrix& r = rho.block(n).matrix();
    const Matrix& m = u.block(n).matrix();
    total += (m * r * m.adjoint() - r).norm();
  }
  return total;
}

DensityOperator transformed(const DensityOperator& rho, const LosslessUnitary& u) {
  require_same_truncation(rho, u);
  std::vector<BlockOperator> blocks;
  blocks.reserve(static_cast<std::size_t>(rho.n_max()) + 1);
  for (int n = 0; n <= rho.n_max(); ++n) {
    const Matrix& m = u.block(n).matrix();
    Matrix r = m * rho.block(n).matrix() * m.adjoint();
    // Restore exact Hermiticity lost to rounding.
    r = 0.5 * (r + r.adjoint()).eval();
    blocks.emplace_back(n, std::move(r));
  }
  return DensityOperator(DirectSumOperator(std::move(blocks)), rho.truncation_deficit());
}

MonteCarloResult monte_carlo_invariance(const DensityOperator& rho, int trials,
                                        RandomSeed seed, TransformFamily family) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  MonteCarloResult result;
  result.trials = trials;
  for (int t = 0; t < trials; ++t) {
    const RandomSeed s = derive_seed(seed, static_cast<std::uint64_t>(t));
    const LosslessUnitary u = family == TransformFamily::Linear
                                  ? haar_random_su2(s, rho.n_max())
                                  : random_lossless(s, rho.n_max());
    result.max_deviation = std::max(result.max_deviation, invariance_deviation(rho, u));
  }
  return result;
}

double invariance_threshold(int n_max, double tol) {
  return tol * static_cast<double>(truncated_dimension(n_max));
}

// ---------------------------------------------------------------------------
// Stokes moments

MomentTensor::MomentTensor(int order, std::vector<Complex> entries)
    : order_(order), entries_(std::move(entries)) {
  std::size_t expected = 1;
  for (int i = 0; i < order_; ++i) expected *= 3;
  if (order_ < 1 || entries_.size() != expected) {
    throw std::invalid_argument("moment tensor needs 3^order entries");
  }
}

Complex MomentTensor::at(std::span<const int> indices) const {
  if (static_cast<int>(indices.size()) != order_) {
    throw std::invalid_argument("expected " + std::to_string(order_) + " indices");
  }
  std::size_t flat = 0;
  for (int k : indices) {
    if (k < 1 || k > 3) throw std::out_of_range("generator index must be 1..3");
    flat = flat * 3 + static_cast<std::size_t>(k - 1);
  }
  return entries_[flat];
}

Complex MomentTensor::at(std::initializer_list<int> indices) const {
  return at(std::span<const int>(indices.begin(), indices.size()));
}

std::vector<int> MomentTensor::indices_of(std::size_t flat) const {
  std::vector<int> out(static_cast<std::size_t>(order_));
  for (int i = order_ - 1; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = static_cast<int>(flat % 3) + 1;
    flat /= 3;
  }
  return out;
}

namespace {

// Adds tr(prefix * L_{k_depth} ... L_{k_order}) to every entry below `flat`.
void accumulate_moments(const Matrix& prefix, const std::array<Matrix, 3>& gens,
                        int depth, int order, std::size_t flat,
                        std::vector<Complex>& entries) {
  if (depth == order) {
    entries[flat] += prefix.trace();
    return;
  }
  for (std::size_t k = 0; k < 3; ++k) {
    accumulate_moments(prefix * gens[k], gens, depth + 1, order, flat * 3 + k, entries);
  }
}

}  // namespace

MomentTensor stokes_moment_tensor(const DensityOperator& rho, int order) {
  if (order < 1 || order > kMaxMomentOrder) {
    throw std::invalid_argument("moment order must be between 1 and " +
                                std::to_string(kMaxMomentOrder) + ", got " +
                                std::to_string(order));
  }
  std::size_t count = 1;
  for (int i = 0; i < order; ++i) count *= 3;
  std::vector<Complex> entries(count, Complex(0.0));
  for (int n = 0; n <= rho.n_max(); ++n) {
    const std::array<Matrix, 3> gens = {schwinger_block(Generator::L1, n).matrix(),
                                        schwinger_block(Generator::L2, n).matrix(),
                                        schwinger_block(Generator::L3, n).matrix()};
    accumulate_moments(rho.block(n).matrix(), gens, 0, order, 0, entries);
  }
  return MomentTensor(order, std::move(entries));
}

bool classical_unpolarized_test(const DensityOperator& rho, double tol) {
  const MomentTensor first = stokes_moment_tensor(rho, 1);
  return std::all_of(first.entries().begin(), first.entries().end(),
                     [tol](const Complex& c) { return std::abs(c) <= tol; });
}

// ---------------------------------------------------------------------------
// Rotation-invariant states

std::vector<RotationEigenstate> rotation_eigenbasis(int n) {
  const Eigen::SelfAdjointEigenSolver<Matrix> eig(
      schwinger_block(Generator::L2, n).matrix());
  std::vector<RotationEigenstate> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  for (Eigen::Index i = 0; i <= n; ++i) {
    out.push_back({eig.eigenvalues()(i), eig.eigenvectors().col(i)});
  }
  return out;
}

}  // namespace unpol
