#include "unpol/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "unpol/su2.hpp"

namespace unpol {

RandomSeed derive_seed(RandomSeed seed, std::uint64_t index) {
  // splitmix64 finalizer over the combined words
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double unitarity_residual(const BlockOperator& u) {
  const Matrix& m = u.matrix();
  return (m.adjoint() * m - Matrix::Identity(m.rows(), m.cols())).norm();
}

LosslessUnitary::LosslessUnitary(DirectSumOperator op) : op_(std::move(op)) {
  for (const auto& b : op_.blocks()) {
    const double tol = 1e-12 * b.dimension();
    if (unitarity_residual(b) > tol) {
      throw std::invalid_argument("block at manifold " +
                                  std::to_string(b.manifold()) +
                                  " is not unitary");
    }
  }
}

BlockOperator evolution_block(const Su2Angles& angles, int n) {
  if (!std::isfinite(angles.phi_1) || !std::isfinite(angles.phi_2) ||
      !std::isfinite(angles.phi_3)) {
    throw std::invalid_argument("evolution angles must be finite");
  }
  const Matrix generator =
      schwinger_block(Generator::L1, n).matrix() * angles.phi_1 +
      schwinger_block(Generator::L2, n).matrix() * angles.phi_2 +
      schwinger_block(Generator::L3, n).matrix() * angles.phi_3;

  const Eigen::SelfAdjointEigenSolver<Matrix> eig(generator);
  const Eigen::VectorXd& lambda = eig.eigenvalues();
  Vector phases(lambda.size());
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    phases(i) = std::polar(1.0, lambda(i));
  }
  const Matrix& v = eig.eigenvectors();
  return {n, v * phases.asDiagonal() * v.adjoint()};
}

LosslessUnitary evolution(const Su2Angles& angles, int n_max) {
  manifold_dimension(n_max);
  std::vector<BlockOperator> blocks;
  blocks.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) blocks.push_back(evolution_block(angles, n));
  return LosslessUnitary(DirectSumOperator(std::move(blocks)));
}

LosslessUnitary differential_phase(double theta, int n_max) {
  return evolution({0.0, 0.0, theta}, n_max);
}

LosslessUnitary geometric_rotation(double theta, int n_max) {
  return evolution({0.0, theta, 0.0}, n_max);
}

Su2Angles haar_su2_angles(RandomSeed seed) {
  // A uniform unit quaternion (cos(a/2), sin(a/2) axis) is Haar on SU(2).
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  double q[4];
  double norm = 0.0;
  do {
    norm = 0.0;
    for (double& c : q) {
      c = gauss(rng);
      norm += c * c;
    }
  } while (norm == 0.0);
  norm = std::sqrt(norm);
  for (double& c : q) c /= norm;

  const double axis_norm = std::sqrt(q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
  if (axis_norm == 0.0) return {};
  const double angle = 2.0 * std::acos(std::clamp(q[0], -1.0, 1.0));
  const double scale = angle / axis_norm;
  return {scale * q[1], scale * q[2], scale * q[3]};
}

LosslessUnitary haar_random_su2(RandomSeed seed, int n_max) {
  return evolution(haar_su2_angles(seed), n_max);
}

BlockOperator haar_unitary_block(int n, RandomSeed seed) {
  const int dim = manifold_dimension(n);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  Matrix z(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    for (Eigen::Index r = 0; r < dim; ++r) {
      z(r, c) = Complex(gauss(rng), gauss(rng)) * std::sqrt(0.5);
    }
  }
  const Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
  const Matrix& r = qr.matrixQR();
  // Fix the phase freedom of QR so that Q is Haar distributed.
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double mag = std::abs(r(i, i));
    const Complex phase = mag > 0.0 ? r(i, i) / mag : Complex(1.0);
    q.col(i) *= phase;
  }
  return {n, std::move(q)};
}

LosslessUnitary random_lossless(RandomSeed seed, int n_max) {
  manifold_dimension(n_max);
  std::vector<BlockOperator> blocks;
  blocks.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    blocks.push_back(haar_unitary_block(n, derive_seed(seed, static_cast<std::uint64_t>(n))));
  }
  return LosslessUnitary(DirectSumOperator(std::move(blocks)));
}

}  // namespace unpol
