#pragma once

// Seeded random states shared by the unit and acceptance suites.

#include <random>
#include <vector>

#include "unpol/states.hpp"

namespace unpol::corpus {

inline Vector gaussian_vector(std::mt19937_64& rng, Eigen::Index size) {
  std::normal_distribution<double> g;
  Vector v(size);
  for (Eigen::Index i = 0; i < size; ++i) v(i) = Complex(g(rng), g(rng));
  return v;
}

/// Random unit vector supported on manifold n, embedded up to n_max.
inline PureStateVector random_pure(std::mt19937_64& rng, int n, int n_max) {
  Vector local = gaussian_vector(rng, n + 1);
  local.normalize();
  Vector full = Vector::Zero(static_cast<Eigen::Index>(truncated_dimension(n_max)));
  full.segment(static_cast<Eigen::Index>(flat_index({0, n})), n + 1) = local;
  return PureStateVector(std::move(full));
}

/// Random positive block on every manifold with random manifold probabilities.
inline DensityOperator random_mixed(std::mt19937_64& rng, int n_max) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::vector<double> p(static_cast<std::size_t>(n_max) + 1);
  double total = 0.0;
  for (double& x : p) total += (x = u(rng));
  std::vector<BlockOperator> blocks;
  for (int n = 0; n <= n_max; ++n) {
    Matrix g(n + 1, n + 1);
    for (Eigen::Index c = 0; c <= n; ++c) g.col(c) = gaussian_vector(rng, n + 1);
    Matrix pos = g * g.adjoint();
    pos = 0.5 * (pos + pos.adjoint()).eval();
    pos *= p[static_cast<std::size_t>(n)] / total / pos.trace().real();
    blocks.emplace_back(n, std::move(pos));
  }
  return DensityOperator(DirectSumOperator(std::move(blocks)));
}

/// Random nonnegative weights normalized so that sum (n+1) r_n = 1.
inline ManifoldWeights random_weights(std::mt19937_64& rng, int n_max) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> w(static_cast<std::size_t>(n_max) + 1);
  double total = 0.0;
  for (std::size_t n = 0; n < w.size(); ++n) {
    w[n] = u(rng);
    total += static_cast<double>(n + 1) * w[n];
  }
  for (double& x : w) x /= total;
  return ManifoldWeights(std::move(w));
}

}  // namespace unpol::corpus
