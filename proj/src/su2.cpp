#include "unpol/su2.hpp"

#include <cmath>
#include <string>

namespace unpol {

Generator generator_from_index(int k) {
  switch (k) {
    case 1: return Generator::L1;
    case 2: return Generator::L2;
    case 3: return Generator::L3;
    default:
      throw std::invalid_argument("generator index must be 1, 2 or 3, got " +
                                  std::to_string(k));
  }
}

int generator_index(Generator g) { return static_cast<int>(g); }

BlockOperator schwinger_block(Generator k, int n) {
  const int dim = manifold_dimension(n);
  Matrix m = Matrix::Zero(dim, dim);

  if (k == Generator::L3) {
    for (int n_a = 0; n_a <= n; ++n_a) {
      m(n_a, n_a) = 0.5 * (n_a - (n - n_a));
    }
    return {n, std::move(m)};
  }

  // raise(n_a + 1, n_a) is the a^+ b matrix element out of |n_a, n - n_a>.
  for (int n_a = 0; n_a < n; ++n_a) {
    const double raise = std::sqrt(static_cast<double>((n_a + 1) * (n - n_a)));
    if (k == Generator::L1) {
      m(n_a + 1, n_a) = 0.5 * raise;
      m(n_a, n_a + 1) = 0.5 * raise;
    } else {
      m(n_a + 1, n_a) = Complex(0.0, -0.5 * raise);
      m(n_a, n_a + 1) = Complex(0.0, 0.5 * raise);
    }
  }
  return {n, std::move(m)};
}

BlockOperator stokes_block(Generator k, int n) {
  return schwinger_block(k, n) * Complex(kStokesFactor);
}

BlockOperator photon_number_block(int n) {
  return BlockOperator::identity(n) * Complex(static_cast<double>(n));
}

BlockOperator casimir_block(int n) {
  const double j = 0.5 * n;
  return BlockOperator::identity(n) * Complex(j * (j + 1.0));
}

BlockOperator commutator(const BlockOperator& a, const BlockOperator& b) {
  return a * b - b * a;
}

DirectSumOperator schwinger_operator(Generator k, int n_max) {
  manifold_dimension(n_max);
  std::vector<BlockOperator> blocks;
  blocks.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) blocks.push_back(schwinger_block(k, n));
  return DirectSumOperator(std::move(blocks));
}

}  // namespace unpol
