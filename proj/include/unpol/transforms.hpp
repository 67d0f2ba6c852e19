#pragma once

// Lossless (excitation-conserving) unitaries on the truncated two-mode space.
//
// The linear family U(phi) = exp(i (phi1 L1 + phi2 L2 + phi3 L3)) is built
// block by block from the Hermitian eigendecomposition of the generator.
// Differential phase shifts are generated by L3 and geometric rotations
// about the propagation axis by L2. Choosing the pair (L1, L2) or (L1, L3)
// instead defines the same unpolarized set.

#include <cstdint>

#include "unpol/fock.hpp"

namespace unpol {

struct Su2Angles {
  double phi_1 = 0.0;
  double phi_2 = 0.0;
  double phi_3 = 0.0;
};

using RandomSeed = std::uint64_t;

/// Stream seed for trial `index` of a run seeded with `seed`. Independent of
/// evaluation order.
RandomSeed derive_seed(RandomSeed seed, std::uint64_t index);

/// Direct sum of unitary blocks.
class LosslessUnitary {
 public:
  /// Throws std::invalid_argument if any block fails U^+U = I to
  /// 1e-12 * (n + 1) in Frobenius norm.
  explicit LosslessUnitary(DirectSumOperator op);

  int n_max() const { return op_.n_max(); }
  const BlockOperator& block(int n) const { return op_.block(n); }
  const DirectSumOperator& op() const { return op_; }

 private:
  DirectSumOperator op_;
};

/// Frobenius norm of U^+U - I.
double unitarity_residual(const BlockOperator& u);

BlockOperator evolution_block(const Su2Angles& angles, int n);
LosslessUnitary evolution(const Su2Angles& angles, int n_max);

LosslessUnitary differential_phase(double theta, int n_max);
LosslessUnitary geometric_rotation(double theta, int n_max);

/// Angles whose n = 1 block is Haar-distributed on SU(2).
Su2Angles haar_su2_angles(RandomSeed seed);
LosslessUnitary haar_random_su2(RandomSeed seed, int n_max);

/// Haar-random U(n + 1) matrix, drawn independently for each manifold.
BlockOperator haar_unitary_block(int n, RandomSeed seed);
LosslessUnitary random_lossless(RandomSeed seed, int n_max);

}  // namespace unpol
