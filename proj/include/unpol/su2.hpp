#pragma once

// Schwinger's two-mode realization of su(2), built manifold by manifold:
//
//   L1 = (a^+ b + a b^+) / 2
//   L2 = (a^+ b - a b^+) / 2i
//   L3 = (a^+ a - b^+ b) / 2
//
// Each block is assembled from the ladder matrix elements
//   a^+ b |n_a, n_b> = sqrt((n_a + 1) n_b) |n_a + 1, n_b - 1>,
// so blocks close exactly; nothing is truncated from infinite mode matrices.

#include <array>

#include "unpol/fock.hpp"

namespace unpol {

enum class Generator { L1 = 1, L2 = 2, L3 = 3 };

inline constexpr std::array<Generator, 3> kGenerators = {
    Generator::L1, Generator::L2, Generator::L3};

/// Stokes operators are S_k = kStokesFactor * L_k.
inline constexpr double kStokesFactor = 2.0;

/// Generator for k in {1, 2, 3}; throws std::invalid_argument otherwise.
Generator generator_from_index(int k);
int generator_index(Generator g);

BlockOperator schwinger_block(Generator k, int n);
BlockOperator stokes_block(Generator k, int n);

/// N = a^+ a + b^+ b restricted to manifold n, i.e. n * I.
BlockOperator photon_number_block(int n);

/// L1^2 + L2^2 + L3^2 on manifold n, i.e. (n/2)(n/2 + 1) * I.
BlockOperator casimir_block(int n);

/// AB - BA. Throws DimensionMismatch for blocks on different manifolds.
BlockOperator commutator(const BlockOperator& a, const BlockOperator& b);

/// L_k on every manifold up to n_max.
DirectSumOperator schwinger_operator(Generator k, int n_max);

}  // namespace unpol
