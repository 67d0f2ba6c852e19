#include <doctest.h>

#include "oracles.hpp"
#include "unpol/su2.hpp"

using namespace unpol;

namespace {

const Complex I(0.0, 1.0);

double tol(int n) { return 1e-12 * (n + 1); }

}  // namespace

TEST_CASE("L3 on the one-photon manifold") {
  const Matrix l3 = schwinger_block(Generator::L3, 1).matrix();
  CHECK(l3(0, 0) == Complex(-0.5));  // |0,1>
  CHECK(l3(1, 1) == Complex(0.5));   // |1,0>
  CHECK(l3(0, 1) == Complex(0.0));
  CHECK(l3(1, 0) == Complex(0.0));
}

TEST_CASE("L1 on the one-photon manifold") {
  // Oracle: ladder products on the full two-mode space.
  const Matrix expected = oracle::schwinger_from_modes(Generator::L1, 1);
  CHECK(std::abs(expected(0, 1) - 0.5) < 1e-15);
  CHECK(std::abs(expected(1, 0) - 0.5) < 1e-15);
  const Matrix l1 = schwinger_block(Generator::L1, 1).matrix();
  Matrix frozen(2, 2);
  frozen << 0.0, 0.5, 0.5, 0.0;
  CHECK((l1 - frozen).norm() == 0.0);
}

TEST_CASE("every generator annihilates the vacuum") {
  for (Generator g : kGenerators) {
    const Matrix m = schwinger_block(g, 0).matrix();
    CHECK(m.rows() == 1);
    CHECK(m(0, 0) == Complex(0.0));
  }
}

TEST_CASE("per-manifold blocks match the mode-operator construction") {
  for (int n = 0; n <= 8; ++n) {
    for (Generator g : kGenerators) {
      CAPTURE(n);
      CAPTURE(generator_index(g));
      const Matrix expected = oracle::schwinger_from_modes(g, n);
      CHECK((schwinger_block(g, n).matrix() - expected).norm() <= 1e-13);
    }
  }
}

TEST_CASE("commutation relations [L_k, L_l] = i eps_klm L_m") {
  for (int n = 0; n <= 10; ++n) {
    for (int k = 1; k <= 3; ++k) {
      for (int l = 1; l <= 3; ++l) {
        Matrix expected = Matrix::Zero(n + 1, n + 1);
        for (int m = 1; m <= 3; ++m) {
          expected += I * static_cast<double>(oracle::levi_civita(k, l, m)) *
                      schwinger_block(generator_from_index(m), n).matrix();
        }
        const Matrix got = commutator(schwinger_block(generator_from_index(k), n),
                                      schwinger_block(generator_from_index(l), n))
                               .matrix();
        CHECK((got - expected).norm() <= tol(n));
      }
    }
  }
}

TEST_CASE("named commutator examples") {
  const auto l1 = schwinger_block(Generator::L1, 1);
  const auto l2 = schwinger_block(Generator::L2, 1);
  const auto l3 = schwinger_block(Generator::L3, 1);
  CHECK((commutator(l1, l2).matrix() - I * l3.matrix()).norm() <= 1e-15);
  for (int n = 0; n <= 5; ++n) {
    const auto l3n = schwinger_block(Generator::L3, n);
    CHECK(commutator(l3n, l3n).matrix().isZero(0.0));
  }
  const auto m1 = schwinger_block(Generator::L1, 2);
  const auto m2 = schwinger_block(Generator::L2, 2);
  const auto m3 = schwinger_block(Generator::L3, 2);
  CHECK((commutator(m2, m1).matrix() + I * m3.matrix()).norm() <= 1e-14);
  CHECK_THROWS_AS(commutator(l1, m1), DimensionMismatch);
}

TEST_CASE("Casimir equals (n/2)(n/2+1) and the sum of squares") {
  CHECK(casimir_block(0).matrix()(0, 0) == Complex(0.0));
  CHECK(casimir_block(2).matrix().isApprox(2.0 * Matrix::Identity(3, 3)));
  CHECK(casimir_block(3).matrix().isApprox(3.75 * Matrix::Identity(4, 4)));
  for (int n = 0; n <= 10; ++n) {
    Matrix sum = Matrix::Zero(n + 1, n + 1);
    for (Generator g : kGenerators) {
      const Matrix l = schwinger_block(g, n).matrix();
      sum += l * l;
    }
    CHECK((sum - casimir_block(n).matrix()).norm() <= tol(n));
  }
}

TEST_CASE("photon number block") {
  CHECK(photon_number_block(0).matrix()(0, 0) == Complex(0.0));
  CHECK(photon_number_block(2).matrix() == 2.0 * Matrix::Identity(3, 3));
  CHECK(photon_number_block(7).matrix() == 7.0 * Matrix::Identity(8, 8));
}

TEST_CASE("generators are Hermitian, traceless, and commute with N") {
  for (int n = 0; n <= 10; ++n) {
    const auto num = photon_number_block(n);
    for (Generator g : kGenerators) {
      const auto l = schwinger_block(g, n);
      const double herm = (l.matrix() - l.matrix().adjoint()).norm();
      if (g == Generator::L3) {
        CHECK(herm == 0.0);
        CHECK(l.matrix().trace() == Complex(0.0));
      } else {
        CHECK(herm <= 1e-15);
        CHECK(std::abs(l.matrix().trace()) <= 1e-14);
      }
      CHECK(commutator(l, num).matrix().isZero(0.0));
    }
  }
}

TEST_CASE("Stokes operators are twice the Schwinger operators") {
  for (Generator g : kGenerators) {
    CHECK(stokes_block(g, 3).matrix() == 2.0 * schwinger_block(g, 3).matrix());
  }
  CHECK_THROWS_AS(generator_from_index(4), std::invalid_argument);
}
