#include <doctest.h>

#include <numbers>
#include <random>

#include "oracles.hpp"
#include "unpol/transforms.hpp"

using namespace unpol;

namespace {

const Complex I(0.0, 1.0);
constexpr double kPi = std::numbers::pi;

Su2Angles random_angles(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  return {u(rng), u(rng), u(rng)};
}

Matrix generator(const Su2Angles& a, int n) {
  return a.phi_1 * schwinger_block(Generator::L1, n).matrix() +
         a.phi_2 * schwinger_block(Generator::L2, n).matrix() +
         a.phi_3 * schwinger_block(Generator::L3, n).matrix();
}

}  // namespace

TEST_CASE("zero angles give the identity") {
  for (int n = 0; n <= 6; ++n) {
    CHECK((evolution_block({}, n).matrix() - Matrix::Identity(n + 1, n + 1)).norm() <= 1e-15);
  }
  const auto u = evolution({}, 2);
  CHECK(u.op().total_dimension() == 6);
  CHECK((u.op().to_dense() - Matrix::Identity(6, 6)).norm() <= 1e-15);
}

TEST_CASE("phase shift by pi on one photon") {
  const Matrix expected = oracle::exp_i(kPi * schwinger_block(Generator::L3, 1).matrix());
  Matrix frozen = Matrix::Zero(2, 2);
  frozen(0, 0) = -I;
  frozen(1, 1) = I;
  CHECK((expected - frozen).norm() <= 1e-14);
  CHECK((evolution_block({0, 0, kPi}, 1).matrix() - frozen).norm() <= 1e-14);

  const auto u = evolution({0, 0, kPi}, 1);
  CHECK(std::abs(u.block(0).matrix()(0, 0) - 1.0) <= 1e-15);
  CHECK((u.block(1).matrix() - frozen).norm() <= 1e-14);
}

TEST_CASE("L1 rotation by pi on one photon") {
  Matrix frozen(2, 2);
  frozen << 0.0, I, I, 0.0;
  CHECK((oracle::exp_i(kPi * schwinger_block(Generator::L1, 1).matrix()) - frozen).norm() <= 1e-14);
  CHECK((evolution_block({kPi, 0, 0}, 1).matrix() - frozen).norm() <= 1e-14);
}

TEST_CASE("vacuum block is always 1") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const auto u = evolution(random_angles(rng), 3);
    CHECK(std::abs(u.block(0).matrix()(0, 0) - 1.0) <= 1e-15);
  }
}

TEST_CASE("differential phase") {
  CHECK((differential_phase(0.0, 3).op().to_dense() - Matrix::Identity(10, 10)).norm() <= 1e-15);
  CHECK((differential_phase(2 * kPi, 1).block(1).matrix() + Matrix::Identity(2, 2)).norm() <= 1e-14);
  Matrix expected = Matrix::Zero(3, 3);
  expected.diagonal() << -1.0, 1.0, -1.0;
  CHECK((differential_phase(kPi, 2).block(2).matrix() - expected).norm() <= 1e-14);
}

TEST_CASE("geometric rotation") {
  CHECK((geometric_rotation(0.0, 3).op().to_dense() - Matrix::Identity(10, 10)).norm() <= 1e-15);
  const double c = std::cos(kPi / 4), s = std::sin(kPi / 4);
  Matrix expected(2, 2);
  expected << c, -s, s, c;
  const Matrix got = geometric_rotation(kPi / 2, 1).block(1).matrix();
  CHECK((got - expected).norm() <= 1e-14);
  CHECK((got - oracle::exp_i(kPi / 2 * schwinger_block(Generator::L2, 1).matrix())).norm() <= 1e-14);
  CHECK(std::abs(geometric_rotation(1.234, 4).block(0).matrix()(0, 0) - 1.0) <= 1e-15);
}

TEST_CASE("eigendecomposition exponential matches Pade and the symmetric-power lift") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 25; ++t) {
    const Su2Angles a = random_angles(rng);
    const Matrix u1 = evolution_block(a, 1).matrix();
    for (int n = 0; n <= 6; ++n) {
      const Matrix u = evolution_block(a, n).matrix();
      CHECK((u - oracle::exp_i(generator(a, n))).norm() <= 1e-11 * (n + 1));
      CHECK((u - oracle::symmetric_power_lift(u1, n)).norm() <= 1e-11 * (n + 1));
    }
  }
}

TEST_CASE("evolution blocks are unitary, special on n=1, and conserve N") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    const auto u = evolution(random_angles(rng), 8);
    for (int n = 0; n <= 8; ++n) {
      CHECK(unitarity_residual(u.block(n)) <= 1e-12 * (n + 1));
      const Matrix num = photon_number_block(n).matrix();
      const Matrix& m = u.block(n).matrix();
      CHECK((m * num - num * m).norm() <= 1e-12 * (n + 1));
    }
    CHECK(std::abs(u.block(1).matrix().determinant() - 1.0) <= 1e-12);
  }
}

TEST_CASE("same-axis evolutions compose additively") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> ang(-7.0, 7.0);
  for (int t = 0; t < 20; ++t) {
    const double alpha = ang(rng), beta = ang(rng);
    const auto prod = evolution({0, 0, alpha}, 6).op() * evolution({0, 0, beta}, 6).op();
    const auto sum = evolution({0, 0, alpha + beta}, 6);
    for (int n = 0; n <= 6; ++n) {
      CHECK((prod.block(n).matrix() - sum.block(n).matrix()).norm() <= 1e-10);
    }
  }
}

TEST_CASE("conjugation keeps generators in the real span of L1, L2, L3") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 10; ++t) {
    const auto u = evolution(random_angles(rng), 6);
    for (int n = 1; n <= 6; ++n) {
      const Matrix& m = u.block(n).matrix();
      for (Generator g : kGenerators) {
        const Matrix x = m * schwinger_block(g, n).matrix() * m.adjoint();
        Matrix projected = Matrix::Zero(n + 1, n + 1);
        for (Generator h : kGenerators) {
          const Matrix l = schwinger_block(h, n).matrix();
          const double coeff = (l * x).trace().real() / (l * l).trace().real();
          projected += coeff * l;
        }
        CHECK((x - projected).norm() <= 1e-10);
      }
    }
  }
}

TEST_CASE("Haar SU(2) sampling is deterministic and unitary") {
  const auto a = haar_random_su2(42, 4);
  const auto b = haar_random_su2(42, 4);
  for (int n = 0; n <= 4; ++n) {
    CHECK(a.block(n).matrix() == b.block(n).matrix());
    CHECK(unitarity_residual(a.block(n)) <= 1e-12 * (n + 1));
  }
  CHECK_FALSE(haar_random_su2(43, 4).block(1).matrix() == a.block(1).matrix());
}

TEST_CASE("Haar SU(2) rotation angle follows sin^2(angle/2)") {
  // Rotation angle a of an SU(2) element: tr U = 2 cos(a/2), a in [0, 2 pi].
  constexpr int kSamples = 100000;
  constexpr int kBins = 20;
  std::vector<int> counts(kBins, 0);
  for (int s = 0; s < kSamples; ++s) {
    const Matrix u = haar_random_su2(derive_seed(2024, static_cast<std::uint64_t>(s)), 1)
                         .block(1)
                         .matrix();
    const double half_trace = std::clamp(0.5 * u.trace().real(), -1.0, 1.0);
    const double angle = 2.0 * std::acos(half_trace);
    const int bin = std::min(kBins - 1, static_cast<int>(angle / (2 * kPi) * kBins));
    ++counts[static_cast<std::size_t>(bin)];
  }
  // CDF of the density sin^2(a/2) / pi on [0, 2 pi].
  auto cdf = [](double a) { return (a - std::sin(a)) / (2 * kPi); };
  double chi2 = 0.0;
  for (int b = 0; b < kBins; ++b) {
    const double lo = 2 * kPi * b / kBins, hi = 2 * kPi * (b + 1) / kBins;
    const double expected = kSamples * (cdf(hi) - cdf(lo));
    const double diff = counts[static_cast<std::size_t>(b)] - expected;
    chi2 += diff * diff / expected;
  }
  // 0.99 quantile of chi-square with 19 degrees of freedom.
  CHECK(chi2 < 36.191);
}

TEST_CASE("random lossless unitaries") {
  SUBCASE("n_max = 0 is a unit-modulus scalar") {
    const auto u = random_lossless(7, 0);
    CHECK(u.op().total_dimension() == 1);
    CHECK(std::abs(std::abs(u.block(0).matrix()(0, 0)) - 1.0) <= 1e-14);
  }
  SUBCASE("blocks are unitary and deterministic") {
    for (RandomSeed seed = 0; seed < 20; ++seed) {
      const auto u = random_lossless(seed, 6);
      const auto v = random_lossless(seed, 6);
      for (int n = 0; n <= 6; ++n) {
        CHECK(unitarity_residual(u.block(n)) <= 1e-12 * (n + 1));
        CHECK(u.block(n).matrix() == v.block(n).matrix());
      }
    }
  }
  SUBCASE("generically not a symmetric-power lift") {
    int far = 0;
    for (RandomSeed seed = 0; seed < 100; ++seed) {
      const auto u = random_lossless(seed, 2);
      const Matrix lifted = oracle::symmetric_power_lift(u.block(1).matrix(), 2);
      if ((lifted - u.block(2).matrix()).norm() > 1e-3) ++far;
    }
    CHECK(far >= 99);
  }
}

TEST_CASE("non-unitary blocks are rejected") {
  std::vector<BlockOperator> blocks = {BlockOperator(0, Matrix::Constant(1, 1, 2.0))};
  CHECK_THROWS_AS(LosslessUnitary(DirectSumOperator(blocks)), std::invalid_argument);
  CHECK_THROWS_AS(evolution_block({std::nan(""), 0, 0}, 1), std::invalid_argument);
}
