#include <cmath>
#include <random>

#include <doctest.h>

#include "coherence/errors.hpp"
#include "coherence/linalg.hpp"
#include "coherence/states.hpp"
#include "test_support.hpp"

using namespace coherence;

TEST_CASE("hermitian_eigenvalues on diagonal and rank-1 inputs") {
  ComplexMatrix half = ComplexMatrix::identity(2);
  half *= 0.5;
  const Spectrum s1 = hermitian_eigenvalues(half);
  CHECK(s1[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(s1[1] == doctest::Approx(0.5).epsilon(1e-14));

  // [[4/5, 2/5], [2/5, 1/5]]: det = 0 and trace = 1, so the spectrum is {1, 0}.
  ComplexMatrix m(2);
  m(0, 0) = 0.8;
  m(0, 1) = 0.4;
  m(1, 0) = 0.4;
  m(1, 1) = 0.2;
  const Spectrum s2 = hermitian_eigenvalues(m);
  CHECK(std::abs(s2[0] - 1.0) < 1e-14);
  CHECK(std::abs(s2[1]) < 1e-14);

  // Pure Bloch point t = 0.6, z = 0.8.
  ComplexMatrix p(2);
  p(0, 0) = 0.5 * 1.8;
  p(0, 1) = 0.5 * 0.6;
  p(1, 0) = 0.5 * 0.6;
  p(1, 1) = 0.5 * 0.2;
  const Spectrum s3 = hermitian_eigenvalues(p);
  CHECK(std::abs(s3[0] - 1.0) < 1e-14);
  CHECK(std::abs(s3[1]) < 1e-14);
}

TEST_CASE("hermitian_eigenvalues matches the 2x2 closed form on random qubits") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 500; ++trial) {
    const auto [t, z] = testing::random_bloch_point(rng);
    const DensityMatrix rho = from_bloch_xyz(t, 0.0, z);
    const Spectrum s = hermitian_eigenvalues(rho.matrix());
    const double r = std::sqrt(t * t + z * z);
    CHECK(std::abs(s[0] - 0.5 * (1.0 + r)) < 1e-12);
    CHECK(std::abs(s[1] - 0.5 * (1.0 - r)) < 1e-12);
  }
}

TEST_CASE("hermitian_eigenvalues handles complex off-diagonals and degeneracies") {
  ComplexMatrix m(3);
  m(0, 0) = 0.5;
  m(1, 1) = 0.3;
  m(2, 2) = 0.2;
  m(0, 1) = cplx{0.1, 0.2};
  m(1, 0) = cplx{0.1, -0.2};
  m(1, 2) = cplx{0.0, -0.05};
  m(2, 1) = cplx{0.0, 0.05};
  const Spectrum s = hermitian_eigenvalues(m);
  double trace = 0.0;
  double sq = 0.0;
  for (double lambda : s) {
    trace += lambda;
    sq += lambda * lambda;
  }
  // Trace and Frobenius norm are rotation invariants.
  CHECK(trace == doctest::Approx(1.0).epsilon(1e-13));
  double frob = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      frob += std::norm(m(i, j));
    }
  }
  CHECK(sq == doctest::Approx(frob).epsilon(1e-13));
  CHECK(s[0] >= s[1]);
  CHECK(s[1] >= s[2]);
}

TEST_CASE("hermitian_eigenvalues rejects bad inputs") {
  ComplexMatrix skew(2);
  skew(0, 1) = 1.0;
  CHECK_THROWS_AS(hermitian_eigenvalues(skew), NotHermitianError);

  ComplexMatrix nan_mat(2);
  nan_mat(0, 0) = std::nan("");
  CHECK_THROWS_AS(hermitian_eigenvalues(nan_mat), DomainError);
}

TEST_CASE("spectrum of a validated density matrix is a probability vector") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 7);
    const DensityMatrix rho = random_density_matrix(d, rng);
    const Spectrum s = hermitian_eigenvalues(rho.matrix());
    REQUIRE(s.size() == static_cast<size_t>(d));
    double sum = 0.0;
    for (double lambda : s) {
      CHECK(lambda >= -1e-9);
      CHECK(lambda <= 1.0 + 1e-9);
      sum += lambda;
    }
    CHECK(std::abs(sum - 1.0) < 1e-9);
  }
}

TEST_CASE("binary_entropy values and domain") {
  CHECK(binary_entropy(0.5) == 1.0);
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(binary_entropy(0.2) == doctest::Approx(0.72192809488736235).epsilon(1e-14));
  CHECK_THROWS_AS(binary_entropy(-0.001), DomainError);
  CHECK_THROWS_AS(binary_entropy(1.001), DomainError);
  // In-tolerance stragglers are clamped.
  CHECK(binary_entropy(-1e-13) == 0.0);
  CHECK(binary_entropy(1.0 + 1e-13) == 0.0);
}

TEST_CASE("binary_entropy is symmetric about 1/2") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const double x = uni(rng);
    CHECK(binary_entropy(x) == doctest::Approx(binary_entropy(1.0 - x)).epsilon(1e-13));
  }
}

TEST_CASE("shannon_entropy values and domain") {
  CHECK(shannon_entropy({0.25, 0.25, 0.25, 0.25}) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(shannon_entropy({12.0 / 25.0, 12.0 / 25.0, 1.0 / 25.0}) ==
        doctest::Approx(1.2022921890824148).epsilon(1e-14));
  CHECK(shannon_entropy({1.0, 0.0, 0.0}) == 0.0);
  CHECK_THROWS_AS(shannon_entropy({0.5, 0.6}), DomainError);
  CHECK_THROWS_AS(shannon_entropy({1.2, -0.2}), DomainError);
}

TEST_CASE("von_neumann_entropy values") {
  std::mt19937_64 rng(5);
  const PureState phi = random_pure_state(4, rng);
  CHECK(von_neumann_entropy(phi.projector().matrix()) == doctest::Approx(0.0).epsilon(1e-12));

  ComplexMatrix half = ComplexMatrix::identity(2);
  half *= 0.5;
  CHECK(von_neumann_entropy(half) == doctest::Approx(1.0).epsilon(1e-14));

  // rho2 = [[1/2, 1/sqrt6], [1/sqrt6, 1/2]] has eigenvalues (1 +/- 2/sqrt6)/2.
  ComplexMatrix rho2(2);
  rho2(0, 0) = 0.5;
  rho2(1, 1) = 0.5;
  rho2(0, 1) = 1.0 / std::sqrt(6.0);
  rho2(1, 0) = 1.0 / std::sqrt(6.0);
  const double expected = binary_entropy(0.5 * (1.0 - 2.0 / std::sqrt(6.0)));
  CHECK(expected == doctest::Approx(0.44228992541349137).epsilon(1e-14));
  CHECK(von_neumann_entropy(rho2) == doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("von_neumann_entropy is unitarily invariant") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 5);
    const DensityMatrix rho = random_density_matrix(d, rng);
    const ComplexMatrix u = testing::random_unitary(d, rng);
    const ComplexMatrix rotated = u * rho.matrix() * u.adjoint();
    CHECK(std::abs(von_neumann_entropy(rotated) - von_neumann_entropy(rho.matrix())) < 1e-10);
  }
}
