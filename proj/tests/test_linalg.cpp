#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "quditbench/linalg.hpp"
#include "quditbench/states.hpp"
#include "test_support.hpp"

using namespace qbench;

namespace {
const Complex kI(0.0, 1.0);
}

TEST_CASE("kron of identities is the identity") {
  const ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
  CHECK((kron(i2, i2) - ComplexMatrix::Identity(4, 4)).norm() == 0.0);
}

TEST_CASE("kron permutes basis vectors like the tensor product") {
  ComplexMatrix sx(2, 2);
  sx << 0, 1, 1, 0;
  const ComplexVector v00 = kron_vec(z_basis_state(2, 0), z_basis_state(2, 0));
  const ComplexVector v11 = kron_vec(z_basis_state(2, 1), z_basis_state(2, 1));
  CHECK((kron(sx, sx) * v00 - v11).norm() < 1e-15);
}

TEST_CASE("kron trace is multiplicative") {
  std::mt19937_64 rng(11);
  const ComplexMatrix a = test::ginibre(3, 3, rng);
  const ComplexMatrix b = test::ginibre(3, 3, rng);
  CHECK(std::abs(kron(a, b).trace() - a.trace() * b.trace()) < 1e-12);
}

TEST_CASE("kron is associative and bilinear") {
  std::mt19937_64 rng(12);
  const ComplexMatrix a = test::ginibre(2, 3, rng);
  const ComplexMatrix b = test::ginibre(3, 2, rng);
  const ComplexMatrix c = test::ginibre(2, 2, rng);
  CHECK((kron(kron(a, b), c) - kron(a, kron(b, c))).norm() < 1e-12);
  const Complex alpha(0.7, -0.2);
  CHECK((kron(alpha * a + b.transpose(), c) -
         (alpha * kron(a, c) + kron(ComplexMatrix(b.transpose()), c)))
            .norm() < 1e-12);
}

TEST_CASE("kron rejects dimension overflow") {
  const ComplexMatrix tall = ComplexMatrix::Ones(5000, 1);
  CHECK_THROWS_AS((void)kron(tall, tall), std::invalid_argument);
}

TEST_CASE("dagger is the conjugate transpose and an involution") {
  const ComplexMatrix i3 = ComplexMatrix::Identity(3, 3);
  CHECK((dagger(i3) - i3).norm() == 0.0);

  std::mt19937_64 rng(13);
  const ComplexMatrix a = test::ginibre(4, 2, rng);
  CHECK((dagger(dagger(a)) - a).norm() == 0.0);
  CHECK(dagger(a).rows() == 2);
  CHECK(dagger(a).cols() == 4);
}

TEST_CASE("dagger of the d=3 clock operator conjugates its phases") {
  const ComplexMatrix z = generalized_pauli(3).z;
  ComplexMatrix expected = ComplexMatrix::Zero(3, 3);
  for (int j = 0; j < 3; ++j) {
    expected(j, j) = std::exp(-kI * (2.0 * std::numbers::pi * j / 3.0));
  }
  CHECK((dagger(z) - expected).norm() < 1e-15);
}

TEST_CASE("hermitian eigensystem of the identity") {
  const Eigensystem es = hermitian_eigensystem(ComplexMatrix::Identity(3, 3));
  REQUIRE(es.eigenvalues.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(es.eigenvalues(i) == doctest::Approx(1.0));
}

TEST_CASE("hermitian eigensystem of a rank-one projector") {
  const ComplexVector phi = maximally_entangled_state(2);
  const Eigensystem es = hermitian_eigensystem(phi * phi.adjoint());
  CHECK(es.eigenvalues(0) == doctest::Approx(1.0).epsilon(1e-12));
  for (int i = 1; i < 4; ++i) {
    CHECK(std::abs(es.eigenvalues(i)) < 1e-12);
  }
}

TEST_CASE("hermitian eigensystem of the d=2 correlation operator") {
  const Eigensystem es = hermitian_eigensystem(correlation_operator(2));
  // Spectrum (2, 1, 1, 0), top eigenvector the maximally entangled state.
  CHECK(es.eigenvalues(0) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(es.eigenvalues(1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(es.eigenvalues(2) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(es.eigenvalues(3)) < 1e-12);

  const ComplexVector phi = maximally_entangled_state(2);
  const Complex overlap = (phi.adjoint() * es.eigenvectors.col(0))(0);
  CHECK(std::abs(overlap) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("hermitian eigensystem reconstructs the input") {
  std::mt19937_64 rng(14);
  for (int d : {2, 3, 5, 8}) {
    const ComplexMatrix h = test::random_hermitian(d, rng);
    const Eigensystem es = hermitian_eigensystem(h);
    const ComplexMatrix lambda =
        es.eigenvalues.cast<Complex>().asDiagonal();
    CHECK((h - es.eigenvectors * lambda * es.eigenvectors.adjoint()).norm() <
          kEigReconstructTol);
    for (int i = 0; i + 1 < d; ++i) {
      CHECK(es.eigenvalues(i) >= es.eigenvalues(i + 1));
    }
  }
}

TEST_CASE("hermitian eigensystem rejects bad input") {
  std::mt19937_64 rng(15);
  CHECK_THROWS_AS((void)hermitian_eigensystem(test::ginibre(3, 3, rng)),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)hermitian_eigensystem(test::ginibre(2, 3, rng)),
                  std::invalid_argument);
}

TEST_CASE("min eigenvalue matches the spectrum tail") {
  ComplexMatrix h(2, 2);
  h << 3.0, 0.0, 0.0, -0.25;
  CHECK(min_eigenvalue(h) == doctest::Approx(-0.25).epsilon(1e-12));
}

TEST_CASE("schmidt decomposition of the maximally entangled state") {
  const SchmidtDecomposition sd =
      schmidt_decompose(maximally_entangled_state(2), 2, 2);
  REQUIRE(sd.coefficients.size() == 2);
  CHECK(sd.coefficients(0) ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(sd.coefficients(1) ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(sd.rank() == 2);
}

TEST_CASE("schmidt decomposition of a product state") {
  const ComplexVector psi =
      kron_vec(z_basis_state(2, 0), z_basis_state(2, 0));
  const SchmidtDecomposition sd = schmidt_decompose(psi, 2, 2);
  CHECK(sd.coefficients(0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sd.rank() == 1);
}

TEST_CASE("schmidt rank of a truncated entangled state") {
  // sqrt(d) K_0 |Phi_00> at d = 4, k = 2: the unit vector
  // (|00> + |11>)/sqrt(2) in C^4 (x) C^4 has Schmidt rank 2.
  ComplexVector psi = ComplexVector::Zero(16);
  psi(0) = 1.0 / std::sqrt(2.0);
  psi(5) = 1.0 / std::sqrt(2.0);
  CHECK(schmidt_decompose(psi, 4, 4).rank() == 2);
}

TEST_CASE("schmidt decomposition reconstructs random states") {
  std::mt19937_64 rng(16);
  for (auto [da, db] : {std::pair{2, 2}, {3, 4}, {4, 3}}) {
    const ComplexVector psi = test::random_state(da * db, rng);
    const SchmidtDecomposition sd = schmidt_decompose(psi, da, db);
    CHECK(std::abs(sd.coefficients.squaredNorm() - 1.0) < 1e-10);
    ComplexVector rebuilt = ComplexVector::Zero(da * db);
    for (int i = 0; i < sd.coefficients.size(); ++i) {
      rebuilt +=
          sd.coefficients(i) * kron_vec(sd.left.col(i), sd.right.col(i));
    }
    CHECK((rebuilt - psi).norm() < 1e-10);
    CHECK((sd.left.adjoint() * sd.left -
           ComplexMatrix::Identity(sd.left.cols(), sd.left.cols()))
              .norm() < 1e-10);
    CHECK((sd.right.adjoint() * sd.right -
           ComplexMatrix::Identity(sd.right.cols(), sd.right.cols()))
              .norm() < 1e-10);
  }
}

TEST_CASE("schmidt decomposition rejects bad input") {
  CHECK_THROWS_AS(
      (void)schmidt_decompose(ComplexVector::Ones(4) * 2.0, 2, 2),
      std::invalid_argument);
  CHECK_THROWS_AS((void)schmidt_decompose(maximally_entangled_state(2), 2, 3),
                  std::invalid_argument);
}
