#include <doctest.h>

#include <numeric>

#include "clonebound/cloner_family.hpp"
#include "clonebound/errors.hpp"
#include "clonebound/pauli_algebra.hpp"
#include "test_support.hpp"

using namespace clonebound;
using namespace clonebound::testing;

TEST_CASE("diagonal input returns the sorted diagonal exactly") {
  const auto ev = hermitian_eigenvalues4(Matrix4::diagonal({2.0 / 3.0, 1.0 / 3.0, 0.0, 0.0}));
  CHECK(ev == std::array<double, 4>{2.0 / 3.0, 1.0 / 3.0, 0.0, 0.0});
  const auto shuffled = hermitian_eigenvalues4(Matrix4::diagonal({-0.5, 3.0, 0.125, 1.0}));
  CHECK(shuffled == std::array<double, 4>{3.0, 1.0, 0.125, -0.5});
}

TEST_CASE("optimal cloner output has spectrum (2/3, 1/3, 0, 0)") {
  const auto ev = hermitian_eigenvalues4(output_state_z({2.0 / 3.0, 1.0 / 3.0, 0.0}).matrix());
  const std::array<double, 4> expected{2.0 / 3.0, 1.0 / 3.0, 0.0, 0.0};
  for (int i = 0; i < 4; ++i) CHECK(std::abs(ev[i] - expected[i]) < 1e-12);
}

TEST_CASE("eigenvalues match characteristic polynomial roots") {
  Rng rng(21);
  for (int n = 0; n < 500; ++n) {
    const Matrix4 h = random_hermitian4(rng);
    const auto ev = hermitian_eigenvalues4(h);
    const auto roots = quartic_real_roots(characteristic_polynomial(h));
    for (int i = 0; i < 4; ++i) CHECK(std::abs(ev[i] - roots[i]) < 1e-8);
    CHECK(std::abs(std::accumulate(ev.begin(), ev.end(), 0.0) - h.trace().real()) < 1e-10);
    CHECK(ev[0] >= ev[1]);
    CHECK(ev[1] >= ev[2]);
    CHECK(ev[2] >= ev[3]);
  }
}

TEST_CASE("eigenvectors diagonalize the input") {
  Rng rng(22);
  for (int n = 0; n < 200; ++n) {
    const Matrix4 h = random_hermitian4(rng);
    const HermitianEigen4 e = hermitian_eigen4(h);
    CHECK(max_abs_diff(e.vectors.adjoint() * e.vectors, Matrix4::identity()) < 1e-12);
    const Matrix4 rebuilt = e.vectors * Matrix4::diagonal(e.values) * e.vectors.adjoint();
    CHECK(max_abs_diff(rebuilt, h) < 1e-12);
  }
}

TEST_CASE("degenerate spectra converge") {
  // Bell-diagonal operators have repeated eigenvalues.
  const Matrix4 zz = tensor(pauli_matrix(Pauli::Z), pauli_matrix(Pauli::Z));
  const Matrix4 xx = tensor(pauli_matrix(Pauli::X), pauli_matrix(Pauli::X));
  const auto ev = hermitian_eigenvalues4(zz - xx);
  const std::array<double, 4> expected{2.0, 0.0, 0.0, -2.0};
  for (int i = 0; i < 4; ++i) CHECK(std::abs(ev[i] - expected[i]) < 1e-14);
}

TEST_CASE("non-Hermitian input is rejected") {
  Matrix4 m = Matrix4::identity();
  m(0, 3) = Complex(0.0, 1.0);
  CHECK_THROWS_AS(hermitian_eigenvalues4(m), NotHermitian);
}
