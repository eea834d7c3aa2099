#include <doctest.h>

#include <cmath>

#include "clonebound/buzek_hillery.hpp"
#include "clonebound/cloner_family.hpp"
#include "clonebound/errors.hpp"
#include "test_support.hpp"

using namespace clonebound;
using namespace clonebound::testing;

namespace {

GeneralClonerParams diag_params(double eta, double txx, double tyy, double tzz) {
  GeneralClonerParams g;
  g.eta = eta;
  g.t = {{{txx, 0, 0}, {0, tyy, 0}, {0, 0, tzz}}};
  return g;
}

}  // namespace

TEST_SUITE("general_output_state") {
  TEST_CASE("zero parameters give the maximally mixed state") {
    Rng rng(1);
    for (int i = 0; i < 10; ++i)
      CHECK(max_abs_diff(general_output_state({}, random_unit(rng)).matrix(), Matrix4::identity() * 0.25) < 1e-15);
  }

  TEST_CASE("eta = 1, t = 1 is not positive") {
    const auto ev = hermitian_eigenvalues4(general_output_state(diag_params(1, 1, 1, 1), kAxisZ).matrix());
    CHECK(ev[3] == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(positivity_eigenvalues({1.0, 1.0, 0.0}).min() == doctest::Approx(-0.5).epsilon(1e-12));
  }

  TEST_CASE("optimal point reproduces the explicit z matrix") {
    const auto g = general_output_state(diag_params(2.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0), kAxisZ);
    CHECK(max_abs_diff(g.matrix(), output_state_z({2.0 / 3.0, 1.0 / 3.0, 0.0}).matrix()) < 1e-15);
  }

  TEST_CASE("both marginals carry eta * m") {
    Rng rng(2);
    for (int i = 0; i < 200; ++i) {
      GeneralClonerParams g;
      g.eta = rng.uniform(-1, 1);
      for (auto& row : g.t)
        for (double& v : row) v = rng.uniform(-1, 1);
      const BlochVector m = random_unit(rng);
      const TwoQubitState rho = general_output_state(g, m);
      for (Qubit q : {Qubit::First, Qubit::Second}) {
        const Matrix2 expected = (Matrix2::identity() + bloch_dot_sigma(m.scaled(g.eta))) * 0.5;
        CHECK(max_abs_diff(partial_trace(rho.matrix(), q), expected) < 1e-12);
      }
    }
  }

  TEST_CASE("input validation") {
    CHECK_THROWS_AS(general_output_state({}, {0, 0, 0}), InvalidBloch);
    CHECK_THROWS_AS(general_output_state({}, {0, 0.5, 0.5}), InvalidBloch);
    CHECK_THROWS_AS(general_output_state(diag_params(1.5, 0, 0, 0), kAxisZ), InvalidState);
    CHECK_THROWS_AS(general_output_state(diag_params(0, 0, 1.2, 0), kAxisZ), InvalidState);
  }
}

TEST_SUITE("output_state_z") {
  TEST_CASE("optimal point entries") {
    const Matrix4 m = output_state_z({2.0 / 3.0, 1.0 / 3.0, 0.0}).matrix();
    Matrix4 expected;
    expected(0, 0) = 8.0 / 3.0;
    expected(1, 1) = 2.0 / 3.0;
    expected(2, 2) = 2.0 / 3.0;
    expected(1, 2) = 2.0 / 3.0;
    expected(2, 1) = 2.0 / 3.0;
    CHECK(max_abs_diff(m, expected * 0.25) < 1e-15);
  }

  TEST_CASE("origin is maximally mixed") {
    CHECK(output_state_z({0, 0, 0}).matrix() == Matrix4::identity() * 0.25);
  }

  TEST_CASE("generic point follows the explicit entry formula") {
    const Matrix4 m = output_state_z({0.5, 0.25, 0.125}).matrix();
    CHECK(m(0, 0) == Complex(0.5625, 0));
    CHECK(m(1, 1) == Complex(0.1875, 0));
    CHECK(m(2, 2) == Complex(0.1875, 0));
    CHECK(m(3, 3) == Complex(0.0625, 0));
    CHECK(m(1, 2) == Complex(0.125, 0.0625));
    CHECK(m(2, 1) == Complex(0.125, -0.0625));
    CHECK(m.hermiticity_residual() == 0.0);
    CHECK(m.trace() == Complex(1.0, 0.0));
    const auto g = general_output_state(to_general({0.5, 0.25, 0.125}), kAxisZ);
    CHECK(max_abs_diff(m, g.matrix()) < 1e-15);
  }

  TEST_CASE("family invariants over random parameters") {
    Rng rng(4);
    for (int i = 0; i < 1000; ++i) {
      const ClonerParams p = random_family(rng);
      const Matrix4 m = output_state_z(p).matrix();
      CHECK(m.hermiticity_residual() < 1e-12);
      CHECK(std::abs(m.trace().real() - 1.0) < 1e-12);
      const Matrix2 c1 = partial_trace(m, Qubit::First);
      const Matrix2 c2 = partial_trace(m, Qubit::Second);
      CHECK(max_abs_diff(c1, c2) < 1e-12);
      const Matrix2 expected = (Matrix2::identity() + pauli_matrix(Pauli::Z) * p.eta) * 0.5;
      CHECK(max_abs_diff(c1, expected) < 1e-12);
    }
  }
}

TEST_SUITE("rotate_output") {
  TEST_CASE("unitary_taking_z_to lands on m, including the antipode") {
    Rng rng(5);
    std::vector<BlochVector> targets{kAxisZ, -kAxisZ, kAxisX, kAxisY, {1e-9, 0, -1}};
    for (int i = 0; i < 100; ++i) targets.push_back(random_unit(rng));
    for (BlochVector m : targets) {
      m = m.scaled(1.0 / m.norm());
      const BlochVector image = rotation_from_unitary(unitary_taking_z_to(m)) * kAxisZ;
      CHECK(std::abs(image.x - m.x) < 1e-12);
      CHECK(std::abs(image.y - m.y) < 1e-12);
      CHECK(std::abs(image.z - m.z) < 1e-12);
    }
    CHECK(unitary_taking_z_to(kAxisZ) == Matrix2::identity());
  }

  TEST_CASE("z is the identity map") {
    const TwoQubitState rho = output_state_z({0.3, -0.2, 0.1});
    CHECK(rotate_output(rho, kAxisZ).matrix() == rho.matrix());
  }

  TEST_CASE("optimal point rotated to x has marginals (1 + 2/3 X)/2") {
    const TwoQubitState rho = rotate_output(output_state_z({2.0 / 3.0, 1.0 / 3.0, 0.0}), kAxisX);
    const Matrix2 expected = (Matrix2::identity() + pauli_matrix(Pauli::X) * (2.0 / 3.0)) * 0.5;
    CHECK(max_abs_diff(partial_trace(rho.matrix(), Qubit::First), expected) < 1e-12);
    CHECK(max_abs_diff(partial_trace(rho.matrix(), Qubit::Second), expected) < 1e-12);
  }

  TEST_CASE("conjugation agrees with the rotated Pauli expansion") {
    Rng rng(6);
    for (int i = 0; i < 300; ++i) {
      const ClonerParams p = random_family(rng);
      const BlochVector m = random_unit(rng);
      const TwoQubitState lhs = rotate_output(output_state_z(p), m);
      const TwoQubitState rhs = general_output_state(embed(p, m), m);
      CHECK(max_abs_diff(lhs.matrix(), rhs.matrix()) < 1e-12);
    }
  }

  TEST_CASE("eigenvalues are invariant") {
    Rng rng(7);
    for (int i = 0; i < 300; ++i) {
      const ClonerParams p = random_family(rng);
      const auto before = hermitian_eigenvalues4(output_state_z(p).matrix());
      const auto after = hermitian_eigenvalues4(rotate_output(output_state_z(p), random_unit(rng)).matrix());
      for (int k = 0; k < 4; ++k) CHECK(std::abs(before[k] - after[k]) < 1e-12);
    }
  }

  TEST_CASE("invalid direction") {
    CHECK_THROWS_AS(rotate_output(output_state_z({}), {0, 0, 0}), InvalidBloch);
    CHECK_THROWS_AS(rotate_output(output_state_z({}), {2, 0, 0}), InvalidBloch);
  }
}

TEST_SUITE("axial_covariance_residual") {
  TEST_CASE("family members are symmetric about their direction") {
    Rng rng(8);
    for (int i = 0; i < 300; ++i) {
      const ClonerParams p = random_family(rng);
      CHECK(axial_covariance_residual(output_state_z(p), kAxisZ) < 1e-12);
      const BlochVector m = random_unit(rng);
      CHECK(axial_covariance_residual(output_state(p, m), m) < 1e-12);
    }
  }

  TEST_CASE("|ud> is symmetric, |++> is not") {
    CHECK(axial_covariance_residual(TwoQubitState(Matrix4::diagonal({0, 1, 0, 0})), kAxisZ) < 1e-12);
    Matrix4 plusplus;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) plusplus(i, j) = 0.25;
    CHECK(axial_covariance_residual(TwoQubitState(plusplus), kAxisZ) > 0.1);
  }

  TEST_CASE("non-family tensors break the symmetry") {
    CHECK(axial_covariance_residual(general_output_state(diag_params(0, 0.5, 0, 0), kAxisZ), kAxisZ) > 0.1);
  }

  TEST_CASE("angle count must be positive") {
    CHECK_THROWS(axial_covariance_residual(output_state_z({}), kAxisZ, 0));
  }
}

TEST_SUITE("covariance_constraint_residual") {
  TEST_CASE("examples") {
    CHECK(covariance_constraint_residual({{{1.0 / 3, 0, 0}, {0, 1.0 / 3, 0}, {0, 0, 1.0 / 3}}}) == 0.0);
    CHECK(covariance_constraint_residual({{{1.0 / 3, 0, 0}, {0, 0, 0}, {0, 0, 0}}}) == doctest::Approx(1.0 / 3));
    CHECK(covariance_constraint_residual({{{0.1, 0.2, 0}, {-0.2, 0.1, 0}, {0, 0, 0.7}}}) == 0.0);
    CHECK(covariance_constraint_residual({{{0, 0, 0}, {0, 0, 0}, {0, 0.05, 0}}}) == doctest::Approx(0.05));
  }
}

TEST_SUITE("no_signaling_residual") {
  TEST_CASE("family members do not signal along z vs x") {
    Rng rng(9);
    for (int i = 0; i < 100; ++i) CHECK(no_signaling_residual(random_family(rng), kAxisZ, kAxisX) < 1e-12);
  }

  TEST_CASE("t = diag(0, 0, 1/3) gives residual 1/3") {
    CHECK(no_signaling_residual(diag_params(0, 0, 0, 1.0 / 3.0), kAxisZ, kAxisX) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  }

  TEST_CASE("equal axes give zero") {
    Rng rng(10);
    for (int i = 0; i < 20; ++i) {
      const BlochVector a = random_unit(rng);
      CHECK(no_signaling_residual(diag_params(0.2, 0.9, -0.3, 0.1), a, a) < 1e-15);
    }
  }

  TEST_CASE("random axis pairs on the family") {
    Rng rng(11);
    for (int i = 0; i < 100; ++i) {
      const ClonerParams p = random_family(rng);
      for (int k = 0; k < 50; ++k)
        CHECK(no_signaling_residual(p, random_unit(rng), random_unit(rng)) < 1e-12);
    }
  }

  TEST_CASE("diagonal tensors: residual is |t_zz - t_xx| for (z, x)") {
    Rng rng(12);
    for (int i = 0; i < 300; ++i) {
      const double tx = rng.uniform(-1, 1), ty = rng.uniform(-1, 1), tz = rng.uniform(-1, 1);
      const GeneralClonerParams g = diag_params(rng.uniform(-1, 1), tx, ty, tz);
      CHECK(std::abs(no_signaling_residual(g, kAxisZ, kAxisX) - std::abs(tz - tx)) < 1e-10);
    }
  }

  TEST_CASE("unequal diagonal entries always show up somewhere") {
    Rng rng(13);
    for (int i = 0; i < 300; ++i) {
      GeneralClonerParams g;
      g.eta = rng.uniform(-1, 1);
      for (auto& row : g.t)
        for (double& v : row) v = rng.uniform(-1, 1);
      const double gap = std::max(std::abs(g.t[2][2] - g.t[0][0]), std::abs(g.t[2][2] - g.t[1][1]));
      if (gap > 1e-6) CHECK(max_no_signaling_residual(g, 4, 99) > 0.0);
    }
    // Smallest gap that matters.
    CHECK(max_no_signaling_residual(diag_params(0, 0.2, 0.2, 0.2 + 2e-6), 0, 1) > 1e-6);
  }

  TEST_CASE("invalid axes") {
    CHECK_THROWS_AS(no_signaling_residual(ClonerParams{}, {0, 0, 0}, kAxisX), InvalidBloch);
  }
}

TEST_SUITE("positivity_eigenvalues") {
  TEST_CASE("examples") {
    const auto opt = positivity_eigenvalues({2.0 / 3.0, 1.0 / 3.0, 0.0});
    const std::array<double, 4> expected{2.0 / 3.0, 0.0, 1.0 / 3.0, 0.0};
    for (int i = 0; i < 4; ++i) CHECK(std::abs(opt.values[i] - expected[i]) < 1e-15);
    CHECK(positivity_eigenvalues({0, 0, 0}).values == std::array<double, 4>{0.25, 0.25, 0.25, 0.25});
    const auto bad = positivity_eigenvalues({0.7, 1.0 / 3.0, 0.0});
    CHECK(bad.min() == doctest::Approx(-1.0 / 60.0).epsilon(1e-12));
  }

  TEST_CASE("closed form matches the eigensolver on a grid over [-1,1]^3") {
    const int n = 21;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          const ClonerParams p{-1.0 + 2.0 * i / (n - 1), -1.0 + 2.0 * j / (n - 1), -1.0 + 2.0 * k / (n - 1)};
          auto closed = positivity_eigenvalues(p).values;
          std::sort(closed.begin(), closed.end(), std::greater<>());
          const auto numeric = hermitian_eigenvalues4(output_state_z(p).matrix());
          for (int e = 0; e < 4; ++e) CHECK(std::abs(closed[e] - numeric[e]) < 1e-10);
          CHECK(std::abs(positivity_eigenvalues(p).sum() - 1.0) < 1e-12);
        }
  }
}

TEST_SUITE("clone_fidelity") {
  TEST_CASE("examples") {
    CHECK(clone_fidelity({2.0 / 3.0, 1.0 / 3.0, 0}) == doctest::Approx(5.0 / 6.0).epsilon(1e-15));
    CHECK(clone_fidelity({0, 0, 0}) == 0.5);
    CHECK(clone_fidelity({1, 0, 0}) == 1.0);
  }
}
