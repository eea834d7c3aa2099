#include <doctest.h>

#include "clonebound/bound_optimizer.hpp"
#include "clonebound/buzek_hillery.hpp"
#include "clonebound/errors.hpp"
#include "test_support.hpp"

using namespace clonebound;
using namespace clonebound::testing;

namespace {

// (U x U x conj(U)) applied to a column of V.
CloneIsometry::Column act_on_outputs(const Matrix2& u, const CloneIsometry::Column& col) {
  Matrix2 ubar;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) ubar(i, j) = std::conj(u(i, j));
  CloneIsometry::Column out{};
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t c = 0; c < 8; ++c) {
      const Complex w = u(r >> 2, c >> 2) * u((r >> 1) & 1, (c >> 1) & 1) * ubar(r & 1, c & 1);
      out[r] += w * col[c];
    }
  return out;
}

Complex inner(const CloneIsometry::Column& a, const CloneIsometry::Column& b) {
  Complex s{};
  for (std::size_t i = 0; i < 8; ++i) s += std::conj(a[i]) * b[i];
  return s;
}

}  // namespace

TEST_SUITE("bh_isometry") {
  TEST_CASE("isometry with unit columns") {
    const CloneIsometry& v = bh_isometry();
    CHECK(max_abs_diff(v.gram(), Matrix2::identity()) < 1e-12);
    CHECK(std::abs(inner(v.column(0), v.column(0)) - 1.0) < 1e-12);
    CHECK(std::abs(inner(v.column(1), v.column(1)) - 1.0) < 1e-12);
  }

  TEST_CASE("covariance: (U x U x conj U) V = V U up to phase") {
    const CloneIsometry& v = bh_isometry();
    for (std::uint64_t s = 0; s < 100; ++s) {
      const Matrix2 u = random_rotation(s).unitary;
      for (std::size_t col = 0; col < 2; ++col) {
        const auto lhs = act_on_outputs(u, v.column(col));
        CloneIsometry::Column rhs{};
        for (std::size_t r = 0; r < 8; ++r) rhs[r] = v(r, 0) * u(0, col) + v(r, 1) * u(1, col);
        CHECK(std::abs(std::abs(inner(lhs, rhs)) - 1.0) < 1e-10);
      }
    }
  }

  TEST_CASE("clones of |up> both have Bloch vector (0, 0, 2/3)") {
    const TwoQubitState out = bh_clone(bloch_to_density(kAxisZ));
    for (Qubit q : {Qubit::First, Qubit::Second}) {
      const BlochVector b = density_to_bloch(partial_trace(out, q));
      CHECK(std::abs(b.x) < 1e-15);
      CHECK(std::abs(b.y) < 1e-15);
      CHECK(std::abs(b.z - 2.0 / 3.0) < 1e-12);
    }
  }
}

TEST_SUITE("bh_clone") {
  TEST_CASE("|up> gives the optimal family member") {
    const TwoQubitState out = bh_clone(bloch_to_density(kAxisZ));
    CHECK(max_abs_diff(out.matrix(), output_state_z({2.0 / 3.0, 1.0 / 3.0, 0.0}).matrix()) < 1e-12);
  }

  TEST_CASE("maximally mixed input averages the up and down outputs") {
    const Matrix4 up = bh_clone(bloch_to_density(kAxisZ)).matrix();
    const Matrix4 down = bh_clone(bloch_to_density(-kAxisZ)).matrix();
    const Matrix4 mixed = bh_clone(bloch_to_density({0, 0, 0})).matrix();
    CHECK(max_abs_diff(mixed, (up + down) * 0.5) < 1e-12);
  }

  TEST_CASE("|+x> matches the rotated z output") {
    const Matrix4 direct = bh_clone(bloch_to_density(kAxisX)).matrix();
    const Matrix4 rotated = rotate_output(bh_clone(bloch_to_density(kAxisZ)), kAxisX).matrix();
    CHECK(max_abs_diff(direct, rotated) < 1e-12);
  }

  TEST_CASE("pure inputs reproduce the optimal covariant output in every direction") {
    Rng rng(31);
    const GeneralClonerParams opt = to_general({2.0 / 3.0, 1.0 / 3.0, 0.0});
    for (int i = 0; i < 200; ++i) {
      const BlochVector m = random_unit(rng);
      const Matrix4 out = bh_clone(bloch_to_density(m)).matrix();
      // t = identity/3 is rotation invariant, so the same tensor works for every m.
      CHECK(max_abs_diff(out, general_output_state(opt, m).matrix()) < 1e-12);
    }
  }

  TEST_CASE("universality, clone symmetry and positivity on random pure inputs") {
    Rng rng(32);
    for (int i = 0; i < 500; ++i) {
      const OneQubitState in = bloch_to_density(random_unit(rng));
      const TwoQubitState out = bh_clone(in);
      const OneQubitState c1 = partial_trace(out, Qubit::First);
      const OneQubitState c2 = partial_trace(out, Qubit::Second);
      CHECK(std::abs(overlap_fidelity(in, c1) - 5.0 / 6.0) < 1e-12);
      CHECK(max_abs_diff(c1.matrix(), c2.matrix()) < 1e-12);
      CHECK(hermitian_eigenvalues4(out.matrix())[3] >= -1e-12);
    }
  }

  TEST_CASE("covariance of the channel") {
    Rng rng(33);
    for (std::uint64_t s = 0; s < 100; ++s) {
      const Matrix2 u = random_rotation(1000 + s).unitary;
      const Matrix2 rho = random_density<2>(rng);
      const Matrix4 lhs = bh_clone(u * rho * u.adjoint()).matrix();
      const Matrix4 uu = tensor(u, u);
      CHECK(max_abs_diff(lhs, uu * bh_clone(rho).matrix() * uu.adjoint()) < 1e-10);
    }
  }

  TEST_CASE("invalid input") {
    CHECK_THROWS_AS(bh_clone(Matrix2::identity()), InvalidState);
  }
}

TEST_SUITE("bh_family_point") {
  TEST_CASE("extracted parameters") {
    const ClonerParams p = bh_family_point();
    CHECK(std::abs(p.eta - 2.0 / 3.0) < 1e-12);
    CHECK(std::abs(p.t - 1.0 / 3.0) < 1e-12);
    CHECK(std::abs(p.t_xy) < 1e-12);
    CHECK(std::abs(clone_fidelity(p) - 5.0 / 6.0) < 1e-12);
    CHECK(no_signaling_residual(p, kAxisZ, kAxisX) < 1e-12);
    CHECK(feasible(p));
  }
}
