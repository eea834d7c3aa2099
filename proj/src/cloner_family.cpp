#include "clonebound/cloner_family.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "clonebound/errors.hpp"
#include "clonebound/random.hpp"

namespace clonebound {

void GeneralClonerParams::validate() const {
  if (!std::isfinite(eta) || std::abs(eta) > 1.0)
    throw InvalidState("cloner parameters: eta must be finite with |eta| <= 1");
  for (const auto& row : t)
    for (double v : row)
      if (!std::isfinite(v) || std::abs(v) > 1.0)
        throw InvalidState("cloner parameters: t entries must be finite with |t_jk| <= 1");
}

GeneralClonerParams to_general(const ClonerParams& p) {
  GeneralClonerParams g;
  g.eta = p.eta;
  g.t = {{{p.t, p.t_xy, 0.0}, {-p.t_xy, p.t, 0.0}, {0.0, 0.0, p.t}}};
  return g;
}

GeneralClonerParams embed(const ClonerParams& p, const BlochVector& m) {
  const RealMatrix3 r = rotation_from_unitary(unitary_taking_z_to(m));
  GeneralClonerParams g = to_general(p);
  g.t = r * g.t * transpose(r);
  return g;
}

double PositivityEigenvalues::min() const { return *std::min_element(values.begin(), values.end()); }

double PositivityEigenvalues::sum() const { return std::accumulate(values.begin(), values.end(), 0.0); }

TwoQubitState general_output_state(const GeneralClonerParams& p, const BlochVector& m) {
  p.validate();
  require_unit(m);
  PauliCoefficients c;
  c.c00 = 0.25;
  for (int j = 0; j < 3; ++j) {
    c.a[j] = p.eta * m[j];
    c.b[j] = p.eta * m[j];
  }
  c.t = p.t;
  return TwoQubitState(pauli_reconstruct(c));
}

TwoQubitState output_state_z(const ClonerParams& p) {
  Matrix4 m;
  m(0, 0) = 1.0 + 2.0 * p.eta + p.t;
  m(1, 1) = 1.0 - p.t;
  m(2, 2) = 1.0 - p.t;
  m(3, 3) = 1.0 - 2.0 * p.eta + p.t;
  m(1, 2) = Complex(2.0 * p.t, 2.0 * p.t_xy);
  m(2, 1) = Complex(2.0 * p.t, -2.0 * p.t_xy);
  return TwoQubitState(m * 0.25);
}

Matrix2 unitary_taking_z_to(const BlochVector& m) {
  require_unit(m);
  const BlochVector unit = m.scaled(1.0 / m.norm());
  const BlochVector axis{-unit.y, unit.x, 0.0};  // z x m
  const double s = axis.norm();
  if (s == 0.0) {
    if (unit.z > 0.0) return Matrix2::identity();
    return pauli_matrix(Pauli::X) * Complex(0.0, -1.0);
  }
  return axis_angle_unitary(axis, std::atan2(s, unit.z));
}

TwoQubitState rotate_output(const TwoQubitState& rho_z, const BlochVector& m) {
  const Matrix2 u = unitary_taking_z_to(m);
  const Matrix4 w = tensor(u, u);
  return TwoQubitState(w * rho_z.matrix() * w.adjoint());
}

TwoQubitState output_state(const GeneralClonerParams& p, const BlochVector& m) {
  return rotate_output(general_output_state(p, kAxisZ), m);
}

TwoQubitState output_state(const ClonerParams& p, const BlochVector& m) {
  return rotate_output(output_state_z(p), m);
}

double axial_covariance_residual(const TwoQubitState& rho, const BlochVector& m, int n_angles) {
  if (n_angles < 1) throw std::invalid_argument("axial_covariance_residual: n_angles must be >= 1");
  require_unit(m);
  const Matrix2 ms = bloch_dot_sigma(m);
  double worst = 0.0;
  for (int k = 0; k < n_angles; ++k) {
    const double alpha = 2.0 * std::numbers::pi * k / n_angles;
    const Matrix2 w1 = Matrix2::identity() * std::cos(alpha) + ms * Complex(0.0, std::sin(alpha));
    const Matrix4 w = tensor(w1, w1);
    const Matrix4 comm = w * rho.matrix() - rho.matrix() * w;
    worst = std::max(worst, comm.frobenius_norm());
  }
  return worst;
}

double covariance_constraint_residual(const RealMatrix3& t) {
  return std::max({std::abs(t[0][0] - t[1][1]), std::abs(t[0][1] + t[1][0]), std::abs(t[0][2]),
                   std::abs(t[2][0]), std::abs(t[1][2]), std::abs(t[2][1])});
}

double no_signaling_residual(const GeneralClonerParams& p, const BlochVector& axis_a,
                             const BlochVector& axis_b) {
  require_unit(axis_a);
  require_unit(axis_b);
  const TwoQubitState rho_z = general_output_state(p, kAxisZ);
  const Matrix4 side_a =
      rotate_output(rho_z, axis_a).matrix() + rotate_output(rho_z, -axis_a).matrix();
  const Matrix4 side_b =
      rotate_output(rho_z, axis_b).matrix() + rotate_output(rho_z, -axis_b).matrix();
  return trace_distance(side_a, side_b);
}

double no_signaling_residual(const ClonerParams& p, const BlochVector& axis_a,
                             const BlochVector& axis_b) {
  return no_signaling_residual(to_general(p), axis_a, axis_b);
}

double max_no_signaling_residual(const GeneralClonerParams& p, int random_pairs,
                                 std::uint64_t seed) {
  double worst = std::max({no_signaling_residual(p, kAxisZ, kAxisX),
                           no_signaling_residual(p, kAxisZ, kAxisY),
                           no_signaling_residual(p, kAxisX, kAxisY)});
  for (int i = 0; i < random_pairs; ++i) {
    const RealMatrix3 ra = random_rotation(mix_seed(seed, 2 * i)).rotation;
    const RealMatrix3 rb = random_rotation(mix_seed(seed, 2 * i + 1)).rotation;
    worst = std::max(worst, no_signaling_residual(p, ra * kAxisZ, rb * kAxisZ));
  }
  return worst;
}

PositivityEigenvalues positivity_eigenvalues(const ClonerParams& p) {
  const double r = std::sqrt(p.t * p.t + p.t_xy * p.t_xy);
  return {{(1.0 + 2.0 * p.eta + p.t) / 4.0, (1.0 - 2.0 * p.eta + p.t) / 4.0,
           (1.0 - p.t + 2.0 * r) / 4.0, (1.0 - p.t - 2.0 * r) / 4.0}};
}

double clone_fidelity(const ClonerParams& p) { return (1.0 + p.eta) / 2.0; }

}  // namespace clonebound
