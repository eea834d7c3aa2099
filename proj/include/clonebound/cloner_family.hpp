#pragma once

#include <array>
#include <cstdint>

#include "clonebound/pauli_algebra.hpp"

namespace clonebound {

// Unconstrained output template: eta and the full correlation tensor of
//   rho = (1/4)(1 + eta (m.s x 1 + 1 x m.s) + sum_jk t_jk s_j x s_k).
// When used as a cloner (output_state, no_signaling_residual, signaling), the
// tensor is read as the output for input direction z and carried to other
// directions by rotate_output.
struct GeneralClonerParams {
  double eta = 0.0;
  RealMatrix3 t{};

  // Throws InvalidState on non-finite entries, |eta| > 1 or |t_jk| > 1.
  void validate() const;
};

// The covariant, no-signaling family: t_xx = t_yy = t_zz = t, t_xy = -t_yx.
struct ClonerParams {
  double eta = 0.0;
  double t = 0.0;
  double t_xy = 0.0;

  friend bool operator==(const ClonerParams&, const ClonerParams&) = default;
};

// Correlation tensor of the family member for input z.
GeneralClonerParams to_general(const ClonerParams& p);

// Family member expressed as general parameters for input direction m: the
// z tensor conjugated by the Bloch rotation that takes z to m.
GeneralClonerParams embed(const ClonerParams& p, const BlochVector& m);

struct PositivityEigenvalues {
  // (1 + 2eta + t)/4, (1 - 2eta + t)/4, (1 - t + 2r)/4, (1 - t - 2r)/4 with r = sqrt(t^2 + t_xy^2)
  std::array<double, 4> values{};

  double min() const;
  double sum() const;
};

TwoQubitState general_output_state(const GeneralClonerParams& p, const BlochVector& m);

// The explicit 4x4 output for input |up>, entry by entry.
TwoQubitState output_state_z(const ClonerParams& p);

// The SU(2) element taking z to m along the shortest geodesic (rotation about
// z x m by arccos(m_z)); m = -z uses a rotation by pi about x.
Matrix2 unitary_taking_z_to(const BlochVector& m);

// (U x U) rho_z (U x U)^dagger with U = unitary_taking_z_to(m).
TwoQubitState rotate_output(const TwoQubitState& rho_z, const BlochVector& m);

// rho_out(m) for the cloner described by p.
TwoQubitState output_state(const GeneralClonerParams& p, const BlochVector& m);
TwoQubitState output_state(const ClonerParams& p, const BlochVector& m);

inline constexpr int kDefaultAxialAngles = 32;

// max over alpha = 2 pi k / n_angles of || [e^{i alpha m.s} x e^{i alpha m.s}, rho] ||_F
double axial_covariance_residual(const TwoQubitState& rho, const BlochVector& m,
                                 int n_angles = kDefaultAxialAngles);

// max(|t_xx - t_yy|, |t_xy + t_yx|, |t_xz|, |t_zx|, |t_yz|, |t_zy|)
double covariance_constraint_residual(const RealMatrix3& t);

// Trace distance between the two sides of the balance
//   rho_out(a) + rho_out(-a) = rho_out(b) + rho_out(-b).
// The sides are un-normalized (trace 2), so for diagonal t and axes (z, x)
// this equals |t_zz - t_xx|; it is twice the distance between the averaged
// outputs.
double no_signaling_residual(const GeneralClonerParams& p, const BlochVector& axis_a,
                             const BlochVector& axis_b);
double no_signaling_residual(const ClonerParams& p, const BlochVector& axis_a,
                             const BlochVector& axis_b);

// Max of no_signaling_residual over the coordinate pairs (z,x), (z,y), (x,y)
// and `random_pairs` seeded random axis pairs.
double max_no_signaling_residual(const GeneralClonerParams& p, int random_pairs,
                                 std::uint64_t seed);

PositivityEigenvalues positivity_eigenvalues(const ClonerParams& p);

double clone_fidelity(const ClonerParams& p);

}  // namespace clonebound
