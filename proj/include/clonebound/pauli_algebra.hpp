#pragma once

#include <array>
#include <cstdint>

#include "clonebound/matrix.hpp"

namespace clonebound {

// Validation tolerance for states; algebraic round-trips are checked at 1e-12.
inline constexpr double kStateTol = 1e-9;
inline constexpr double kAlgebraTol = 1e-12;

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  double norm() const;
  bool is_finite() const;
  BlochVector operator-() const { return {-x, -y, -z}; }
  BlochVector scaled(double s) const { return {s * x, s * y, s * z}; }

  friend bool operator==(const BlochVector&, const BlochVector&) = default;
};

inline constexpr BlochVector kAxisX{1.0, 0.0, 0.0};
inline constexpr BlochVector kAxisY{0.0, 1.0, 0.0};
inline constexpr BlochVector kAxisZ{0.0, 0.0, 1.0};

BlochVector operator*(const RealMatrix3& r, const BlochVector& v);

// Throws InvalidBloch unless |m| = 1 within kStateTol.
void require_unit(const BlochVector& m);

// Hermitian, unit-trace, positive-semidefinite 2x2 matrix.
class OneQubitState {
public:
  // Validates; throws InvalidState.
  explicit OneQubitState(const Matrix2& m);

  const Matrix2& matrix() const { return m_; }

private:
  Matrix2 m_;
};

// Hermitian, unit-trace 4x4 matrix. Positivity is deliberately not enforced:
// members of the cloner family outside the feasible region are still states
// in this sense.
class TwoQubitState {
public:
  // Validates; throws InvalidState.
  explicit TwoQubitState(const Matrix4& m);

  const Matrix4& matrix() const { return m_; }

private:
  Matrix4 m_;
};

// rho = c00 * 1x1 + (1/4) (sum_j a_j s_j x 1 + sum_k b_k 1 x s_k + sum_jk t_jk s_j x s_k)
//
// c00 is the literal coefficient of the identity (1/4 for unit trace). a, b and
// t are expectation values Tr(rho P), so t_jk is exactly the correlation tensor
// entry, a = b = eta * m for a symmetric cloner output, and t = -1 for the
// singlet.
struct PauliCoefficients {
  double c00 = 0.0;
  std::array<double, 3> a{};
  std::array<double, 3> b{};
  RealMatrix3 t{};
};

enum class Pauli { I, X, Y, Z };

enum class Qubit { First = 1, Second = 2 };

Matrix2 pauli_matrix(Pauli p);
// sigma_x, sigma_y, sigma_z for j = 0, 1, 2.
Matrix2 pauli_matrix(int j);
// m . sigma
Matrix2 bloch_dot_sigma(const BlochVector& m);

OneQubitState bloch_to_density(const BlochVector& m);
BlochVector density_to_bloch(const OneQubitState& rho);
// Validates the raw matrix first; throws InvalidState.
BlochVector density_to_bloch(const Matrix2& rho);

// Kronecker product; the first factor is qubit 1 and indexes the row blocks,
// so the basis order is |uu>, |ud>, |du>, |dd>.
Matrix4 tensor(const Matrix2& a, const Matrix2& b);

PauliCoefficients pauli_decompose(const Matrix4& rho);
Matrix4 pauli_reconstruct(const PauliCoefficients& c);

Matrix2 partial_trace(const Matrix4& rho, Qubit keep);
OneQubitState partial_trace(const TwoQubitState& rho, Qubit keep);

struct HermitianEigen4 {
  std::array<double, 4> values{};  // descending
  Matrix4 vectors;                 // column i belongs to values[i]
};

// Cyclic complex Jacobi. Throws NotHermitian if |A - A^dagger| > kStateTol.
HermitianEigen4 hermitian_eigen4(const Matrix4& m);
std::array<double, 4> hermitian_eigenvalues4(const Matrix4& m);

// Tr(rho_in * clone); rho_in must be pure.
double overlap_fidelity(const OneQubitState& rho_in, const OneQubitState& clone);

// (1/2) ||rho - sigma||_1 for arbitrary Hermitian arguments.
double trace_distance(const Matrix4& rho, const Matrix4& sigma);
double trace_distance(const TwoQubitState& rho, const TwoQubitState& sigma);

// R_jk = Tr(sigma_j U sigma_k U^dagger) / 2, so U (m.sigma) U^dagger = (R m).sigma.
RealMatrix3 rotation_from_unitary(const Matrix2& u);

// U = exp(-i theta/2 n.sigma): rotates Bloch vectors by +theta about n.
Matrix2 axis_angle_unitary(const BlochVector& n, double theta);

struct Rotation {
  Matrix2 unitary;
  RealMatrix3 rotation{};
};

// Haar-random SU(2) element and its Bloch rotation; a pure function of seed.
Rotation random_rotation(std::uint64_t seed);

}  // namespace clonebound
