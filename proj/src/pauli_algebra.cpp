#include "clonebound/pauli_algebra.hpp"

#include <cmath>
#include <string>

#include "clonebound/errors.hpp"
#include "clonebound/random.hpp"

namespace clonebound {

namespace {

constexpr Complex kI{0.0, 1.0};

template <std::size_t N>
void validate_state_matrix(const SquareMatrix<N>& m, const char* what) {
  if (!m.all_finite()) throw InvalidState(std::string(what) + ": non-finite entry");
  if (m.hermiticity_residual() > kStateTol)
    throw InvalidState(std::string(what) + ": not Hermitian");
  const Complex tr = m.trace();
  if (std::abs(tr.real() - 1.0) > kStateTol || std::abs(tr.imag()) > kStateTol)
    throw InvalidState(std::string(what) + ": trace is not 1");
}

Complex trace_of_product(const Matrix4& a, const Matrix4& b) {
  Complex s{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) s += a(i, j) * b(j, i);
  return s;
}

}  // namespace

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

bool BlochVector::is_finite() const {
  return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
}

BlochVector operator*(const RealMatrix3& r, const BlochVector& v) {
  return {r[0][0] * v.x + r[0][1] * v.y + r[0][2] * v.z,
          r[1][0] * v.x + r[1][1] * v.y + r[1][2] * v.z,
          r[2][0] * v.x + r[2][1] * v.y + r[2][2] * v.z};
}

void require_unit(const BlochVector& m) {
  if (!m.is_finite()) throw InvalidBloch("Bloch vector has a non-finite component");
  if (std::abs(m.norm() - 1.0) > kStateTol)
    throw InvalidBloch("expected a unit Bloch vector, got norm " + std::to_string(m.norm()));
}

OneQubitState::OneQubitState(const Matrix2& m) : m_(m) {
  validate_state_matrix(m, "one-qubit state");
  // 2x2 positivity: det >= 0 given unit trace.
  const double det = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).real();
  if (det < -kStateTol) throw InvalidState("one-qubit state: negative eigenvalue");
}

TwoQubitState::TwoQubitState(const Matrix4& m) : m_(m) {
  validate_state_matrix(m, "two-qubit state");
}

Matrix2 pauli_matrix(Pauli p) {
  Matrix2 m;
  switch (p) {
    case Pauli::I:
      m(0, 0) = 1.0;
      m(1, 1) = 1.0;
      break;
    case Pauli::X:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case Pauli::Y:
      m(0, 1) = -kI;
      m(1, 0) = kI;
      break;
    case Pauli::Z:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
  }
  return m;
}

Matrix2 pauli_matrix(int j) {
  static constexpr Pauli kOrder[3] = {Pauli::X, Pauli::Y, Pauli::Z};
  return pauli_matrix(kOrder[j]);
}

Matrix2 bloch_dot_sigma(const BlochVector& m) {
  Matrix2 r;
  r(0, 0) = m.z;
  r(1, 1) = -m.z;
  r(0, 1) = Complex(m.x, -m.y);
  r(1, 0) = Complex(m.x, m.y);
  return r;
}

OneQubitState bloch_to_density(const BlochVector& m) {
  if (!m.is_finite()) throw InvalidBloch("Bloch vector has a non-finite component");
  if (m.norm() > 1.0 + kStateTol) throw InvalidBloch("Bloch vector outside the unit ball");
  return OneQubitState((Matrix2::identity() + bloch_dot_sigma(m)) * 0.5);
}

BlochVector density_to_bloch(const OneQubitState& rho) {
  const Matrix2& m = rho.matrix();
  // Tr(rho sigma_j)
  return {2.0 * m(1, 0).real(), 2.0 * m(1, 0).imag(), (m(0, 0) - m(1, 1)).real()};
}

BlochVector density_to_bloch(const Matrix2& rho) { return density_to_bloch(OneQubitState(rho)); }

Matrix4 tensor(const Matrix2& a, const Matrix2& b) {
  Matrix4 r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return r;
}

PauliCoefficients pauli_decompose(const Matrix4& rho) {
  PauliCoefficients c;
  const Matrix2 id = pauli_matrix(Pauli::I);
  c.c00 = rho.trace().real() / 4.0;
  for (int j = 0; j < 3; ++j) {
    c.a[j] = trace_of_product(rho, tensor(pauli_matrix(j), id)).real();
    c.b[j] = trace_of_product(rho, tensor(id, pauli_matrix(j))).real();
    for (int k = 0; k < 3; ++k)
      c.t[j][k] = trace_of_product(rho, tensor(pauli_matrix(j), pauli_matrix(k))).real();
  }
  return c;
}

Matrix4 pauli_reconstruct(const PauliCoefficients& c) {
  const Matrix2 id = pauli_matrix(Pauli::I);
  Matrix4 sum = Matrix4::identity() * (4.0 * c.c00);
  for (int j = 0; j < 3; ++j) {
    sum += tensor(pauli_matrix(j), id) * c.a[j];
    sum += tensor(id, pauli_matrix(j)) * c.b[j];
    for (int k = 0; k < 3; ++k) sum += tensor(pauli_matrix(j), pauli_matrix(k)) * c.t[j][k];
  }
  return sum * 0.25;
}

Matrix2 partial_trace(const Matrix4& rho, Qubit keep) {
  Matrix2 r;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t k = 0; k < 2; ++k)
        r(a, b) += keep == Qubit::First ? rho(2 * a + k, 2 * b + k) : rho(2 * k + a, 2 * k + b);
  return r;
}

OneQubitState partial_trace(const TwoQubitState& rho, Qubit keep) {
  return OneQubitState(partial_trace(rho.matrix(), keep));
}

double overlap_fidelity(const OneQubitState& rho_in, const OneQubitState& clone) {
  if (std::abs(density_to_bloch(rho_in).norm() - 1.0) > kStateTol)
    throw RequiresPureInput("overlap fidelity needs a pure input state");
  const Matrix2 p = rho_in.matrix() * clone.matrix();
  return p.trace().real();
}

double trace_distance(const Matrix4& rho, const Matrix4& sigma) {
  double s = 0.0;
  for (double v : hermitian_eigenvalues4(rho - sigma)) s += std::abs(v);
  return 0.5 * s;
}

double trace_distance(const TwoQubitState& rho, const TwoQubitState& sigma) {
  return trace_distance(rho.matrix(), sigma.matrix());
}

RealMatrix3 rotation_from_unitary(const Matrix2& u) {
  const Matrix2 ud = u.adjoint();
  RealMatrix3 r{};
  for (int k = 0; k < 3; ++k) {
    const Matrix2 rotated = u * pauli_matrix(k) * ud;
    for (int j = 0; j < 3; ++j) r[j][k] = 0.5 * (pauli_matrix(j) * rotated).trace().real();
  }
  return r;
}

Matrix2 axis_angle_unitary(const BlochVector& n, double theta) {
  const double len = n.norm();
  const BlochVector unit = n.scaled(1.0 / len);
  return Matrix2::identity() * std::cos(theta / 2.0) +
         bloch_dot_sigma(unit) * Complex(0.0, -std::sin(theta / 2.0));
}

Rotation random_rotation(std::uint64_t seed) {
  Rng rng(seed);
  double q[4];
  double n2 = 0.0;
  do {
    n2 = 0.0;
    for (double& v : q) {
      v = rng.normal();
      n2 += v * v;
    }
  } while (n2 < 1e-300);
  const double inv = 1.0 / std::sqrt(n2);
  for (double& v : q) v *= inv;

  Rotation out;
  out.unitary(0, 0) = Complex(q[0], q[1]);
  out.unitary(0, 1) = Complex(q[2], q[3]);
  out.unitary(1, 0) = Complex(-q[2], q[3]);
  out.unitary(1, 1) = Complex(q[0], -q[1]);
  out.rotation = rotation_from_unitary(out.unitary);
  return out;
}

}  // namespace clonebound
