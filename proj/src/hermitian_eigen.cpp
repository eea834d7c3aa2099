#include <algorithm>
#include <cmath>
#include <numeric>

#include "clonebound/errors.hpp"
#include "clonebound/pauli_algebra.hpp"

namespace clonebound {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalTol = 1e-14;

double off_diagonal_norm(const Matrix4& a) {
  double s = 0.0;
  for (std::size_t p = 0; p < 4; ++p)
    for (std::size_t q = p + 1; q < 4; ++q) s += 2.0 * std::norm(a(p, q));
  return std::sqrt(s);
}

// Zeroes a(p,q) with G = diag(1, e^{-i phi}) * [[c, s], [-s, c]] acting on the
// (p,q) plane: the phase makes the pivot real, then an ordinary real Jacobi
// rotation finishes the 2x2 block.
void rotate(Matrix4& a, Matrix4& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;
  const Complex phase = apq / r;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * r);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const Complex gpp = c;
  const Complex gpq = s;
  const Complex gqp = -s * std::conj(phase);
  const Complex gqq = c * std::conj(phase);

  for (std::size_t k = 0; k < 4; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * gpp + akq * gqp;
    a(k, q) = akp * gpq + akq * gqq;
  }
  for (std::size_t k = 0; k < 4; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
    a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (std::size_t k = 0; k < 4; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * gpp + vkq * gqp;
    v(k, q) = vkp * gpq + vkq * gqq;
  }
}

}  // namespace

HermitianEigen4 hermitian_eigen4(const Matrix4& m) {
  if (!m.all_finite()) throw InvalidState("eigensolver: non-finite entry");
  if (m.hermiticity_residual() > kStateTol) throw NotHermitian("eigensolver: input is not Hermitian");

  Matrix4 a = (m + m.adjoint()) * 0.5;
  Matrix4 v = Matrix4::identity();
  const double scale = std::max(1.0, a.frobenius_norm());

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) < kOffDiagonalTol * scale) break;
    for (std::size_t p = 0; p < 3; ++p)
      for (std::size_t q = p + 1; q < 4; ++q) rotate(a, v, p, q);
  }

  std::array<std::size_t, 4> order{};
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

  HermitianEigen4 out;
  for (std::size_t i = 0; i < 4; ++i) {
    out.values[i] = a(order[i], order[i]).real();
    for (std::size_t k = 0; k < 4; ++k) out.vectors(k, i) = v(k, order[i]);
  }
  return out;
}

std::array<double, 4> hermitian_eigenvalues4(const Matrix4& m) { return hermitian_eigen4(m).values; }

}  // namespace clonebound
