#include "clonebound/buzek_hillery.hpp"

#include <cmath>

#include "clonebound/errors.hpp"

namespace clonebound {

namespace {

constexpr double kFamilyTol = 1e-12;

CloneIsometry make_isometry() {
  const double big = std::sqrt(2.0 / 3.0);
  const double small = std::sqrt(1.0 / 6.0);
  CloneIsometry::Column up{};
  CloneIsometry::Column down{};
  // |c1 c2 a> -> 4 c1 + 2 c2 + a
  up[0b000] = big;
  up[0b011] = small;
  up[0b101] = small;
  down[0b111] = big;
  down[0b010] = small;
  down[0b100] = small;
  return CloneIsometry({up, down});
}

}  // namespace

Matrix2 CloneIsometry::gram() const {
  Matrix2 g;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t r = 0; r < 8; ++r) g(i, j) += std::conj(columns_[i][r]) * columns_[j][r];
  return g;
}

Matrix4 CloneIsometry::apply_and_trace_ancilla(const Matrix2& rho) const {
  Matrix4 out;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      Complex s{};
      for (std::size_t anc = 0; anc < 2; ++anc)
        for (std::size_t i = 0; i < 2; ++i)
          for (std::size_t j = 0; j < 2; ++j)
            s += (*this)(2 * r + anc, i) * rho(i, j) * std::conj((*this)(2 * c + anc, j));
      out(r, c) = s;
    }
  return out;
}

const CloneIsometry& bh_isometry() {
  static const CloneIsometry v = make_isometry();
  return v;
}

TwoQubitState bh_clone(const OneQubitState& rho_in) {
  return TwoQubitState(bh_isometry().apply_and_trace_ancilla(rho_in.matrix()));
}

TwoQubitState bh_clone(const Matrix2& rho_in) { return bh_clone(OneQubitState(rho_in)); }

ClonerParams bh_family_point() {
  const TwoQubitState out = bh_clone(bloch_to_density(kAxisZ));
  const PauliCoefficients c = pauli_decompose(out.matrix());

  ClonerParams p;
  p.eta = c.a[2];
  p.t = c.t[2][2];
  p.t_xy = c.t[0][1];

  const RealMatrix3 expected = to_general(p).t;
  const bool in_family = std::abs(c.a[0]) <= kFamilyTol && std::abs(c.a[1]) <= kFamilyTol &&
                         std::abs(c.b[0]) <= kFamilyTol && std::abs(c.b[1]) <= kFamilyTol &&
                         std::abs(c.b[2] - c.a[2]) <= kFamilyTol &&
                         max_abs_difference(c.t, expected) <= kFamilyTol;
  if (!in_family) throw NotInFamily("cloner output is not a member of the covariant family");
  return p;
}

}  // namespace clonebound
