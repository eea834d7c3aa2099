#pragma once

#include <array>

#include "clonebound/cloner_family.hpp"
#include "clonebound/pauli_algebra.hpp"

namespace clonebound {

// 8x2 isometry from the input qubit to clone1 x clone2 x ancilla. Row index is
// 4*c1 + 2*c2 + ancilla.
class CloneIsometry {
public:
  using Column = std::array<Complex, 8>;

  explicit CloneIsometry(const std::array<Column, 2>& columns) : columns_(columns) {}

  const Column& column(std::size_t i) const { return columns_[i]; }
  Complex operator()(std::size_t row, std::size_t col) const { return columns_[col][row]; }

  // V^dagger V
  Matrix2 gram() const;

  // V rho V^dagger with the ancilla traced out.
  Matrix4 apply_and_trace_ancilla(const Matrix2& rho) const;

private:
  std::array<Column, 2> columns_;
};

// The universal symmetric 1 -> 2 cloner
//
//   V = sqrt(2/3) (P_sym x 1_anc) (1 x |Phi+>),  |Phi+> = |00> + |11> (clone2, ancilla)
//
// On the computational basis:
//   V|0> = sqrt(2/3) |00>|0> + sqrt(1/6) (|01> + |10>)|1>
//   V|1> = sqrt(2/3) |11>|1> + sqrt(1/6) (|01> + |10>)|0>
//
// |Phi+> is invariant under U x conj(U), so (U x U x conj(U)) V = V U exactly.
// The ancilla carries the anti-clone.
const CloneIsometry& bh_isometry();

// Both clones of rho_in. Throws InvalidState for an invalid input.
TwoQubitState bh_clone(const OneQubitState& rho_in);
TwoQubitState bh_clone(const Matrix2& rho_in);

// Reads (eta, t, t_xy) off the Pauli decomposition of bh_clone(|up>).
// Throws NotInFamily if any coefficient outside the family exceeds 1e-12.
ClonerParams bh_family_point();

}  // namespace clonebound
