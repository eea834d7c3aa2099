#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clonebound/cloner_family.hpp"
#include "clonebound/pauli_algebra.hpp"

namespace clonebound {

struct EnsembleComponent {
  double probability = 0.0;
  BlochVector direction;
};

// What Alice's measurement along `axis` leaves on Bob's side of a singlet.
struct RemoteEnsemble {
  BlochVector axis;
  std::vector<EnsembleComponent> components;

  Matrix2 average_density() const;
};

struct SignalReport {
  BlochVector axis_a;
  BlochVector axis_b;
  double trace_distance = 0.0;
  double helstrom_probability = 0.5;
  std::optional<double> mc_estimate;
  std::uint64_t mc_shots = 0;
  std::uint64_t seed = 0;
  // Set when a sampled output state has an eigenvalue below -1e-9; the
  // Monte-Carlo fields are then left empty.
  std::optional<std::string> not_physical;
};

// (|ud> - |du>)/sqrt(2)
TwoQubitState singlet();

RemoteEnsemble remote_mixture(const BlochVector& axis);

// sum over the ensemble of p_i rho_out(direction_i)
TwoQubitState averaged_clone_output(const GeneralClonerParams& p, const BlochVector& axis);
TwoQubitState averaged_clone_output(const ClonerParams& p, const BlochVector& axis);

// Analytic fields only: D between the averaged outputs and 1/2 + D/2.
SignalReport signaling_advantage(const GeneralClonerParams& p, const BlochVector& axis_a,
                                 const BlochVector& axis_b);
SignalReport signaling_advantage(const ClonerParams& p, const BlochVector& axis_a,
                                 const BlochVector& axis_b);

inline constexpr std::uint64_t kShotsPerStream = 8192;

// Simulates `shots` rounds of the distinguishing game: Alice's axis is a or b
// with probability 1/2, her outcome is +/- with probability 1/2, Bob holds
// rho_out(+/-axis) and measures the Helstrom projector onto the positive
// eigenspace of rho_avg(a) - rho_avg(b), guessing a on that outcome.
// Shots are split into blocks of kShotsPerStream, block k drawing from
// mt19937_64(mix_seed(seed, k)), so the result does not depend on how blocks
// are scheduled. Throws std::invalid_argument for shots == 0.
SignalReport monte_carlo_signal(const GeneralClonerParams& p, const BlochVector& axis_a,
                                const BlochVector& axis_b, std::uint64_t shots,
                                std::uint64_t seed);
SignalReport monte_carlo_signal(const ClonerParams& p, const BlochVector& axis_a,
                                const BlochVector& axis_b, std::uint64_t shots,
                                std::uint64_t seed);

}  // namespace clonebound
