#include "clonebound/signaling_sim.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "clonebound/random.hpp"

namespace clonebound {

namespace {

constexpr double kProjectorTol = 1e-12;
constexpr double kRoundoffNegativity = 1e-9;

Matrix4 outer(const Matrix4& vectors, std::size_t col) {
  Matrix4 r;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) r(i, j) = vectors(i, col) * std::conj(vectors(j, col));
  return r;
}

Matrix4 positive_projector(const Matrix4& delta) {
  const HermitianEigen4 e = hermitian_eigen4(delta);
  Matrix4 p;
  for (std::size_t i = 0; i < 4; ++i)
    if (e.values[i] > kProjectorTol) p += outer(e.vectors, i);
  return p;
}

// Clips round-off negativity and renormalizes; nullopt if the state is
// genuinely non-positive.
std::optional<Matrix4> sanitized(const Matrix4& rho) {
  const HermitianEigen4 e = hermitian_eigen4(rho);
  if (e.values[3] < -kRoundoffNegativity) return std::nullopt;
  Matrix4 out;
  double total = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    const double v = std::max(0.0, e.values[i]);
    total += v;
    out += outer(e.vectors, i) * v;
  }
  return out * (1.0 / total);
}

std::uint64_t run_block(std::uint64_t block, std::uint64_t shots, std::uint64_t seed,
                        const std::array<double, 4>& guess_a_probability) {
  Rng rng(mix_seed(seed, block));
  std::uint64_t correct = 0;
  for (std::uint64_t s = 0; s < shots; ++s) {
    const std::uint64_t bits = rng.next_u64();
    const bool alice_chose_b = (bits & 1U) != 0;
    const bool minus = (bits & 2U) != 0;
    const std::size_t state = (alice_chose_b ? 2U : 0U) + (minus ? 1U : 0U);
    const bool guess_a = rng.uniform() < guess_a_probability[state];
    if (guess_a != alice_chose_b) ++correct;
  }
  return correct;
}

}  // namespace

Matrix2 RemoteEnsemble::average_density() const {
  Matrix2 avg;
  for (const auto& c : components) avg += bloch_to_density(c.direction).matrix() * c.probability;
  return avg;
}

TwoQubitState singlet() {
  const double h = 1.0 / std::sqrt(2.0);
  const std::array<double, 4> psi{0.0, h, -h, 0.0};
  Matrix4 m;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = psi[i] * psi[j];
  return TwoQubitState(m);
}

RemoteEnsemble remote_mixture(const BlochVector& axis) {
  require_unit(axis);
  return {axis, {{0.5, axis}, {0.5, -axis}}};
}

TwoQubitState averaged_clone_output(const GeneralClonerParams& p, const BlochVector& axis) {
  const RemoteEnsemble ensemble = remote_mixture(axis);
  Matrix4 avg;
  for (const auto& c : ensemble.components) avg += output_state(p, c.direction).matrix() * c.probability;
  return TwoQubitState(avg);
}

TwoQubitState averaged_clone_output(const ClonerParams& p, const BlochVector& axis) {
  return averaged_clone_output(to_general(p), axis);
}

SignalReport signaling_advantage(const GeneralClonerParams& p, const BlochVector& axis_a,
                                 const BlochVector& axis_b) {
  SignalReport r;
  r.axis_a = axis_a;
  r.axis_b = axis_b;
  r.trace_distance = trace_distance(averaged_clone_output(p, axis_a), averaged_clone_output(p, axis_b));
  r.helstrom_probability = 0.5 + r.trace_distance / 2.0;
  return r;
}

SignalReport signaling_advantage(const ClonerParams& p, const BlochVector& axis_a,
                                 const BlochVector& axis_b) {
  return signaling_advantage(to_general(p), axis_a, axis_b);
}

SignalReport monte_carlo_signal(const GeneralClonerParams& p, const BlochVector& axis_a,
                                const BlochVector& axis_b, std::uint64_t shots,
                                std::uint64_t seed) {
  if (shots == 0) throw std::invalid_argument("monte_carlo_signal: shots must be >= 1");
  SignalReport r = signaling_advantage(p, axis_a, axis_b);
  r.mc_shots = shots;
  r.seed = seed;

  const Matrix4 helstrom = positive_projector(averaged_clone_output(p, axis_a).matrix() -
                                              averaged_clone_output(p, axis_b).matrix());

  const std::array<BlochVector, 4> directions{axis_a, -axis_a, axis_b, -axis_b};
  std::array<double, 4> guess_a{};
  for (std::size_t i = 0; i < 4; ++i) {
    const auto rho = sanitized(output_state(p, directions[i]).matrix());
    if (!rho) {
      r.not_physical = "output state for a sampled direction has an eigenvalue below -1e-9";
      return r;
    }
    guess_a[i] = std::clamp((helstrom * *rho).trace().real(), 0.0, 1.0);
  }

  const std::uint64_t blocks = (shots + kShotsPerStream - 1) / kShotsPerStream;
  std::vector<std::uint64_t> correct(blocks, 0);
  const auto block_shots = [&](std::uint64_t b) {
    return std::min(kShotsPerStream, shots - b * kShotsPerStream);
  };

  const std::uint64_t workers =
      std::clamp<std::uint64_t>(std::thread::hardware_concurrency(), 1, blocks);
  if (workers == 1) {
    for (std::uint64_t b = 0; b < blocks; ++b) correct[b] = run_block(b, block_shots(b), seed, guess_a);
  } else {
    std::vector<std::thread> pool;
    for (std::uint64_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::uint64_t b = w; b < blocks; b += workers)
          correct[b] = run_block(b, block_shots(b), seed, guess_a);
      });
    for (auto& th : pool) th.join();
  }

  std::uint64_t total = 0;
  for (auto c : correct) total += c;
  r.mc_estimate = static_cast<double>(total) / static_cast<double>(shots);
  return r;
}

SignalReport monte_carlo_signal(const ClonerParams& p, const BlochVector& axis_a,
                                const BlochVector& axis_b, std::uint64_t shots,
                                std::uint64_t seed) {
  return monte_carlo_signal(to_general(p), axis_a, axis_b, shots, seed);
}

}  // namespace clonebound
