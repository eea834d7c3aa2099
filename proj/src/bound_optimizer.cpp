#include "clonebound/bound_optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>
#include <vector>

#include "clonebound/errors.hpp"

namespace clonebound {

namespace {

struct Candidate {
  bool found = false;
  double eta = 0.0;
  double t = 0.0;
  double t_xy = 0.0;
};

bool better(const Candidate& a, const Candidate& b) {
  if (!b.found) return a.found;
  if (!a.found) return false;
  if (a.eta != b.eta) return a.eta > b.eta;
  if (std::abs(a.t_xy) != std::abs(b.t_xy)) return std::abs(a.t_xy) < std::abs(b.t_xy);
  if (a.t_xy != b.t_xy) return a.t_xy < b.t_xy;
  return a.t < b.t;
}

Candidate scan_rows(int first, int last, int resolution) {
  Candidate best;
  for (int i = first; i < last; ++i) {
    const double t = grid_value(i, resolution);
    const double eta = (1.0 + t) / 2.0;
    for (int j = 0; j < resolution; ++j) {
      const double t_xy = grid_value(j, resolution);
      const Candidate c{true, eta, t, t_xy};
      if (!better(c, best)) continue;
      const auto ev = hermitian_eigenvalues4(output_state_z({eta, t, t_xy}).matrix());
      if (ev[3] >= -kFeasibilityTol) best = c;
    }
  }
  return best;
}

}  // namespace

bool feasible(const ClonerParams& p) { return positivity_eigenvalues(p).min() >= -kFeasibilityTol; }

std::optional<double> eta_ceiling(double t, double t_xy) {
  if (1.0 - t - 2.0 * std::sqrt(t * t + t_xy * t_xy) < -kFeasibilityTol) return std::nullopt;
  return (1.0 + t) / 2.0;
}

ExactBound max_eta_exact() {
  // eta <= (1 + t)/2 is increasing in t, so push t as high as the pair
  // condition 1 - t >= 2 sqrt(t^2 + t_xy^2) allows. Squared (valid since it
  // also forces t <= 1):  3t^2 + 2t - 1 + 4 t_xy^2 <= 0. The larger root
  // shrinks as t_xy^2 grows, so t_xy = 0.
  const Rational t_xy{0};
  const Rational qa{3};
  const Rational qb{2};
  const Rational qc = Rational{-1} + Rational{4} * t_xy * t_xy;
  const Rational disc = qb * qb - Rational{4} * qa * qc;
  const auto root = exact_sqrt(disc);
  if (!root) throw Error("closed-form bound: discriminant " + disc.to_string() + " is not a square");
  const Rational t = (Rational{0} - qb + *root) / (Rational{2} * qa);
  const Rational eta = (Rational{1} + t) / Rational{2};

  // The remaining two eigenvalues must stay non-negative at the optimum.
  if ((Rational{1} + Rational{2} * eta + t) < Rational{0} || (Rational{1} - t) < Rational{0})
    throw Error("closed-form bound: optimum violates positivity");

  return {eta, t, t_xy, (Rational{1} + eta) / Rational{2}};
}

BoundResult max_eta_closed_form() {
  const ExactBound e = max_eta_exact();
  BoundResult r;
  r.eta_max = e.eta_max.to_double();
  r.t_star = e.t_star.to_double();
  r.t_xy_star = e.t_xy_star.to_double();
  r.fidelity_max = (1.0 + r.eta_max) / 2.0;
  r.method = BoundMethod::ClosedForm;
  return r;
}

double grid_value(int i, int n) {
  return static_cast<double>(2 * i - (n - 1)) / static_cast<double>(n - 1);
}

BoundResult max_eta_grid(int resolution) {
  if (resolution < 3)
    throw InvalidResolution("grid resolution must be >= 3, got " + std::to_string(resolution));

  const int workers =
      std::clamp(static_cast<int>(std::thread::hardware_concurrency()), 1, std::max(1, resolution / 64));
  std::vector<Candidate> partial(workers);
  if (workers == 1) {
    partial[0] = scan_rows(0, resolution, resolution);
  } else {
    std::vector<std::thread> pool;
    const int chunk = (resolution + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const int first = std::min(resolution, w * chunk);
      const int last = std::min(resolution, first + chunk);
      pool.emplace_back([&partial, w, first, last, resolution] {
        partial[w] = scan_rows(first, last, resolution);
      });
    }
    for (auto& th : pool) th.join();
  }

  Candidate best;
  for (const auto& c : partial)
    if (better(c, best)) best = c;

  BoundResult r;
  r.eta_max = best.eta;
  r.t_star = best.t;
  r.t_xy_star = best.t_xy;
  r.fidelity_max = (1.0 + best.eta) / 2.0;
  r.method = BoundMethod::Grid;
  r.resolution = resolution;
  return r;
}

double fidelity_bound() { return max_eta_closed_form().fidelity_max; }

}  // namespace clonebound
