#pragma once

#include <optional>

#include "clonebound/cloner_family.hpp"
#include "clonebound/rational.hpp"

namespace clonebound {

// Eigenvalues down to this value count as non-negative; the optimum sits on
// the positivity boundary with two zero eigenvalues.
inline constexpr double kFeasibilityTol = 1e-12;

enum class BoundMethod { ClosedForm, Grid };

struct BoundResult {
  double eta_max = 0.0;
  double t_star = 0.0;
  double t_xy_star = 0.0;
  double fidelity_max = 0.0;
  BoundMethod method = BoundMethod::ClosedForm;
  int resolution = 0;  // grid points per axis; 0 for the closed form
};

struct ExactBound {
  Rational eta_max;
  Rational t_star;
  Rational t_xy_star;
  Rational fidelity_max;
};

bool feasible(const ClonerParams& p);

// Largest admissible eta for fixed (t, t_xy): (1 + t)/2 from the second
// eigenvalue, or nullopt when 1 - t - 2 sqrt(t^2 + t_xy^2) < 0 rules out
// every eta.
std::optional<double> eta_ceiling(double t, double t_xy);

// Exact maximization in rational arithmetic.
ExactBound max_eta_exact();
BoundResult max_eta_closed_form();

// Brute force over (t, t_xy) in [-1, 1]^2 with `resolution` points per axis.
// Feasibility is decided by the numerical eigensolver on the explicit output
// matrix, not by the closed-form eigenvalues. Ties in eta are broken by the
// smallest |t_xy|, then the smallest t_xy. Throws InvalidResolution for
// resolution < 3.
BoundResult max_eta_grid(int resolution);

// i-th of n equally spaced points on [-1, 1], computed as (2i - (n-1)) / (n-1)
// so that rational grid points are the correctly rounded doubles.
double grid_value(int i, int n);

double fidelity_bound();

}  // namespace clonebound
