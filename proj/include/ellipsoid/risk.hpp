#pragma once

#include <cstdint>
#include <vector>

#include "ellipsoid/lambert.hpp"
#include "ellipsoid/semiaxes.hpp"

namespace ellipsoid {

// Exact linear minimax risk of the Gaussian sequence model on an ellipsoid,
// together with the critical radius, solver diagnostics and the
// linear-to-nonlinear bracket.
struct PinskerSolution {
  double sigma = 0.0;
  double critical_radius = 0.0;  // eps_sigma, root of sigma^2 Psi(eps) = 1
  double linear_risk = 0.0;      // R_L = sigma^2 eps_sigma I_2(eps_sigma)
  double psi_residual = 0.0;     // sigma^2 Psi(eps_sigma) - 1 at the returned root
  double bracket_low = 0.0;      // R_L max(0, 1 - b_sigma)
  double bracket_high = 0.0;     // R_L (linear estimators are a subclass)
  double b_sigma = 0.0;
  bool bracket_vacuous = false;  // b_sigma >= 1: the lower bound degenerates to 0
  int solver_iterations = 0;
};

struct RiskBracket {
  double low = 0.0;
  double high = 0.0;
  double b_sigma = 0.0;
  bool vacuous = false;
};

struct SolverOptions {
  double tol = 1e-12;       // dimensionless residual |sigma^2 Psi - 1|
  // Bisection steps per bracket. Meeting tol needs roughly
  // 52 + log2(mu_*/eps_sigma) halvings, so the cap leaves room for critical
  // radii ten or more decades below mu_*.
  int max_iterations = 200;
};

// Psi(eps) = 2 I_3(eps) - I_2(eps)/eps, evaluated as the equivalent positive
// sum over active axes sum_{mu_n > eps} (mu_n - eps) / (eps mu_n^2).
// Strictly decreasing on (0, mu_*), diverging at 0 and vanishing at mu_*.
double psi(const SemiAxisModel& model, double eps);

// Unique root of sigma^2 Psi(eps) = 1, by bisection on (~0, mu_*). Strict
// monotonicity makes the lower bracket end implicit: it is only probed (and
// expanded downward by decades) when the root lies below it.
double critical_radius(const SemiAxisModel& model, double sigma,
                       const SolverOptions& opts = {});

PinskerSolution linear_minimax_risk(const SemiAxisModel& model, double sigma,
                                    const SolverOptions& opts = {});

// Independent oracle: inf_eps { sigma^2 sum (1 - eps/mu_n)_+^2 + eps^2 } by a
// descending log-grid scan refined with golden-section search.
double linear_risk_variational(const SemiAxisModel& model, double sigma);

// Shrinkage weights c_n = (1 - eps_sigma/mu_n)_+ for n <= n_max.
std::vector<double> pinsker_weights(const SemiAxisModel& model, double sigma,
                                    std::int64_t n_max,
                                    const SolverOptions& opts = {});

// |R/R_L - 1| <= b_sigma with
// b_sigma = (4 sqrt2 sigma/eps_sigma) sqrt(W(((1+sqrt3) mu_*^2 eps_sigma /
//           (sqrt2 sigma R_L))^2)). The high end is always R_L; the low end is
// clamped at 0 (and flagged vacuous) when b_sigma >= 1.
RiskBracket nonlinear_risk_bracket(const SemiAxisModel& model, double sigma,
                                   const SolverOptions& opts = {});

}  // namespace ellipsoid
