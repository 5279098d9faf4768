#pragma once

#include "ellipsoid/semiaxes.hpp"

namespace ellipsoid {

enum class IntegralMethod { exact_sum, quadrature };

// Value of a type-tau integral I_tau(eps) = int_eps^inf M_mu(u) u^{-tau} du.
struct IntegralResult {
  double value = 0.0;
  double tau = 1.0;
  double epsilon = 0.0;
  IntegralMethod method = IntegralMethod::exact_sum;
  double abs_error_estimate = 0.0;  // 0 for the exact-sum path
};

struct QuadratureOptions {
  int max_depth = 48;
  std::int64_t max_evaluations = 4'000'000;
};

// Exact jump-sum evaluation. tau = 1 gives sum_n ln_+(mu_n/eps); tau > 1 gives
// sum_{mu_n > eps} (eps^{1-tau} - mu_n^{1-tau}) / (tau - 1), the axis-by-axis
// antiderivative of the step integrand.
IntegralResult integral_exact(const SemiAxisModel& model, double tau, double eps);

// Adaptive Simpson over [eps, mu_*] with forced panel boundaries at each
// distinct axis value, so every panel sees a smooth integrand.
IntegralResult integral_quadrature(const SemiAxisModel& model, double tau, double eps,
                                   double tol, const QuadratureOptions& opts = {});

// Residual of the inter-type transfer identity
//   I_{tau1}(eps) = I_{tau2}(eps) eps^{tau2-tau1}
//                   + (tau2-tau1) int_eps^inf I_{tau2}(u) u^{tau2-tau1-1} du.
// Zero in exact arithmetic; the outer integral is evaluated by quadrature.
double transfer_residual(const SemiAxisModel& model, double tau1, double tau2,
                         double eps, double tol = 1e-10);

}  // namespace ellipsoid
