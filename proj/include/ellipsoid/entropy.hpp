#pragma once

#include <utility>

#include "ellipsoid/semiaxes.hpp"

namespace ellipsoid {

// Metric-entropy estimate I_1(eps) sandwiched between non-asymptotic bounds,
// with the magnitude of the asymptotic error term. error_magnitude carries no
// absolute constant; treat it as a scale, not a certified bound.
struct EntropyBounds {
  double epsilon = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  double estimate = 0.0;
  double error_magnitude = 0.0;
};

// I_1(eps) = sum_n ln_+(mu_n/eps), a lower bound on H(eps) valid for every eps.
double entropy_lower_bound(const SemiAxisModel& model, double eps);

// Non-asymptotic sandwich: lower = I_1(eps) (tighter than the classical
// I_1(2 eps)), upper = I_1(eps/2) + 2 ln(2) M_mu(eps/2).
std::pair<double, double> mityagin_bounds(const SemiAxisModel& model, double eps);

// estimate = I_1(eps); error_magnitude = min{M, sqrt(M ln M ln(1/eps))} with
// both log factors clamped at zero (the term collapses exactly for M <= 1).
EntropyBounds entropy_estimate(const SemiAxisModel& model, double eps);

// One non-zero axis: the ellipsoid is an interval and H(eps) = ln ceil(mu*/eps).
double exact_entropy_single_axis(double mu_star, double eps);

}  // namespace ellipsoid
