#include "ellipsoid/entropy.hpp"

#include <algorithm>
#include <cmath>

#include "ellipsoid/errors.hpp"
#include "ellipsoid/integrals.hpp"

namespace ellipsoid {

double entropy_lower_bound(const SemiAxisModel& model, double eps) {
  return integral_exact(model, 1.0, eps).value;
}

std::pair<double, double> mityagin_bounds(const SemiAxisModel& model, double eps) {
  if (!(eps > 0)) throw Error(errc::domain_error, "entropy threshold must be positive");
  const double lower = entropy_lower_bound(model, eps);
  const double half = 0.5 * eps;
  const double upper = integral_exact(model, 1.0, half).value +
                       2.0 * std::log(2.0) *
                           static_cast<double>(model.counting_function(half));
  return {lower, upper};
}

EntropyBounds entropy_estimate(const SemiAxisModel& model, double eps) {
  auto [lower, upper] = mityagin_bounds(model, eps);
  const auto m = static_cast<double>(model.counting_function(eps));
  const double log_m = std::max(0.0, std::log(std::max(m, 1.0)));
  const double log_inv_eps = std::max(0.0, std::log(1.0 / eps));
  const double err = std::min(m, std::sqrt(m * log_m * log_inv_eps));
  return EntropyBounds{eps, lower, upper, lower, err};
}

double exact_entropy_single_axis(double mu_star, double eps) {
  if (!(mu_star > 0) || !(eps > 0))
    throw Error(errc::domain_error, "exact single-axis entropy needs positive arguments");
  return std::log(std::ceil(mu_star / eps));
}

}  // namespace ellipsoid
