#include "ellipsoid/lambert.hpp"

#include <cmath>

#include "ellipsoid/errors.hpp"

namespace ellipsoid {

double lambert_w(double x) {
  if (!(x >= 0)) throw Error(errc::domain_error, "lambert_w requires x >= 0");
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return x;

  double w;
  if (x > std::exp(1.0)) {
    // Asymptotic seed W ~ ln x - ln ln x + ln ln x / ln x.
    const double l1 = std::log(x);
    const double l2 = std::log(l1);
    w = l1 - l2 + l2 / l1;
  } else if (x > 0.25) {
    w = std::log1p(x) * 0.7;
  } else {
    // Series seed W = x - x^2 + 3/2 x^3 - ...
    w = x * (1.0 + x * (-1.0 + x * 1.5));
  }

  for (int it = 0; it < 32; ++it) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double wp1 = w + 1.0;
    const double step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
    w -= step;
    if (std::abs(step) <= 2e-16 * (1.0 + std::abs(w))) break;
  }
  return w;
}

}  // namespace ellipsoid
