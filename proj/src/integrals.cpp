#include "ellipsoid/integrals.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "ellipsoid/errors.hpp"
#include "ellipsoid/util.hpp"

namespace ellipsoid {

namespace {

void require_tau(double tau) {
  if (!(tau >= 1.0) || !std::isfinite(tau))
    throw Error(errc::invalid_tau, "type-tau integral requires tau >= 1");
}

void require_eps(double eps) {
  if (!(eps > 0) || !std::isfinite(eps))
    throw Error(errc::domain_error, "integral threshold must be positive finite");
}

struct SimpsonState {
  std::int64_t evals = 0;
  double error = 0.0;
  const QuadratureOptions* opts;
};

double simpson_rec(const std::function<double(double)>& f, double a, double b,
                   double fa, double fm, double fb, double whole, double tol,
                   int depth, SimpsonState& st) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  st.evals += 2;
  if (st.evals > st.opts->max_evaluations)
    throw Error(errc::quadrature_non_convergence, "quadrature evaluation budget exhausted");
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol || depth <= 0) {
    if (depth <= 0 && std::abs(delta) > 15.0 * tol)
      throw Error(errc::quadrature_non_convergence, "quadrature recursion depth exhausted");
    st.error += std::abs(delta) / 15.0;
    return left + right + delta / 15.0;
  }
  return simpson_rec(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1, st) +
         simpson_rec(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1, st);
}

double simpson_panel(const std::function<double(double)>& f, double a, double b,
                     double tol, SimpsonState& st) {
  if (!(b > a)) return 0.0;
  const double fa = f(a);
  const double fm = f(0.5 * (a + b));
  const double fb = f(b);
  st.evals += 3;
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_rec(f, a, b, fa, fm, fb, whole, tol, st.opts->max_depth, st);
}

// Distinct axis values in (eps, mu_*], ascending.
std::vector<double> jump_points(const SemiAxisModel& model, double eps) {
  std::vector<double> axes = model.truncate_at(eps);
  std::vector<double> pts;
  pts.reserve(axes.size());
  for (auto it = axes.rbegin(); it != axes.rend(); ++it) {
    if (*it <= eps) continue;
    if (pts.empty() || *it > pts.back()) pts.push_back(*it);
  }
  return pts;
}

}  // namespace

IntegralResult integral_exact(const SemiAxisModel& model, double tau, double eps) {
  require_tau(tau);
  require_eps(eps);

  const std::vector<double> axes = model.truncate_at(eps);
  KahanSum sum;
  if (tau == 1.0) {
    for (double mu : axes) {
      if (mu > eps) sum.add(std::log(mu / eps));
    }
  } else {
    const double p = 1.0 - tau;
    const double eps_pow = std::pow(eps, p);
    for (double mu : axes) {
      if (mu > eps) {
        // (eps^p - mu^p)/(tau-1) = eps^p * (-expm1(p ln(mu/eps))) / (tau-1),
        // stable for tau arbitrarily close to 1.
        sum.add(eps_pow * (-std::expm1(p * std::log(mu / eps))) / (tau - 1.0));
      }
    }
  }
  return IntegralResult{sum.value(), tau, eps, IntegralMethod::exact_sum, 0.0};
}

IntegralResult integral_quadrature(const SemiAxisModel& model, double tau, double eps,
                                   double tol, const QuadratureOptions& opts) {
  require_tau(tau);
  require_eps(eps);
  if (!(tol > 0)) throw Error(errc::domain_error, "quadrature tolerance must be positive");

  const std::vector<double> pts = jump_points(model, eps);
  if (pts.empty())
    return IntegralResult{0.0, tau, eps, IntegralMethod::quadrature, 0.0};

  SimpsonState st;
  st.opts = &opts;
  KahanSum total;
  const double span = pts.back() - eps;
  double lo = eps;
  for (double hi : pts) {
    if (!(hi > lo)) continue;
    // M_mu is constant on (lo, hi]; one counting lookup at the midpoint pins
    // the level (sampling at hi itself is ulp-sensitive for spectral models).
    const double level = static_cast<double>(model.counting_function(0.5 * (lo + hi)));
    if (level > 0.0) {
      auto f = [&](double u) { return level * std::pow(u, -tau); };
      total.add(simpson_panel(f, lo, hi, tol * (hi - lo) / span, st));
    }
    lo = hi;
  }
  return IntegralResult{total.value(), tau, eps, IntegralMethod::quadrature, st.error};
}

double transfer_residual(const SemiAxisModel& model, double tau1, double tau2,
                         double eps, double tol) {
  require_tau(tau1);
  require_tau(tau2);
  require_eps(eps);
  if (tau1 == tau2) return 0.0;

  const double lhs = integral_exact(model, tau1, eps).value;
  const double direct = integral_exact(model, tau2, eps).value * std::pow(eps, tau2 - tau1);

  // I_{tau2}(u) vanishes for u >= mu_*, so truncating the outer integral at
  // mu_* is exact. The integrand is continuous with kinks at the axis values,
  // hence the same forced panel boundaries.
  const std::vector<double> pts = jump_points(model, eps);
  if (pts.empty()) return lhs - direct;

  QuadratureOptions opts;
  SimpsonState st;
  st.opts = &opts;
  KahanSum outer;
  const double span = pts.back() - eps;
  const double expo = tau2 - tau1 - 1.0;
  auto f = [&](double u) {
    return integral_exact(model, tau2, u).value * std::pow(u, expo);
  };
  double lo = eps;
  for (double hi : pts) {
    if (!(hi > lo)) continue;
    outer.add(simpson_panel(f, lo, hi, tol * (hi - lo) / span, st));
    lo = hi;
  }
  return lhs - (direct + (tau2 - tau1) * outer.value());
}

}  // namespace ellipsoid
