#include "ellipsoid/risk.hpp"

#include <algorithm>
#include <cmath>

#include "ellipsoid/errors.hpp"
#include "ellipsoid/integrals.hpp"
#include "ellipsoid/util.hpp"

namespace ellipsoid {

namespace {

struct RootResult {
  double eps;
  double residual;
  int iterations;
};

void require_sigma(double sigma) {
  if (!(sigma > 0) || !std::isfinite(sigma))
    throw Error(errc::domain_error, "noise level sigma must be positive finite");
}

// sigma^2 Psi(eps) - 1; the root target.
double residual_at(const SemiAxisModel& model, double sigma, double eps) {
  return sigma * sigma * psi(model, eps) - 1.0;
}

RootResult solve_critical_radius(const SemiAxisModel& model, double sigma,
                                 const SolverOptions& opts) {
  require_sigma(sigma);
  if (!(opts.tol > 0)) throw Error(errc::domain_error, "solver tolerance must be positive");
  const double mu_star = model.max_semi_axis();

  // Upper end: Psi -> 0 at mu_*, so the residual should be negative there.
  double hi = 0.0;
  double r_hi = 0.0;
  bool hi_ok = false;
  for (double delta = 1e-12; delta >= 1e-15; delta *= 0.1) {
    hi = mu_star * (1.0 - delta);
    r_hi = residual_at(model, sigma, hi);
    if (r_hi < 0) {
      hi_ok = true;
      break;
    }
  }
  if (!hi_ok)
    throw Error(errc::bracket_failure,
                "critical radius sits too close to mu_*; no upper bracket");

  // Lower end: Psi diverges at 0, so mu_* 1e-15 brackets the root for any
  // realistic sigma. It is deliberately never evaluated up front (its axis
  // count may be enormous); monotonicity alone steers the bisection.
  double lo = mu_star * 1e-15;

  int iterations = 0;
  bool saw_positive = false;
  for (int expansion = 0; expansion <= 15; ++expansion) {
    for (int it = 0; it < opts.max_iterations; ++it) {
      const double mid = 0.5 * (lo + hi);
      double r;
      try {
        r = residual_at(model, sigma, mid);
      } catch (const Error& err) {
        if (err.code() != errc::overflow_budget) throw;
        // The axis count exploded at mid, which puts mid far below the root
        // for any load the budget can carry; steer upward. If the root truly
        // needed that many axes, a later probe rethrows the budget error.
        lo = mid;
        ++iterations;
        continue;
      }
      ++iterations;
      if (std::abs(r) <= opts.tol) return RootResult{mid, r, iterations};
      if (r > 0) {
        saw_positive = true;
        lo = mid;
      } else {
        hi = mid;
      }
    }
    if (saw_positive)
      throw Error(errc::bracket_failure,
                  "bisection exhausted its iteration budget before the residual tolerance");
    // Residual never went positive: the root lies below lo. Expand downward.
    const double probe = lo * 0.1;
    const double r = residual_at(model, sigma, probe);
    ++iterations;
    if (std::abs(r) <= opts.tol) return RootResult{probe, r, iterations};
    if (r > 0) {
      hi = lo;
      lo = probe;
      saw_positive = true;
    } else {
      hi = probe;
      lo = probe * 0.1;
    }
  }
  throw Error(errc::bracket_failure, "no bracket for the critical radius within 15 decades");
}

RiskBracket bracket_from(double mu_star, double sigma, double eps, double linear_risk) {
  const double sqrt2 = std::sqrt(2.0);
  const double arg = (1.0 + std::sqrt(3.0)) * mu_star * mu_star * eps /
                     (sqrt2 * sigma * linear_risk);
  const double w = lambert_w(arg * arg);
  const double b = 4.0 * sqrt2 * sigma / eps * std::sqrt(w);
  RiskBracket out;
  out.b_sigma = b;
  out.high = linear_risk;
  out.vacuous = !(b < 1.0);
  out.low = out.vacuous ? 0.0 : linear_risk * (1.0 - b);
  return out;
}

}  // namespace

double psi(const SemiAxisModel& model, double eps) {
  if (!(eps > 0)) throw Error(errc::domain_error, "psi requires eps > 0");
  const double mu_star = model.max_semi_axis();
  if (!(eps < mu_star)) throw Error(errc::domain_error, "psi requires eps < mu_*");
  const std::vector<double> axes = model.truncate_at(eps);
  KahanSum sum;
  for (double mu : axes) {
    if (mu > eps) sum.add((mu - eps) / (eps * mu * mu));
  }
  return sum.value();
}

double critical_radius(const SemiAxisModel& model, double sigma,
                       const SolverOptions& opts) {
  return solve_critical_radius(model, sigma, opts).eps;
}

PinskerSolution linear_minimax_risk(const SemiAxisModel& model, double sigma,
                                    const SolverOptions& opts) {
  const RootResult root = solve_critical_radius(model, sigma, opts);
  const double eps = root.eps;
  const double linear_risk =
      sigma * sigma * eps * integral_exact(model, 2.0, eps).value;

  PinskerSolution out;
  out.sigma = sigma;
  out.critical_radius = eps;
  out.linear_risk = linear_risk;
  out.psi_residual = root.residual;
  out.solver_iterations = root.iterations;
  const RiskBracket br = bracket_from(model.max_semi_axis(), sigma, eps, linear_risk);
  out.bracket_low = br.low;
  out.bracket_high = br.high;
  out.b_sigma = br.b_sigma;
  out.bracket_vacuous = br.vacuous;
  return out;
}

double linear_risk_variational(const SemiAxisModel& model, double sigma) {
  require_sigma(sigma);
  const double mu_star = model.max_semi_axis();
  const double sigma2 = sigma * sigma;

  auto objective = [&](double eps) {
    KahanSum bias_free;
    for (double mu : model.truncate_at(eps)) {
      if (mu > eps) {
        const double c = 1.0 - eps / mu;
        bias_free.add(c * c);
      }
    }
    return sigma2 * bias_free.value() + eps * eps;
  };

  // Descend a log grid from mu_*; the objective is strictly unimodal
  // (decreasing above the critical radius, increasing below), so a handful of
  // points past the running minimum brackets it. Descending also keeps the
  // axis budget safe: we never probe far below the optimum.
  const double ratio = std::pow(10.0, -1.0 / 40.0);
  const double floor_eps = mu_star * 1e-13;
  double best_x = mu_star * (1.0 - 1e-9);
  double best_v = objective(best_x);
  double x = best_x * ratio;
  int past_min = 0;
  double below_best = best_x * ratio;  // grid point just below the best
  while (x > floor_eps && past_min < 6) {
    double v;
    try {
      v = objective(x);
    } catch (const Error& e) {
      if (e.code() == errc::overflow_budget) break;  // far past the optimum
      throw;
    }
    if (v < best_v) {
      best_v = v;
      best_x = x;
      below_best = x * ratio;
      past_min = 0;
    } else {
      ++past_min;
    }
    x *= ratio;
  }

  // Golden-section refinement on [below_best, above_best].
  double a = below_best;
  double b = std::min(best_x / ratio, mu_star * (1.0 - 1e-12));
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - gr * (b - a);
  double d = a + gr * (b - a);
  double fc = objective(c);
  double fd = objective(d);
  for (int it = 0; it < 200 && (b - a) > 1e-12 * b; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = objective(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = objective(d);
    }
  }
  return std::min({best_v, fc, fd});
}

std::vector<double> pinsker_weights(const SemiAxisModel& model, double sigma,
                                    std::int64_t n_max, const SolverOptions& opts) {
  if (n_max < 1) throw Error(errc::domain_error, "pinsker_weights needs n_max >= 1");
  const double eps = critical_radius(model, sigma, opts);
  std::vector<double> weights(static_cast<std::size_t>(n_max));
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const double mu = model.semi_axis(n);
    weights[n - 1] = mu > 0 ? std::max(0.0, 1.0 - eps / mu) : 0.0;
  }
  return weights;
}

RiskBracket nonlinear_risk_bracket(const SemiAxisModel& model, double sigma,
                                   const SolverOptions& opts) {
  const PinskerSolution sol = linear_minimax_risk(model, sigma, opts);
  RiskBracket out;
  out.low = sol.bracket_low;
  out.high = sol.bracket_high;
  out.b_sigma = sol.b_sigma;
  out.vacuous = sol.bracket_vacuous;
  return out;
}

}  // namespace ellipsoid
