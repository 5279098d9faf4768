#include "ellipsoid/asymptotics.hpp"

#include <cmath>
#include <limits>

#include "ellipsoid/entropy.hpp"
#include "ellipsoid/errors.hpp"
#include "ellipsoid/integrals.hpp"
#include "ellipsoid/model_json.hpp"
#include "ellipsoid/risk.hpp"
#include "ellipsoid/util.hpp"

namespace ellipsoid {

namespace {

double require_small(double v, double limit, const char* what) {
  if (!(v > 0) || !(v < limit))
    throw Error(errc::domain_error,
                std::string(what) + " is outside the validity range of the log-family formula");
  return v;
}

std::int64_t explicit_dim(const families::Explicit& f) {
  std::int64_t d = 0;
  for (double v : f.values)
    if (v > 0) ++d;
  return d;
}

[[noreturn]] void unsupported(const char* which) {
  throw Error(errc::unsupported_family,
              std::string("no closed-form ") + which + " prediction for this family");
}

}  // namespace

const char* quantity_name(Quantity q) noexcept {
  switch (q) {
    case Quantity::entropy: return "entropy";
    case Quantity::linear_risk: return "linear-risk";
    case Quantity::critical_radius: return "critical-radius";
    case Quantity::nonlinear_risk: return "nonlinear-risk";
  }
  return "unknown";
}

double predict_entropy(const SemiAxisModel& family, double eps) {
  if (!(eps > 0)) throw Error(errc::domain_error, "prediction needs eps > 0");
  struct Visitor {
    double eps;
    double operator()(const families::Explicit& f) const {
      return static_cast<double>(explicit_dim(f)) * std::log(1.0 / eps);
    }
    double operator()(const families::FiniteDim& f) const {
      return static_cast<double>(f.d) * std::log(1.0 / eps);
    }
    double operator()(const families::Exponential& f) const {
      const double l = std::log(1.0 / require_small(eps, 1.0, "eps"));
      return 0.5 * f.c * l * l;
    }
    double operator()(const families::ExpNLogN& f) const {
      const double l = std::log(1.0 / require_small(eps, std::exp(-1.0), "eps"));
      return f.c * l * l / (2.0 * std::log(l));
    }
    double operator()(const families::Polynomial& f) const {
      return f.c * std::pow(eps, -f.alpha) / f.alpha;
    }
    double operator()(const families::PolyLog& f) const {
      const double l = std::log(1.0 / require_small(eps, 1.0, "eps"));
      return f.c / f.alpha * std::pow(eps, -f.alpha) * std::pow(l, f.beta);
    }
    double operator()(const families::DoubleExp& f) const {
      return f.c0 / (f.c * f.alpha) * std::pow(eps, f.alpha) *
             std::exp(f.c * std::pow(eps, -f.alpha));
    }
    double operator()(const families::SobolevBox&) const { unsupported("entropy"); }
    double operator()(const families::Scaled&) const { unsupported("entropy"); }
  };
  return std::visit(Visitor{eps}, family.family());
}

double predict_linear_risk(const SemiAxisModel& family, double sigma) {
  if (!(sigma > 0)) throw Error(errc::domain_error, "prediction needs sigma > 0");
  const double s2 = sigma * sigma;
  struct Visitor {
    double sigma;
    double s2;
    double operator()(const families::Explicit& f) const {
      return static_cast<double>(explicit_dim(f)) * s2;
    }
    double operator()(const families::FiniteDim& f) const {
      return static_cast<double>(f.d) * s2;
    }
    double operator()(const families::Exponential& f) const {
      return f.c * s2 * std::log(1.0 / require_small(sigma, 1.0, "sigma"));
    }
    double operator()(const families::ExpNLogN& f) const {
      const double l = std::log(1.0 / require_small(sigma, std::exp(-1.0), "sigma"));
      return f.c * s2 * l / std::log(l);
    }
    double operator()(const families::Polynomial& f) const {
      const double a = f.alpha;
      return std::pow((a + 2.0) / a, a / (a + 2.0)) *
             std::pow(f.c * s2 / (a + 1.0), 2.0 / (a + 2.0));
    }
    double operator()(const families::PolyLog& f) const {
      const double a = f.alpha;
      const double l = std::log(std::pow(require_small(sigma, 1.0, "sigma"), -2.0 / (a + 2.0)));
      return (a + 2.0) / a *
             std::pow(f.c * a * s2 * std::pow(l, f.beta) / ((a + 1.0) * (a + 2.0)),
                      2.0 / (a + 2.0));
    }
    double operator()(const families::DoubleExp& f) const {
      const double l = std::log(1.0 / (require_small(sigma, 1.0, "sigma") * sigma));
      return std::pow(f.c / l, 2.0 / f.alpha);
    }
    double operator()(const families::SobolevBox&) const { unsupported("linear-risk"); }
    double operator()(const families::Scaled&) const { unsupported("linear-risk"); }
  };
  return std::visit(Visitor{sigma, s2}, family.family());
}

double predict_critical_radius(const SemiAxisModel& family, double sigma) {
  if (!(sigma > 0)) throw Error(errc::domain_error, "prediction needs sigma > 0");
  const auto* f = std::get_if<families::Polynomial>(&family.family());
  if (f == nullptr)
    throw Error(errc::unsupported_family,
                "critical-radius prediction covers polynomial families only");
  const double a = f->alpha;
  return std::pow(f->c * a * sigma * sigma / ((a + 1.0) * (a + 2.0)), 1.0 / (a + 2.0));
}

double predict_risk_two_term(double c1, double alpha1, double c2, double alpha2,
                             double sigma) {
  if (!(alpha1 > alpha2) || !(alpha2 > 0))
    throw Error(errc::invalid_exponents, "two-term risk needs alpha1 > alpha2 > 0");
  if (!(c1 > 0) || c2 < 0)
    throw Error(errc::domain_error, "two-term risk needs c1 > 0, c2 >= 0");
  if (!(sigma > 0)) throw Error(errc::domain_error, "prediction needs sigma > 0");
  const double s2 = sigma * sigma;
  const double base = c1 * s2 / (alpha1 + 1.0);
  const double lead =
      std::pow((alpha1 + 2.0) / alpha1, alpha1 / (alpha1 + 2.0)) *
      std::pow(base, 2.0 / (alpha1 + 2.0));
  const double second =
      2.0 * c2 * (alpha1 + 1.0) / (c1 * (alpha2 + 1.0) * (alpha2 + 2.0)) *
      std::pow((alpha1 + 2.0) / alpha1, alpha2 / (alpha2 + 2.0)) *
      std::pow(base, (alpha1 - alpha2 + 2.0) / (alpha1 + 2.0));
  return lead + second;
}

double predict_entropy_multi_term(const std::vector<std::pair<double, double>>& coeffs,
                                  double eps) {
  if (coeffs.empty()) throw Error(errc::invalid_exponents, "empty coefficient list");
  if (!(eps > 0)) throw Error(errc::domain_error, "prediction needs eps > 0");
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const auto& [c, a] = coeffs[i];
    if (!(c > 0) || !(a > 0))
      throw Error(errc::invalid_exponents, "coefficients and exponents must be positive");
    if (i > 0 && !(a < coeffs[i - 1].second))
      throw Error(errc::invalid_exponents, "exponents must be strictly decreasing");
  }
  if (!(coeffs.front().second < 2.0 * coeffs.back().second))
    throw Error(errc::invalid_exponents,
                "expansion valid only for alpha_1 < 2 alpha_N");
  KahanSum sum;
  for (const auto& [c, a] : coeffs) sum.add(c * std::pow(eps, -a) / a);
  return sum.value();
}

double predict_bias_variance(const SemiAxisModel& model, double sigma,
                             const EntropySurrogate& entropy_fn) {
  if (!(sigma > 0)) throw Error(errc::domain_error, "prediction needs sigma > 0");
  const auto b_opt = model.elasticity_index();
  if (!b_opt)
    throw Error(errc::unknown_index, "bias-variance prediction needs the (RC) index b");
  const double b = *b_opt;
  const double s2 = sigma * sigma;
  const double mu_star = model.max_semi_axis();

  EntropySurrogate surrogate = entropy_fn;
  if (!surrogate) {
    surrogate = [](const SemiAxisModel& m, double eps) {
      return integral_exact(m, 1.0, eps).value;
    };
  }

  auto variance_term = [&](double eps) -> double {
    if (b == 0.0) return static_cast<double>(model.counting_function(eps));
    if (std::isinf(b)) {
      // int_eps^{mu_*} 2 H(u)/u du by Simpson on a log-spaced composite grid;
      // the integrand is continuous so no jump-aware splitting is needed.
      if (eps >= mu_star) return 0.0;
      const int segments = 64;
      const double la = std::log(eps);
      const double lb = std::log(mu_star);
      KahanSum acc;
      for (int i = 0; i < segments; ++i) {
        const double a = std::exp(la + (lb - la) * i / segments);
        const double c = std::exp(la + (lb - la) * (i + 1) / segments);
        const double m = 0.5 * (a + c);
        const double fa = 2.0 * surrogate(model, a) / a;
        const double fm = 2.0 * surrogate(model, m) / m;
        const double fc = 2.0 * surrogate(model, c) / c;
        acc.add((c - a) / 6.0 * (fa + 4.0 * fm + fc));
      }
      return acc.value();
    }
    return 2.0 * b / ((b + 1.0) * (b + 2.0)) * surrogate(model, eps);
  };

  auto objective = [&](double eps) { return s2 * variance_term(eps) + eps * eps; };

  // Descending log-grid scan with golden-section refinement, stopping a few
  // points past the running minimum (or at the axis budget).
  const double ratio = std::pow(10.0, -1.0 / 40.0);
  const double floor_eps = mu_star * 1e-12;
  double best_x = mu_star * (1.0 - 1e-9);
  double best_v = objective(best_x);
  double x = best_x * ratio;
  double below_best = best_x * ratio;
  int past_min = 0;
  while (x > floor_eps && past_min < 6) {
    double v;
    try {
      v = objective(x);
    } catch (const Error& e) {
      if (e.code() == errc::overflow_budget) break;
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

  double a = below_best;
  double bb = std::min(best_x / ratio, mu_star * (1.0 - 1e-12));
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = bb - gr * (bb - a);
  double d = a + gr * (bb - a);
  double fc = objective(c);
  double fd = objective(d);
  for (int it = 0; it < 160 && (bb - a) > 1e-10 * bb; ++it) {
    if (fc < fd) {
      bb = d;
      d = c;
      fd = fc;
      c = bb - gr * (bb - a);
      fc = objective(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (bb - a);
      fd = objective(d);
    }
  }
  return std::min({best_v, fc, fd});
}

SweepReport convergence_sweep(const SemiAxisModel& model, const SemiAxisModel& family,
                              Quantity quantity, const std::vector<double>& param_grid) {
  SweepReport report;
  report.quantity = quantity;
  report.model_description = model_description(model);
  report.rows.resize(param_grid.size());
  parallel_for(static_cast<std::int64_t>(param_grid.size()), [&](std::int64_t i) {
    const double p = param_grid[static_cast<std::size_t>(i)];
    double exact = 0.0;
    double predicted = 0.0;
    switch (quantity) {
      case Quantity::entropy:
        // The estimate equals I_1; computing it directly sidesteps the eps/2
        // probe of the sandwich bounds (which explodes for steep families).
        exact = integral_exact(model, 1.0, p).value;
        predicted = predict_entropy(family, p);
        break;
      case Quantity::linear_risk:
        exact = linear_minimax_risk(model, p).linear_risk;
        predicted = predict_linear_risk(family, p);
        break;
      case Quantity::critical_radius:
        exact = critical_radius(model, p);
        predicted = predict_critical_radius(family, p);
        break;
      case Quantity::nonlinear_risk:
        // No algorithm computes the non-linear risk; its asymptotic proxy is
        // the linear risk, compared against the bias-variance prediction.
        exact = linear_minimax_risk(model, p).linear_risk;
        predicted = predict_bias_variance(family, p);
        break;
    }
    report.rows[static_cast<std::size_t>(i)] = SweepRow{p, exact, predicted, exact / predicted};
  });
  return report;
}

}  // namespace ellipsoid
