#include "ellipsoid/semiaxes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ellipsoid/errors.hpp"
#include "ellipsoid/lambert.hpp"

namespace ellipsoid {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_positive(double v, const char* what) {
  if (!(v > 0) || !std::isfinite(v))
    throw Error(errc::domain_error, std::string(what) + " must be positive finite");
}

double poly_log_formula(const families::PolyLog& f, std::int64_t n) {
  const double ln_n = std::log(static_cast<double>(n));
  const double num = f.c * std::pow(ln_n, f.beta);
  const double den = std::pow(f.alpha, f.beta) * static_cast<double>(n);
  return std::pow(num / den, 1.0 / f.alpha);
}

double double_exp_formula(const families::DoubleExp& f, std::int64_t n) {
  return std::pow(f.c / std::log(static_cast<double>(n) / f.c0), 1.0 / f.alpha);
}

std::int64_t poly_log_clamp_index(double beta) {
  if (beta <= 0) return 2;
  // The raw profile (ln x)^beta / x peaks at x = e^beta.
  const double peak = std::exp(beta);
  std::int64_t lo = std::max<std::int64_t>(2, static_cast<std::int64_t>(std::floor(peak)));
  std::int64_t best = lo;
  double best_v = -1.0;
  for (std::int64_t cand : {lo, lo + 1, lo + 2}) {
    double v = std::pow(std::log(static_cast<double>(cand)), beta) / static_cast<double>(cand);
    if (v > best_v) {
      best_v = v;
      best = cand;
    }
  }
  return best;
}

}  // namespace

SemiAxisModel SemiAxisModel::explicit_axes(std::vector<double> values, std::int64_t budget) {
  if (values.empty()) throw Error(errc::domain_error, "explicit model needs at least one axis");
  bool any_positive = false;
  for (std::size_t i = 0; i < values.size(); ++i) {
    double v = values[i];
    if (std::isnan(v) || v < 0 || std::isinf(v))
      throw Error(errc::domain_error, "explicit axes must be finite and non-negative");
    if (i > 0 && v > values[i - 1])
      throw Error(errc::domain_error, "explicit axes must be sorted non-increasing");
    any_positive = any_positive || v > 0;
  }
  if (!any_positive)
    throw Error(errc::domain_error, "at least one semi-axis must be strictly positive");
  return SemiAxisModel(families::Explicit{std::move(values)}, budget, 0.0);
}

SemiAxisModel SemiAxisModel::finite_dim(std::int64_t d, double value, std::int64_t budget) {
  if (d < 1) throw Error(errc::domain_error, "finite_dim requires d >= 1");
  require_positive(value, "finite_dim value");
  return SemiAxisModel(families::FiniteDim{d, value}, budget, 0.0);
}

SemiAxisModel SemiAxisModel::exponential(double c, std::int64_t budget) {
  require_positive(c, "exponential c");
  return SemiAxisModel(families::Exponential{c}, budget, 0.0);
}

SemiAxisModel SemiAxisModel::exp_n_log_n(double c, std::int64_t budget) {
  require_positive(c, "exp_n_log_n c");
  return SemiAxisModel(families::ExpNLogN{c}, budget, 0.0);
}

SemiAxisModel SemiAxisModel::polynomial(double c, double alpha, std::int64_t budget) {
  require_positive(c, "polynomial c");
  require_positive(alpha, "polynomial alpha");
  return SemiAxisModel(families::Polynomial{c, alpha}, budget, alpha);
}

SemiAxisModel SemiAxisModel::poly_log(double c, double alpha, double beta, std::int64_t budget) {
  require_positive(c, "poly_log c");
  require_positive(alpha, "poly_log alpha");
  if (!std::isfinite(beta)) throw Error(errc::domain_error, "poly_log beta must be finite");
  return SemiAxisModel(families::PolyLog{c, alpha, beta, poly_log_clamp_index(beta)},
                       budget, alpha);
}

SemiAxisModel SemiAxisModel::double_exp(double c0, double c, double alpha, std::int64_t budget) {
  require_positive(c0, "double_exp c0");
  require_positive(c, "double_exp c");
  require_positive(alpha, "double_exp alpha");
  const auto clamp =
      static_cast<std::int64_t>(std::ceil(c0 * std::exp(1.0))) + 1;
  return SemiAxisModel(families::DoubleExp{c0, c, alpha, clamp}, budget, kInf);
}

SemiAxisModel SemiAxisModel::sobolev_box(std::vector<double> lengths, int k, std::int64_t budget) {
  if (k < 1) throw Error(errc::domain_error, "sobolev_box requires k >= 1");
  BoxDomain box(std::move(lengths));
  const double b = static_cast<double>(box.dim()) / k;
  return SemiAxisModel(families::SobolevBox{std::move(box), k}, budget, b);
}

SemiAxisModel SemiAxisModel::scaled(SemiAxisModel inner, double lambda) {
  require_positive(lambda, "scale factor");
  auto b = inner.elasticity_index();
  auto budget = inner.axis_budget();
  auto ptr = std::make_shared<const SemiAxisModel>(std::move(inner));
  return SemiAxisModel(families::Scaled{std::move(ptr), lambda}, budget, b);
}

SemiAxisModel SemiAxisModel::with_elasticity_index(double b) const {
  if (std::isnan(b) || b < 0)
    throw Error(errc::domain_error, "elasticity index must be in [0, inf]");
  SemiAxisModel copy = *this;
  copy.elasticity_ = b;
  return copy;
}

AxisKind SemiAxisModel::kind() const {
  struct Visitor {
    AxisKind operator()(const families::Explicit&) { return AxisKind::explicit_axes; }
    AxisKind operator()(const families::FiniteDim&) { return AxisKind::finite_dim; }
    AxisKind operator()(const families::Exponential&) { return AxisKind::exponential; }
    AxisKind operator()(const families::ExpNLogN&) { return AxisKind::exp_n_log_n; }
    AxisKind operator()(const families::Polynomial&) { return AxisKind::polynomial; }
    AxisKind operator()(const families::PolyLog&) { return AxisKind::poly_log; }
    AxisKind operator()(const families::DoubleExp&) { return AxisKind::double_exp; }
    AxisKind operator()(const families::SobolevBox&) { return AxisKind::sobolev_box; }
    AxisKind operator()(const families::Scaled&) { return AxisKind::scaled; }
  };
  return std::visit(Visitor{}, family_);
}

double SemiAxisModel::semi_axis(std::int64_t n) const {
  if (n < 1) throw Error(errc::domain_error, "semi-axis index must be >= 1");
  struct Visitor {
    std::int64_t n;
    std::int64_t budget;

    double operator()(const families::Explicit& f) const {
      return n <= static_cast<std::int64_t>(f.values.size()) ? f.values[n - 1] : 0.0;
    }
    double operator()(const families::FiniteDim& f) const {
      return n <= f.d ? f.value : 0.0;
    }
    double operator()(const families::Exponential& f) const {
      return std::exp(-static_cast<double>(n) / f.c);
    }
    double operator()(const families::ExpNLogN& f) const {
      if (n == 1) return 1.0;
      return std::exp(-static_cast<double>(n) * std::log(static_cast<double>(n)) / f.c);
    }
    double operator()(const families::Polynomial& f) const {
      return std::pow(f.c / static_cast<double>(n), 1.0 / f.alpha);
    }
    double operator()(const families::PolyLog& f) const {
      return poly_log_formula(f, std::max(n, f.clamp_index));
    }
    double operator()(const families::DoubleExp& f) const {
      return double_exp_formula(f, std::max(n, f.clamp_index));
    }
    double operator()(const families::SobolevBox& f) const {
      const double lambda = dirichlet_nth_eigenvalue(f.box, n, budget);
      return 1.0 / std::sqrt(1.0 + std::pow(lambda, f.k));
    }
    double operator()(const families::Scaled& f) const {
      return f.lambda * f.inner->semi_axis(n);
    }
  };
  return std::visit(Visitor{n, budget_}, family_);
}

namespace {

// Corrects an analytic inversion guess by direct evaluation, returning the
// count |{n : eval(n) >= eps}| for a non-increasing eval.
template <typename Eval>
std::int64_t adjusted_count(Eval&& eval, double guess, double eps, std::int64_t budget) {
  if (!(guess < static_cast<double>(budget) + 2.0))
    throw Error(errc::overflow_budget, "semi-axis count exceeds the configured budget");
  std::int64_t n = guess <= 0 ? 0 : static_cast<std::int64_t>(guess);
  while (eval(n + 1) >= eps) {
    ++n;
    if (n > budget)
      throw Error(errc::overflow_budget, "semi-axis count exceeds the configured budget");
  }
  while (n >= 1 && eval(n) < eps) --n;
  return n;
}

}  // namespace

std::int64_t SemiAxisModel::counting_function(double eps) const {
  if (!(eps > 0)) throw Error(errc::domain_error, "counting threshold must be positive");

  struct Visitor {
    double eps;
    std::int64_t budget;
    const SemiAxisModel* self;

    std::int64_t operator()(const families::Explicit& f) const {
      auto it = std::partition_point(f.values.begin(), f.values.end(),
                                     [&](double v) { return v >= eps; });
      return static_cast<std::int64_t>(it - f.values.begin());
    }
    std::int64_t operator()(const families::FiniteDim& f) const {
      std::int64_t count = f.value >= eps ? f.d : 0;
      if (count > budget)
        throw Error(errc::overflow_budget, "semi-axis count exceeds the configured budget");
      return count;
    }
    std::int64_t operator()(const families::Exponential& f) const {
      const double guess = std::floor(f.c * std::log(1.0 / eps));
      auto eval = [&](std::int64_t n) { return std::exp(-static_cast<double>(n) / f.c); };
      return adjusted_count(eval, guess, eps, budget);
    }
    std::int64_t operator()(const families::ExpNLogN& f) const {
      if (eps > 1.0) return 0;
      // Tail: n ln n <= y with y = c ln(1/eps); inverted by n = e^{W(y)}.
      const double y = f.c * std::log(1.0 / eps);
      double guess = 1.0;
      if (y > 0) guess = std::floor(std::exp(lambert_w(y)));
      auto eval = [&](std::int64_t n) { return self->semi_axis(n); };
      return adjusted_count(eval, std::max(1.0, guess), eps, budget);
    }
    std::int64_t operator()(const families::Polynomial& f) const {
      const double guess = std::floor(f.c * std::pow(eps, -f.alpha));
      auto eval = [&](std::int64_t n) {
        return std::pow(f.c / static_cast<double>(n), 1.0 / f.alpha);
      };
      return adjusted_count(eval, guess, eps, budget);
    }
    std::int64_t operator()(const families::PolyLog& f) const {
      auto eval = [&](std::int64_t n) { return poly_log_formula(f, std::max(n, f.clamp_index)); };
      if (eval(1) < eps) return 0;
      // No closed-form inverse; exponential + binary search on the monotone tail.
      std::int64_t lo = f.clamp_index;  // eval(lo) >= eps unless handled above
      std::int64_t hi = lo;
      while (eval(hi + 1) >= eps) {
        std::int64_t width = std::max<std::int64_t>(1, hi);
        hi += width;
        if (hi > budget) {
          if (eval(budget + 1) >= eps)
            throw Error(errc::overflow_budget, "semi-axis count exceeds the configured budget");
          hi = budget;
          break;
        }
      }
      while (lo < hi) {
        std::int64_t mid = lo + (hi - lo + 1) / 2;
        if (eval(mid) >= eps) {
          lo = mid;
        } else {
          hi = mid - 1;
        }
      }
      return lo;
    }
    std::int64_t operator()(const families::DoubleExp& f) const {
      const double exponent = f.c * std::pow(eps, -f.alpha);
      // Inverse count ~ c0 e^{exponent}; refuse before the exp overflows.
      if (exponent > std::log(static_cast<double>(budget) + 2.0) - std::log(f.c0) + 2.0) {
        auto eval = [&](std::int64_t n) { return double_exp_formula(f, std::max(n, f.clamp_index)); };
        if (eval(budget + 1) >= eps)
          throw Error(errc::overflow_budget, "semi-axis count exceeds the configured budget");
      }
      const double guess = std::floor(f.c0 * std::exp(exponent));
      auto eval = [&](std::int64_t n) { return double_exp_formula(f, std::max(n, f.clamp_index)); };
      return adjusted_count(eval, guess, eps, budget);
    }
    std::int64_t operator()(const families::SobolevBox& f) const {
      if (eps >= 1.0) return 0;
      const double inv2 = 1.0 / (eps * eps);
      const double s = std::pow(inv2 - 1.0, 1.0 / f.k);
      if (!std::isfinite(s))
        throw Error(errc::overflow_budget, "semi-axis count exceeds the configured budget");
      try {
        return dirichlet_eigenvalue_count(f.box, s, budget);
      } catch (const Error& e) {
        if (e.code() == errc::budget_exceeded)
          throw Error(errc::overflow_budget, e.what());
        throw;
      }
    }
    std::int64_t operator()(const families::Scaled& f) const {
      return f.inner->counting_function(eps / f.lambda);
    }
  };
  return std::visit(Visitor{eps, budget_, this}, family_);
}

double SemiAxisModel::max_semi_axis() const {
  struct Visitor {
    const SemiAxisModel* self;

    double operator()(const families::Explicit& f) const { return f.values.front(); }
    double operator()(const families::FiniteDim& f) const { return f.value; }
    double operator()(const families::Exponential& f) const { return std::exp(-1.0 / f.c); }
    double operator()(const families::ExpNLogN&) const { return 1.0; }
    double operator()(const families::Polynomial& f) const { return std::pow(f.c, 1.0 / f.alpha); }
    double operator()(const families::PolyLog& f) const { return poly_log_formula(f, f.clamp_index); }
    double operator()(const families::DoubleExp& f) const { return double_exp_formula(f, f.clamp_index); }
    double operator()(const families::SobolevBox& f) const {
      return 1.0 / std::sqrt(1.0 + std::pow(f.box.first_eigenvalue(), f.k));
    }
    double operator()(const families::Scaled& f) const {
      return f.lambda * f.inner->max_semi_axis();
    }
  };
  return std::visit(Visitor{this}, family_);
}

std::vector<double> SemiAxisModel::truncate_at(double eps_min) const {
  if (!(eps_min > 0)) throw Error(errc::domain_error, "truncation threshold must be positive");
  const std::int64_t count = counting_function(eps_min);

  if (const auto* f = std::get_if<families::Explicit>(&family_)) {
    return std::vector<double>(f->values.begin(), f->values.begin() + count);
  }
  if (const auto* f = std::get_if<families::SobolevBox>(&family_)) {
    if (count == 0) return {};
    const double s = std::pow(1.0 / (eps_min * eps_min) - 1.0, 1.0 / f->k);
    std::vector<double> evs;
    try {
      evs = dirichlet_eigenvalues(f->box, s, budget_);
    } catch (const Error& e) {
      if (e.code() == errc::budget_exceeded) throw Error(errc::overflow_budget, e.what());
      throw;
    }
    std::vector<double> out(evs.size());
    for (std::size_t i = 0; i < evs.size(); ++i)
      out[i] = 1.0 / std::sqrt(1.0 + std::pow(evs[i], f->k));
    return out;
  }
  if (const auto* f = std::get_if<families::Scaled>(&family_)) {
    std::vector<double> out = f->inner->truncate_at(eps_min / f->lambda);
    for (double& v : out) v *= f->lambda;
    return out;
  }

  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::int64_t n = 1; n <= count; ++n) out.push_back(semi_axis(n));
  return out;
}

SemiAxisModel merge_truncated(const SemiAxisModel& a, const SemiAxisModel& b,
                              double eps_min) {
  std::vector<double> va = a.truncate_at(eps_min);
  std::vector<double> vb = b.truncate_at(eps_min);
  std::vector<double> merged(va.size() + vb.size());
  std::merge(va.begin(), va.end(), vb.begin(), vb.end(), merged.begin(),
             std::greater<double>());
  return SemiAxisModel::explicit_axes(std::move(merged),
                                      std::max(a.axis_budget(), b.axis_budget()));
}

}  // namespace ellipsoid
