#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ellipsoid/semiaxes.hpp"

namespace ellipsoid {

enum class Quantity { entropy, linear_risk, critical_radius, nonlinear_risk };

const char* quantity_name(Quantity q) noexcept;

// One comparison point of a convergence study: exact desk-scale value against
// the closed-form asymptotic prediction.
struct SweepRow {
  double param = 0.0;      // eps for entropy, sigma for risk quantities
  double exact = 0.0;
  double predicted = 0.0;
  double ratio = 0.0;      // exact / predicted
};

struct SweepReport {
  Quantity quantity = Quantity::entropy;
  std::string model_description;
  std::vector<SweepRow> rows;
};

// Leading-order metric-entropy prediction for the analytic decay families:
//   finite_dim(d)    -> d ln(1/eps)
//   exponential(c)   -> (c/2) ln^2(1/eps)
//   exp_n_log_n(c)   -> c ln^2(1/eps) / (2 lnln(1/eps))
//   polynomial(c,a)  -> c eps^{-a} / a
//   poly_log(c,a,b)  -> (c/a) eps^{-a} (ln(1/eps))^b
//   double_exp(c0,c,a) -> (c0/(c a)) eps^a exp(c eps^{-a})
// Explicit models count as finite-dimensional. Iterated-log families require
// eps small enough for the logs to be positive (DomainError otherwise).
double predict_entropy(const SemiAxisModel& family, double eps);

// Leading-order linear minimax risk per family; polynomial gives the Pinsker
// constant ((a+2)/a)^{a/(a+2)} (c sigma^2/(a+1))^{2/(a+2)}.
double predict_linear_risk(const SemiAxisModel& family, double sigma);

// Critical radius (c a sigma^2 / ((a+1)(a+2)))^{1/(a+2)}; polynomial-type only.
double predict_critical_radius(const SemiAxisModel& family, double sigma);

// Two-term risk expansion for M(eps) = c1 eps^{-a1} + c2 eps^{-a2} + o(.),
// a1 > a2 > 0 (the nonlinear transfer additionally needs 2 a2 > a1).
double predict_risk_two_term(double c1, double alpha1, double c2, double alpha2,
                             double sigma);

// N-term entropy sum_i c_i eps^{-a_i}/a_i for a1 > ... > aN > 0 with a1 < 2 aN.
double predict_entropy_multi_term(const std::vector<std::pair<double, double>>& coeffs,
                                  double eps);

// Bias-variance prediction inf_eps { sigma^2 V_b(eps) + eps^2 }, with
//   V_0 = M_mu, V_b = 2b H/((b+1)(b+2)) for finite b, V_inf = int 2H(u)/u du,
// H approximated by the surrogate (default: the type-1 integral).
using EntropySurrogate = std::function<double(const SemiAxisModel&, double)>;
double predict_bias_variance(const SemiAxisModel& model, double sigma,
                             const EntropySurrogate& entropy_fn = {});

// Exact-vs-predicted table over a parameter grid. `model` supplies the exact
// side, `family` the closed forms; they must describe the same sequence.
SweepReport convergence_sweep(const SemiAxisModel& model, const SemiAxisModel& family,
                              Quantity quantity, const std::vector<double>& param_grid);

}  // namespace ellipsoid
