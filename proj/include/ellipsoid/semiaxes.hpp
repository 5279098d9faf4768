#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "ellipsoid/box_spectrum.hpp"

namespace ellipsoid {

// Cap on how many semi-axes any counting/truncation request may produce.
// A guardrail for desk-scale computation, configurable per model.
inline constexpr std::int64_t kDefaultAxisBudget = 100'000'000;

class SemiAxisModel;

namespace families {

struct Explicit {
  std::vector<double> values;  // sorted non-increasing, no NaN/negatives
};

struct FiniteDim {
  std::int64_t d;
  double value;
};

// ln mu_n = -n / c
struct Exponential {
  double c;
};

// ln mu_n = -n ln(n) / c for n >= 2; mu_1 = 1 (the n=1 formula value).
struct ExpNLogN {
  double c;
};

// mu_n = (c / n)^{1/alpha}
struct Polynomial {
  double c;
  double alpha;
};

// mu_n = (c (ln n)^beta / (alpha^beta n))^{1/alpha} for n beyond the head
// clamp; for beta > ln 2 the raw formula increases up to n ~ e^beta, so the
// head is held constant at the peak value to keep the sequence non-increasing.
struct PolyLog {
  double c;
  double alpha;
  double beta;
  std::int64_t clamp_index;  // mu_n = formula(max(n, clamp_index))
};

// n-th axis solves exp(c mu_n^{-alpha}) = n / c0, i.e.
// mu_n = (c / ln(n/c0))^{1/alpha}; indices n <= ceil(c0 e) are clamped to the
// value at ceil(c0 e) + 1 so the sequence stays non-increasing and finite.
struct DoubleExp {
  double c0;
  double c;
  double alpha;
  std::int64_t clamp_index;  // mu_n = formula(max(n, clamp_index))
};

// mu_n = (1 + lambda_n^k)^{-1/2} with lambda_n the Dirichlet spectrum of box.
struct SobolevBox {
  BoxDomain box;
  int k;
};

struct Scaled {
  std::shared_ptr<const SemiAxisModel> inner;
  double lambda;
};

using Variant = std::variant<Explicit, FiniteDim, Exponential, ExpNLogN, Polynomial,
                             PolyLog, DoubleExp, SobolevBox, Scaled>;

}  // namespace families

enum class AxisKind {
  explicit_axes,
  finite_dim,
  exponential,
  exp_n_log_n,
  polynomial,
  poly_log,
  double_exp,
  sobolev_box,
  scaled,
};

// Immutable non-increasing semi-axis sequence mu = {mu_n}. All operations are
// pure; instances are safe to share across threads.
class SemiAxisModel {
 public:
  static SemiAxisModel explicit_axes(std::vector<double> values,
                                     std::int64_t budget = kDefaultAxisBudget);
  static SemiAxisModel finite_dim(std::int64_t d, double value,
                                  std::int64_t budget = kDefaultAxisBudget);
  static SemiAxisModel exponential(double c, std::int64_t budget = kDefaultAxisBudget);
  static SemiAxisModel exp_n_log_n(double c, std::int64_t budget = kDefaultAxisBudget);
  static SemiAxisModel polynomial(double c, double alpha,
                                  std::int64_t budget = kDefaultAxisBudget);
  static SemiAxisModel poly_log(double c, double alpha, double beta,
                                std::int64_t budget = kDefaultAxisBudget);
  static SemiAxisModel double_exp(double c0, double c, double alpha,
                                  std::int64_t budget = kDefaultAxisBudget);
  static SemiAxisModel sobolev_box(std::vector<double> lengths, int k,
                                   std::int64_t budget = kDefaultAxisBudget);
  static SemiAxisModel scaled(SemiAxisModel inner, double lambda);

  // mu_n for n >= 1; 0 beyond the support of explicit/finite families.
  double semi_axis(std::int64_t n) const;

  // M_mu(eps) = |{n : mu_n >= eps}|. Ties at mu_n = eps are counted.
  std::int64_t counting_function(double eps) const;

  // mu_* = max_n mu_n.
  double max_semi_axis() const;

  // All axes >= eps_min, sorted non-increasing; size == counting_function(eps_min).
  std::vector<double> truncate_at(double eps_min) const;

  // (RC)_b elasticity index; metadata only, never verified numerically.
  // Defaults follow the family (0 for finite/log-of-exponential decay,
  // alpha for polynomial-type, +infinity for double-exponential).
  std::optional<double> elasticity_index() const { return elasticity_; }
  SemiAxisModel with_elasticity_index(double b) const;

  std::int64_t axis_budget() const { return budget_; }
  AxisKind kind() const;
  const families::Variant& family() const { return family_; }

 private:
  SemiAxisModel(families::Variant fam, std::int64_t budget,
                std::optional<double> elasticity)
      : family_(std::move(fam)), budget_(budget), elasticity_(elasticity) {}

  families::Variant family_;
  std::int64_t budget_;
  std::optional<double> elasticity_;
};

// Concatenation of two models' axes above a floor, materialized as an
// Explicit model: M_merged(eps) = M_a(eps) + M_b(eps) for eps >= eps_min.
SemiAxisModel merge_truncated(const SemiAxisModel& a, const SemiAxisModel& b,
                              double eps_min);

}  // namespace ellipsoid
