#include <doctest.h>

#include <cmath>
#include <random>

#include "ellipsoid/errors.hpp"
#include "ellipsoid/integrals.hpp"

using namespace ellipsoid;

TEST_CASE("exact sum reproduces hand-integrated values") {
  const SemiAxisModel one = SemiAxisModel::explicit_axes({1.0});
  CHECK(integral_exact(one, 1.0, 0.5).value == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  // int_{0.5}^{1} u^-2 du = 1, int_{0.5}^{1} u^-3 du = 1.5
  CHECK(integral_exact(one, 2.0, 0.5).value == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(integral_exact(one, 3.0, 0.5).value == doctest::Approx(1.5).epsilon(1e-14));

  const SemiAxisModel three = SemiAxisModel::finite_dim(3, 1.0);
  CHECK(integral_exact(three, 1.0, 0.1).value ==
        doctest::Approx(3.0 * std::log(10.0)).epsilon(1e-14));

  const SemiAxisModel poly = SemiAxisModel::polynomial(1.0, 1.0);
  const double expected = std::log(4.0) + std::log(2.0) + std::log(4.0 / 3.0);
  CHECK(integral_exact(poly, 1.0, 0.25).value == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("exact sum result metadata") {
  const IntegralResult r = integral_exact(SemiAxisModel::explicit_axes({1.0}), 2.0, 0.5);
  CHECK(r.method == IntegralMethod::exact_sum);
  CHECK(r.abs_error_estimate == 0.0);
  CHECK(r.tau == 2.0);
  CHECK(r.epsilon == 0.5);
}

TEST_CASE("tau stability near 1") {
  // The closed form must glide into the log sum as tau -> 1.
  const SemiAxisModel m = SemiAxisModel::explicit_axes({1.0, 0.7, 0.3});
  const double at_one = integral_exact(m, 1.0, 0.1).value;
  const double near_one = integral_exact(m, 1.0 + 1e-9, 0.1).value;
  CHECK(near_one == doctest::Approx(at_one).epsilon(1e-7));
}

TEST_CASE("invalid tau is rejected") {
  const SemiAxisModel m = SemiAxisModel::explicit_axes({1.0});
  CHECK_THROWS_AS((void)integral_exact(m, 0.5, 0.1), Error);
  try {
    (void)integral_quadrature(m, 0.99, 0.1, 1e-8);
  } catch (const Error& e) {
    CHECK(e.code() == errc::invalid_tau);
  }
}

TEST_CASE("quadrature agrees with the exact sum") {
  CHECK(integral_quadrature(SemiAxisModel::explicit_axes({1.0}), 2.0, 0.5, 1e-10).value ==
        doctest::Approx(1.0).epsilon(1e-10));
  // Empty domain of integration.
  const IntegralResult z =
      integral_quadrature(SemiAxisModel::explicit_axes({1.0, 1.0}), 1.0, 1.0, 1e-10);
  CHECK(z.value == 0.0);

  std::mt19937_64 gen(2024);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const std::vector<SemiAxisModel> models = {
      SemiAxisModel::explicit_axes({1.3, 0.9, 0.9, 0.4, 0.1}),
      SemiAxisModel::finite_dim(7, 0.8),
      SemiAxisModel::polynomial(1.0, 1.2),
      SemiAxisModel::exponential(2.0),
  };
  for (const auto& m : models) {
    for (double tau : {1.0, 1.5, 2.0, 3.0}) {
      const double eps = (0.05 + 0.85 * unif(gen)) * m.max_semi_axis();
      const double exact = integral_exact(m, tau, eps).value;
      const IntegralResult q = integral_quadrature(m, tau, eps, 1e-11);
      CHECK(q.value == doctest::Approx(exact).epsilon(1e-9));
      CHECK(q.abs_error_estimate <= 1e-11);
      CHECK(q.method == IntegralMethod::quadrature);
    }
  }
}

TEST_CASE("quadrature budget exhaustion raises") {
  QuadratureOptions opts;
  opts.max_evaluations = 5;
  const SemiAxisModel m = SemiAxisModel::polynomial(1.0, 1.0);
  CHECK_THROWS_AS((void)integral_quadrature(m, 2.0, 0.01, 1e-14, opts), Error);
  try {
    (void)integral_quadrature(m, 2.0, 0.01, 1e-14, opts);
  } catch (const Error& e) {
    CHECK(e.code() == errc::quadrature_non_convergence);
  }
}

TEST_CASE("value is non-increasing in eps") {
  std::mt19937_64 gen(99);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const SemiAxisModel m = SemiAxisModel::polynomial(1.0, 1.0);
  for (double tau : {1.0, 2.0, 3.0}) {
    for (int i = 0; i < 20; ++i) {
      double e1 = 0.02 + 0.9 * unif(gen);
      double e2 = 0.02 + 0.9 * unif(gen);
      if (e1 > e2) std::swap(e1, e2);
      CHECK(integral_exact(m, tau, e1).value >= integral_exact(m, tau, e2).value);
    }
  }
}

TEST_CASE("type-1 integral is scale invariant") {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const SemiAxisModel m = SemiAxisModel::explicit_axes({1.0, 0.6, 0.2, 0.07});
  for (int i = 0; i < 20; ++i) {
    const double eps = 0.01 + 0.9 * unif(gen);
    const double lambda = 0.2 + 4.0 * unif(gen);
    const double base = integral_exact(m, 1.0, eps).value;
    const double scaled =
        integral_exact(SemiAxisModel::scaled(m, lambda), 1.0, lambda * eps).value;
    CHECK(scaled == doctest::Approx(base).epsilon(1e-13));
  }
}

TEST_CASE("polynomial family integral asymptotics") {
  // I_tau(eps) (alpha+tau-1) / (c eps^{-alpha-tau+1}) -> 1 as eps -> 0.
  const double c = 1.0;
  const double alpha = 1.0;
  const SemiAxisModel m = SemiAxisModel::polynomial(c, alpha);
  for (double tau : {1.5, 2.0, 3.0}) {
    double prev_gap = 1e9;
    for (double eps : {1e-2, 1e-3, 1e-4}) {
      const double value = integral_exact(m, tau, eps).value;
      const double ratio =
          value * (alpha + tau - 1.0) / (c * std::pow(eps, -alpha - tau + 1.0));
      const double gap = std::abs(ratio - 1.0);
      CHECK(gap < prev_gap);
      prev_gap = gap;
    }
    CHECK(prev_gap < 0.01);
  }
}

TEST_CASE("transfer identity") {
  const SemiAxisModel one = SemiAxisModel::explicit_axes({1.0});
  CHECK(transfer_residual(one, 2.0, 2.0, 0.3) == 0.0);
  CHECK(std::abs(transfer_residual(one, 2.0, 3.0, 0.5, 1e-11)) < 1e-9);

  const SemiAxisModel poly = SemiAxisModel::polynomial(1.0, 2.0);
  const double scale = std::max(1.0, integral_exact(poly, 1.0, 0.1).value);
  CHECK(std::abs(transfer_residual(poly, 1.0, 2.0, 0.1, 1e-10 * scale)) / scale < 1e-7);
  CHECK(std::abs(transfer_residual(poly, 3.0, 1.5, 0.2, 1e-10)) /
            std::max(1.0, integral_exact(poly, 3.0, 0.2).value) <
        1e-7);
}
