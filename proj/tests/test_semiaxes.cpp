#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ellipsoid/errors.hpp"
#include "ellipsoid/model_json.hpp"
#include "ellipsoid/semiaxes.hpp"

using namespace ellipsoid;

namespace {

// Reference counting by direct scan, for cross-checking the inverted paths.
std::int64_t scan_count(const SemiAxisModel& m, double eps, std::int64_t limit) {
  std::int64_t count = 0;
  for (std::int64_t n = 1; n <= limit; ++n) {
    if (m.semi_axis(n) >= eps) {
      count = n;
    } else {
      break;
    }
  }
  return count;
}

}  // namespace

TEST_CASE("semi_axis follows each family formula") {
  CHECK(SemiAxisModel::finite_dim(4, 1.0).semi_axis(3) == 1.0);
  CHECK(SemiAxisModel::finite_dim(4, 1.0).semi_axis(5) == 0.0);
  CHECK(SemiAxisModel::polynomial(1.0, 1.0).semi_axis(5) == doctest::Approx(0.2));
  CHECK(SemiAxisModel::explicit_axes({1.0, 0.5, 0.25}).semi_axis(7) == 0.0);
  CHECK(SemiAxisModel::exponential(2.0).semi_axis(3) == doctest::Approx(std::exp(-1.5)));
  CHECK(SemiAxisModel::exp_n_log_n(1.0).semi_axis(1) == 1.0);
  CHECK(SemiAxisModel::exp_n_log_n(2.0).semi_axis(4) ==
        doctest::Approx(std::exp(-4.0 * std::log(4.0) / 2.0)));
  CHECK(SemiAxisModel::scaled(SemiAxisModel::explicit_axes({1.0}), 0.3).semi_axis(1) ==
        doctest::Approx(0.3));
  CHECK_THROWS_AS((void)SemiAxisModel::polynomial(1.0, 1.0).semi_axis(0), Error);
}

TEST_CASE("counting function counts ties and inverts the closed forms") {
  const SemiAxisModel ex = SemiAxisModel::explicit_axes({1.0, 0.5, 0.25});
  CHECK(ex.counting_function(0.5) == 2);  // tie at 0.5 is counted
  CHECK(ex.counting_function(0.50000001) == 1);
  CHECK(ex.counting_function(2.0) == 0);

  const SemiAxisModel poly = SemiAxisModel::polynomial(1.0, 1.0);
  CHECK(poly.counting_function(0.3) == 3);
  CHECK(poly.counting_function(0.2) == 5);  // tie mu_5 = 0.2
  CHECK(SemiAxisModel::finite_dim(4, 1.0).counting_function(0.9) == 4);
}

TEST_CASE("counting matches a direct scan across families") {
  std::mt19937_64 gen(42);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const std::vector<SemiAxisModel> models = {
      SemiAxisModel::exponential(1.7),
      SemiAxisModel::exp_n_log_n(2.3),
      SemiAxisModel::polynomial(1.3, 0.8),
      SemiAxisModel::poly_log(1.0, 1.0, 1.5),
      SemiAxisModel::poly_log(0.7, 1.2, -0.8),
      SemiAxisModel::double_exp(1.0, 1.0, 1.0),
  };
  for (const auto& m : models) {
    const double mu_star = m.max_semi_axis();
    for (int i = 0; i < 25; ++i) {
      const double eps = (0.05 + 0.9 * unif(gen)) * mu_star;
      std::int64_t count = 0;
      try {
        count = m.counting_function(eps);
      } catch (const Error& e) {
        REQUIRE(e.code() == errc::overflow_budget);  // steep family, tiny eps
        continue;
      }
      if (count > 250000) continue;  // reference scan too slow there
      CHECK(count == scan_count(m, eps, 300000));
    }
  }
}

TEST_CASE("max_semi_axis") {
  CHECK(SemiAxisModel::explicit_axes({1.0, 0.5}).max_semi_axis() == 1.0);
  CHECK(SemiAxisModel::polynomial(2.0, 1.0).max_semi_axis() == doctest::Approx(2.0));
  CHECK(SemiAxisModel::scaled(SemiAxisModel::explicit_axes({1.0}), 0.3).max_semi_axis() ==
        doctest::Approx(0.3));
  CHECK(SemiAxisModel::exp_n_log_n(3.0).max_semi_axis() == 1.0);
}

TEST_CASE("truncate_at returns the axes above the floor") {
  const auto t = SemiAxisModel::polynomial(1.0, 1.0).truncate_at(0.3);
  REQUIRE(t.size() == 3);
  CHECK(t[0] == doctest::Approx(1.0));
  CHECK(t[1] == doctest::Approx(0.5));
  CHECK(t[2] == doctest::Approx(1.0 / 3.0));

  const auto e = SemiAxisModel::explicit_axes({1.0, 0.5, 0.25}).truncate_at(0.4);
  CHECK(e == std::vector<double>{1.0, 0.5});

  CHECK(SemiAxisModel::finite_dim(2, 1.0).truncate_at(2.0).empty());
}

TEST_CASE("counting invariants: monotone, scale-equivariant, consistent") {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const std::vector<SemiAxisModel> models = {
      SemiAxisModel::explicit_axes({2.0, 1.5, 1.5, 0.2}),
      SemiAxisModel::exponential(2.0),
      SemiAxisModel::polynomial(1.0, 1.5),
      SemiAxisModel::poly_log(1.0, 1.0, 1.0),
  };
  for (const auto& m : models) {
    const double mu_star = m.max_semi_axis();
    for (int i = 0; i < 20; ++i) {
      double e1 = (0.03 + 0.9 * unif(gen)) * mu_star;
      double e2 = (0.03 + 0.9 * unif(gen)) * mu_star;
      if (e1 > e2) std::swap(e1, e2);
      CHECK(m.counting_function(e1) >= m.counting_function(e2));

      const double lambda = 0.25 + 3.0 * unif(gen);
      const SemiAxisModel scaled = SemiAxisModel::scaled(m, lambda);
      CHECK(scaled.counting_function(lambda * e1) == m.counting_function(e1));

      CHECK(static_cast<std::int64_t>(m.truncate_at(e1).size()) ==
            m.counting_function(e1));
    }
  }
}

TEST_CASE("jump structure at an explicit axis value") {
  const SemiAxisModel m = SemiAxisModel::explicit_axes({1.0, 0.5, 0.5, 0.25});
  const double v = 0.5;
  // Just below the jump both copies of 0.5 are still counted along with 1.0.
  CHECK(m.counting_function(v * (1 - 1e-12)) == 3);
  CHECK(m.counting_function(v) == 3);
  CHECK(m.counting_function(std::nextafter(v, 1.0)) == 1);
}

TEST_CASE("sequences are non-increasing and tend to zero") {
  const std::vector<SemiAxisModel> models = {
      SemiAxisModel::exponential(1.0),       SemiAxisModel::exp_n_log_n(2.0),
      SemiAxisModel::polynomial(2.0, 0.7),   SemiAxisModel::poly_log(1.0, 1.0, 2.5),
      SemiAxisModel::double_exp(2.0, 1.0, 1.5),
  };
  for (const auto& m : models) {
    double prev = m.semi_axis(1);
    for (std::int64_t n = 2; n <= 2000; ++n) {
      const double cur = m.semi_axis(n);
      CHECK(cur <= prev);
      prev = cur;
    }
    // Decay floor loose enough for the log-slow double-exponential family.
    CHECK(m.semi_axis(100000) < 0.5 * m.max_semi_axis());
    CHECK(m.semi_axis(100000) < m.semi_axis(100));
  }
}

TEST_CASE("poly_log head clamp keeps the peak flat") {
  // beta = 3: raw profile peaks near n = e^3 ~ 20.
  const SemiAxisModel m = SemiAxisModel::poly_log(1.0, 1.0, 3.0);
  CHECK(m.semi_axis(1) == m.semi_axis(2));
  CHECK(m.semi_axis(5) == m.semi_axis(2));
  CHECK(m.max_semi_axis() == m.semi_axis(1));
}

TEST_CASE("double_exp clamp and defining relation") {
  const SemiAxisModel m = SemiAxisModel::double_exp(1.0, 1.0, 1.0);
  const std::int64_t clamp = static_cast<std::int64_t>(std::ceil(std::exp(1.0))) + 1;
  CHECK(m.semi_axis(1) == m.semi_axis(clamp));
  CHECK(m.semi_axis(clamp + 1) < m.semi_axis(clamp));
  for (std::int64_t n = clamp; n <= clamp + 50; ++n) {
    const double mu = m.semi_axis(n);
    CHECK(std::exp(1.0 / mu) == doctest::Approx(static_cast<double>(n)).epsilon(1e-12));
  }
}

TEST_CASE("axis budget guards counting and truncation") {
  const SemiAxisModel capped = SemiAxisModel::polynomial(1.0, 1.0, 1000);
  CHECK(capped.counting_function(1e-2) == 100);
  CHECK_THROWS_AS((void)capped.counting_function(1e-4), Error);
  try {
    (void)capped.counting_function(1e-4);
  } catch (const Error& e) {
    CHECK(e.code() == errc::overflow_budget);
  }
  CHECK_THROWS_AS(
      (void)SemiAxisModel::double_exp(1.0, 1.0, 1.0, 1000).counting_function(0.05), Error);
}

TEST_CASE("constructor validation") {
  CHECK_THROWS_AS((void)SemiAxisModel::explicit_axes({}), Error);
  CHECK_THROWS_AS((void)SemiAxisModel::explicit_axes({0.0, 0.0}), Error);
  CHECK_THROWS_AS((void)SemiAxisModel::explicit_axes({0.5, 1.0}), Error);
  CHECK_THROWS_AS((void)SemiAxisModel::explicit_axes({1.0, -0.1}), Error);
  CHECK_THROWS_AS((void)SemiAxisModel::explicit_axes({1.0, std::nan("")}), Error);
  CHECK_THROWS_AS((void)SemiAxisModel::polynomial(0.0, 1.0), Error);
  CHECK_THROWS_AS((void)SemiAxisModel::finite_dim(0, 1.0), Error);
  CHECK_THROWS_AS((void)SemiAxisModel::sobolev_box({1.0}, 0), Error);
  CHECK_THROWS_AS((void)SemiAxisModel::scaled(SemiAxisModel::explicit_axes({1.0}), 0.0),
                  Error);
  // Trailing zeros are legitimate.
  CHECK(SemiAxisModel::explicit_axes({1.0, 0.0}).counting_function(0.5) == 1);
}

TEST_CASE("elasticity index defaults per family") {
  CHECK(*SemiAxisModel::explicit_axes({1.0}).elasticity_index() == 0.0);
  CHECK(*SemiAxisModel::exponential(1.0).elasticity_index() == 0.0);
  CHECK(*SemiAxisModel::polynomial(1.0, 1.7).elasticity_index() == 1.7);
  CHECK(*SemiAxisModel::poly_log(1.0, 2.0, 1.0).elasticity_index() == 2.0);
  CHECK(std::isinf(*SemiAxisModel::double_exp(1.0, 1.0, 1.0).elasticity_index()));
  CHECK(*SemiAxisModel::sobolev_box({1.0, 1.0}, 2).elasticity_index() == 1.0);
  const SemiAxisModel overridden =
      SemiAxisModel::polynomial(1.0, 1.0).with_elasticity_index(3.0);
  CHECK(*overridden.elasticity_index() == 3.0);
}

TEST_CASE("sobolev_box model: spectrum duality") {
  const SemiAxisModel m = SemiAxisModel::sobolev_box({1.0}, 1);
  const double lambda1 = std::numbers::pi * std::numbers::pi;
  CHECK(m.semi_axis(1) == doctest::Approx(1.0 / std::sqrt(1.0 + lambda1)).epsilon(1e-12));
  for (double eps : {0.9, 0.3, 0.05, 0.01}) {
    const double s = 1.0 / (eps * eps) - 1.0;
    CHECK(m.counting_function(eps) == dirichlet_eigenvalue_count(BoxDomain({1.0}), s));
  }
  CHECK(m.counting_function(1.5) == 0);
  const auto axes = m.truncate_at(0.04);
  for (std::size_t i = 1; i < axes.size(); ++i) CHECK(axes[i] <= axes[i - 1]);
}

TEST_CASE("merge_truncated adds counting functions") {
  const SemiAxisModel a = SemiAxisModel::polynomial(1.0, 2.0);
  const SemiAxisModel b = SemiAxisModel::polynomial(0.5, 1.5);
  const SemiAxisModel merged = merge_truncated(a, b, 0.05);
  for (double eps : {0.08, 0.2, 0.5}) {
    CHECK(merged.counting_function(eps) ==
          a.counting_function(eps) + b.counting_function(eps));
  }
}

TEST_CASE("model JSON: interface field names, round trip, parse errors") {
  const SemiAxisModel poly =
      model_from_json(R"({"kind": "polynomial", "c": 1.0, "alpha": 1.0})");
  CHECK(poly.semi_axis(5) == doctest::Approx(0.2));

  const SemiAxisModel ex =
      model_from_json(R"({"kind": "explicit", "values": [1, 0.5, 0.25]})");
  CHECK(ex.counting_function(0.5) == 2);

  const SemiAxisModel nested = model_from_json(
      R"({"kind": "scaled", "lambda": 2.0, "inner": {"kind": "finite_dim", "d": 3, "value": 1.0}})");
  CHECK(nested.max_semi_axis() == doctest::Approx(2.0));

  const SemiAxisModel box =
      model_from_json(R"({"kind": "sobolev_box", "lengths": [1, 1], "k": 1})");
  CHECK(box.kind() == AxisKind::sobolev_box);

  for (const auto& m : {poly, ex, nested, box}) {
    const SemiAxisModel round = model_from_json(model_to_json(m));
    CHECK(round.kind() == m.kind());
    CHECK(round.max_semi_axis() == doctest::Approx(m.max_semi_axis()).epsilon(1e-15));
  }

  const SemiAxisModel capped = model_from_json(
      R"({"kind": "exponential", "c": 1.0, "cap": 500, "elasticity_index": "inf"})");
  CHECK(capped.axis_budget() == 500);
  CHECK(std::isinf(*capped.elasticity_index()));

  for (const char* bad : {
           "not json",
           R"({"kind": "mystery"})",
           R"({"kind": "polynomial", "c": 1.0})",
           R"({"kind": "explicit", "values": "nope"})",
       }) {
    try {
      (void)model_from_json(bad);
      CHECK_MESSAGE(false, "expected parse failure for: ", bad);
    } catch (const Error& e) {
      CHECK(e.code() == errc::model_parse);
    }
  }
}
