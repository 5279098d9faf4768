#include <doctest.h>

#include <cstdlib>
#include <random>

#include "ellipsoid/reports.hpp"
#include "ellipsoid/util.hpp"
#include "ellipsoid/verify.hpp"

using namespace ellipsoid;

TEST_CASE("format_double is shortest round trip") {
  std::mt19937_64 gen(314);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const double x = unif(gen) * std::pow(10.0, static_cast<int>(gen() % 40) - 20);
    const std::string s = format_double(x);
    CHECK(std::strtod(s.c_str(), nullptr) == x);
  }
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1.0) == "1");
}

TEST_CASE("pinsker solution JSON round trips losslessly") {
  PinskerSolution s;
  s.sigma = 0.1;
  s.critical_radius = 0.009900990099009901;
  s.linear_risk = 1.0 / 3.0;
  s.psi_residual = -7.771561172376096e-16;
  s.bracket_low = 0.0;
  s.bracket_high = s.linear_risk;
  s.b_sigma = 12.345678901234567;
  s.bracket_vacuous = true;
  s.solver_iterations = 42;
  const PinskerSolution t = pinsker_from_json(pinsker_to_json(s));
  CHECK(t.sigma == s.sigma);
  CHECK(t.critical_radius == s.critical_radius);
  CHECK(t.linear_risk == s.linear_risk);
  CHECK(t.psi_residual == s.psi_residual);
  CHECK(t.b_sigma == s.b_sigma);
  CHECK(t.bracket_vacuous == s.bracket_vacuous);
  CHECK(t.solver_iterations == s.solver_iterations);
}

TEST_CASE("integral and entropy records round trip") {
  IntegralResult r;
  r.value = 2.3671236141543427;
  r.tau = 1.5;
  r.epsilon = 0.25;
  r.method = IntegralMethod::quadrature;
  r.abs_error_estimate = 3.7e-12;
  const IntegralResult q = integral_from_json(integral_to_json(r));
  CHECK(q.value == r.value);
  CHECK(q.tau == r.tau);
  CHECK(q.epsilon == r.epsilon);
  CHECK(q.method == r.method);
  CHECK(q.abs_error_estimate == r.abs_error_estimate);

  EntropyBounds b{0.01, 96.8, 120.1, 96.8, 21.2};
  const EntropyBounds c = entropy_from_json(entropy_to_json(b));
  CHECK(c.epsilon == b.epsilon);
  CHECK(c.upper == b.upper);

  MseEstimate e{0.5000277094748791, 0.0006117444732608868, 1000000, 0.5};
  const MseEstimate f = mse_from_json(mse_to_json(e));
  CHECK(f.mean == e.mean);
  CHECK(f.std_error == e.std_error);
  CHECK(f.trials == e.trials);
}

TEST_CASE("risk sweep CSV columns and lossless values") {
  PinskerSolution s;
  s.sigma = 1e-3;
  s.critical_radius = 0.005466453256262352;
  s.linear_risk = 9.03481632918773e-05;
  s.bracket_low = 0.0;
  s.bracket_high = s.linear_risk;
  s.b_sigma = 4.6357578652154805;
  const Csv csv = risk_sweep_to_csv({s});
  CHECK(csv.header == std::vector<std::string>{"sigma", "eps_sigma", "R_L",
                                               "bracket_low", "b_sigma"});
  const Csv parsed = Csv::parse(csv.dump());
  CHECK(parsed.header == csv.header);
  REQUIRE(parsed.rows.size() == 1);
  CHECK(std::strtod(parsed.rows[0][1].c_str(), nullptr) == s.critical_radius);
  CHECK(std::strtod(parsed.rows[0][2].c_str(), nullptr) == s.linear_risk);
  CHECK(std::strtod(parsed.rows[0][4].c_str(), nullptr) == s.b_sigma);
}

TEST_CASE("sweep and table serialization") {
  SweepReport rep;
  rep.quantity = Quantity::entropy;
  rep.model_description = "polynomial(c=1,alpha=1)";
  rep.rows.push_back({1e-2, 96.8, 100.0, 0.968});
  const Csv csv = sweep_to_csv(rep);
  CHECK(csv.header == std::vector<std::string>{"param", "exact", "predicted", "ratio"});
  const Csv parsed = Csv::parse(csv.dump());
  CHECK(std::strtod(parsed.rows[0][3].c_str(), nullptr) == 0.968);

  const std::string json = sweep_to_json(rep);
  CHECK(json.find("\"quantity\":\"entropy\"") != std::string::npos);

  const Csv ecsv = entropy_to_csv({EntropyBounds{0.1, 1.0, 2.0, 1.0, 0.5}});
  CHECK(ecsv.header == std::vector<std::string>{"epsilon", "lower", "upper", "estimate",
                                                "error_magnitude"});
  const Csv icsv = integrals_to_csv({IntegralResult{}});
  CHECK(icsv.header == std::vector<std::string>{"tau", "epsilon", "value", "method", "err"});
}

TEST_CASE("verify suites are named and well formed") {
  CHECK(suite_criteria("core") == std::vector<int>{1, 2, 3, 5, 6, 7, 10});
  CHECK(suite_criteria("sobolev") == std::vector<int>{8, 9});
  CHECK(suite_criteria("montecarlo") == std::vector<int>{12});
  CHECK(suite_criteria("all").size() == 14);
  CHECK_THROWS(suite_criteria("bogus"));

  const auto results = run_suite("sobolev");
  REQUIRE(results.size() == 2);
  for (const auto& r : results) {
    CHECK(r.pass);
    CHECK(!format_criterion_line(r).empty());
  }
}
