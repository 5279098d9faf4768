// ellipsoid-lab: compactness measures of l^2 ellipsoids from the command line.
// Subcommands: integrals, entropy, risk, risk-sweep, asymptotics, sobolev,
// simulate, verify. Reports go to stdout or --output as JSON/CSV.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ellipsoid/asymptotics.hpp"
#include "ellipsoid/entropy.hpp"
#include "ellipsoid/errors.hpp"
#include "ellipsoid/integrals.hpp"
#include "ellipsoid/model_json.hpp"
#include "ellipsoid/reports.hpp"
#include "ellipsoid/risk.hpp"
#include "ellipsoid/simulate.hpp"
#include "ellipsoid/sobolev.hpp"
#include "ellipsoid/util.hpp"
#include "ellipsoid/verify.hpp"

namespace {

using namespace ellipsoid;
using nlohmann::ordered_json;

struct GridSpec {
  double start = 0.0;
  double stop = 0.0;
  int points = 0;
  std::string scale = "log";

  bool set() const { return points != 0; }
  std::vector<double> make() const {
    if (points < 2) throw Error(errc::config, "grid needs points >= 2");
    GridScale s;
    if (scale == "linear") {
      s = GridScale::linear;
    } else if (scale == "log") {
      s = GridScale::log;
    } else {
      throw Error(errc::config, "grid scale must be linear or log");
    }
    return make_grid(start, stop, points, s);
  }
};

struct OutputSpec {
  std::string path;
  std::string format;  // "json", "csv", or "" = infer/default json

  std::string resolved_format() const {
    std::string fmt = format;
    std::string ext;
    const auto dot = path.rfind('.');
    if (dot != std::string::npos) ext = path.substr(dot + 1);
    if (fmt.empty()) {
      if (ext == "csv") return "csv";
      if (ext == "json" || ext.empty()) return "json";
      throw Error(errc::config, "cannot infer report format from extension ." + ext);
    }
    if (!path.empty() && !ext.empty() && ext != fmt)
      throw Error(errc::config, "format '" + fmt + "' does not match extension ." + ext);
    if (fmt != "json" && fmt != "csv")
      throw Error(errc::config, "format must be json or csv");
    return fmt;
  }

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      if (text.empty() || text.back() != '\n') std::cout << '\n';
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(errc::config, "cannot open output file " + path);
    out << text;
    if (text.empty() || text.back() != '\n') out << '\n';
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(errc::config, "cannot read file " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

SemiAxisModel load_model(const std::string& source) {
  if (source.empty()) throw Error(errc::config, "a --model is required");
  const auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && source[first] == '{') return model_from_json(source);
  return model_from_json(read_file(source));
}

std::vector<double> parse_number_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string piece = text.substr(start, comma - start);
    if (!piece.empty()) {
      try {
        out.push_back(std::stod(piece));
      } catch (const std::exception&) {
        throw Error(errc::config, std::string("invalid number in ") + what + ": " + piece);
      }
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw Error(errc::config, std::string(what) + " must not be empty");
  return out;
}

// Fills flag targets from a JSON config file; command-line values win.
void merge_config_file(const std::string& path, CLI::App* sub) {
  const ordered_json j = [&] {
    try {
      return ordered_json::parse(read_file(path));
    } catch (const Error&) {
      throw;
    } catch (const std::exception& e) {
      throw Error(errc::config, std::string("invalid config JSON: ") + e.what());
    }
  }();
  auto set_if_unset = [&](const char* flag, const ordered_json& value) {
    CLI::Option* opt = sub->get_option_no_throw(flag);
    if (opt == nullptr || opt->count() > 0) return;
    std::string text = value.is_string() ? value.get<std::string>() : value.dump();
    opt->add_result(text);
    opt->run_callback();
  };
  for (const auto& [key, value] : j.items()) {
    if (key == "grid" && value.is_object()) {
      if (value.contains("start")) set_if_unset("--grid-start", value["start"]);
      if (value.contains("stop")) set_if_unset("--grid-stop", value["stop"]);
      if (value.contains("points")) set_if_unset("--grid-points", value["points"]);
      if (value.contains("scale")) set_if_unset("--grid-scale", value["scale"]);
    } else if (key == "output" && value.is_object()) {
      if (value.contains("path")) set_if_unset("--output", value["path"]);
      if (value.contains("format")) set_if_unset("--format", value["format"]);
    } else if (key != "subcommand") {
      set_if_unset(("--" + key).c_str(), value);
    }
  }
}

int run_cli(int argc, char** argv) {
  CLI::App app{"compactness measures of l^2 ellipsoids"};
  app.require_subcommand(1);

  // Shared option storage; each subcommand binds the pieces it uses.
  std::string model_source;
  std::string config_path;
  GridSpec grid;
  OutputSpec output;
  double sigma = 0.0;
  double epsilon = 0.0;
  double tol = 1e-12;

  auto add_common = [&](CLI::App* sub, bool with_grid) {
    sub->add_option("--config", config_path, "JSON config file; flags override its values");
    sub->add_option("--output", output.path, "report file (stdout when absent)");
    sub->add_option("--format", output.format, "json or csv (inferred from extension)");
    if (with_grid) {
      sub->add_option("--grid-start", grid.start, "grid start");
      sub->add_option("--grid-stop", grid.stop, "grid stop");
      sub->add_option("--grid-points", grid.points, "number of grid points");
      sub->add_option("--grid-scale", grid.scale, "linear or log (default log)");
    }
  };

  // integrals ---------------------------------------------------------------
  auto* cmd_integrals = app.add_subcommand("integrals", "type-tau integrals I_tau(eps)");
  std::vector<double> taus{1.0};
  std::string method = "exact";
  double quad_tol = 1e-10;
  cmd_integrals->add_option("--model", model_source, "model JSON or file");
  cmd_integrals->add_option("--tau", taus, "tau values (>= 1)")->expected(-1);
  cmd_integrals->add_option("--epsilon", epsilon, "single threshold (alternative to a grid)");
  cmd_integrals->add_option("--method", method, "exact, quadrature, or both");
  cmd_integrals->add_option("--tol", quad_tol, "quadrature tolerance");
  add_common(cmd_integrals, true);

  // entropy -----------------------------------------------------------------
  auto* cmd_entropy = app.add_subcommand("entropy", "metric-entropy bounds and estimate");
  cmd_entropy->add_option("--model", model_source, "model JSON or file");
  cmd_entropy->add_option("--epsilon", epsilon, "single threshold (alternative to a grid)");
  add_common(cmd_entropy, true);

  // risk --------------------------------------------------------------------
  auto* cmd_risk = app.add_subcommand("risk", "Pinsker linear minimax risk at one sigma");
  cmd_risk->add_option("--model", model_source, "model JSON or file");
  cmd_risk->add_option("--sigma", sigma, "noise level");
  cmd_risk->add_option("--tol", tol, "solver residual tolerance");
  add_common(cmd_risk, false);

  // risk-sweep ----------------------------------------------------------------
  auto* cmd_risk_sweep = app.add_subcommand("risk-sweep", "risk across a sigma grid (CSV)");
  cmd_risk_sweep->add_option("--model", model_source, "model JSON or file");
  cmd_risk_sweep->add_option("--tol", tol, "solver residual tolerance");
  add_common(cmd_risk_sweep, true);

  // asymptotics ---------------------------------------------------------------
  auto* cmd_asym = app.add_subcommand("asymptotics", "exact-vs-predicted convergence sweep");
  std::string family_source;
  std::string quantity_name_opt = "entropy";
  cmd_asym->add_option("--family", family_source, "decay family JSON or file");
  cmd_asym->add_option("--model", model_source, "exact-side model (defaults to family)");
  cmd_asym->add_option("--quantity", quantity_name_opt,
                       "entropy, linear-risk, critical-radius, nonlinear-risk");
  add_common(cmd_asym, true);

  // sobolev -------------------------------------------------------------------
  auto* cmd_sobolev = app.add_subcommand("sobolev", "box-domain spectral quantities");
  std::string lengths_text = "1";
  int order_k = 1;
  double s_max = 0.0;
  std::string sobolev_quantity;
  cmd_sobolev->add_option("--lengths", lengths_text, "box side lengths, comma-separated");
  cmd_sobolev->add_option("--k", order_k, "smoothness order");
  cmd_sobolev->add_option("--s-max", s_max, "export the spectrum up to this eigenvalue");
  cmd_sobolev->add_option("--quantity", sobolev_quantity,
                          "weyl, riesz, entropy, or risk over a grid");
  add_common(cmd_sobolev, true);

  // simulate ------------------------------------------------------------------
  auto* cmd_sim = app.add_subcommand("simulate", "Monte Carlo MSE of the Pinsker filter");
  std::int64_t trials = 100000;
  std::uint64_t seed = 0;
  std::int64_t n_trunc = 0;
  std::string truth_json;
  cmd_sim->add_option("--model", model_source, "model JSON or file");
  cmd_sim->add_option("--sigma", sigma, "noise level");
  cmd_sim->add_option("--trials", trials, "number of Monte Carlo trials");
  cmd_sim->add_option("--seed", seed, "RNG seed");
  cmd_sim->add_option("--n-trunc", n_trunc, "simulated coordinates (default: support + 8)");
  cmd_sim->add_option("--x", truth_json, "truth vector as JSON array (default: worst case)");
  add_common(cmd_sim, false);

  // verify ----------------------------------------------------------------------
  auto* cmd_verify = app.add_subcommand("verify", "run an acceptance suite");
  std::string suite = "core";
  cmd_verify->add_option("--suite", suite, "core, asymptotics, sobolev, montecarlo, all");
  add_common(cmd_verify, false);

  CLI11_PARSE(app, argc, argv);
  CLI::App* sub = app.get_subcommands().front();
  if (!config_path.empty()) merge_config_file(config_path, sub);

  // Sweep-style subcommands emit CSV tables unless told otherwise.
  if (output.format.empty() && output.path.empty() &&
      (sub == cmd_risk_sweep || sub == cmd_asym || sub == cmd_sobolev)) {
    output.format = "csv";
  }
  const std::string format = output.resolved_format();

  if (sub == cmd_integrals) {
    const SemiAxisModel model = load_model(model_source);
    std::vector<double> eps_list = grid.set() ? grid.make() : std::vector<double>{};
    if (!grid.set()) {
      if (!(epsilon > 0)) throw Error(errc::config, "need --epsilon or a grid");
      eps_list.push_back(epsilon);
    }
    if (method != "exact" && method != "quadrature" && method != "both")
      throw Error(errc::config, "--method must be exact, quadrature, or both");
    std::vector<IntegralResult> rows;
    for (double tau : taus) {
      for (double eps : eps_list) {
        if (method != "quadrature") rows.push_back(integral_exact(model, tau, eps));
        if (method != "exact")
          rows.push_back(integral_quadrature(model, tau, eps, quad_tol));
      }
    }
    if (format == "csv") {
      output.write(integrals_to_csv(rows).dump());
    } else {
      ordered_json arr = ordered_json::array();
      for (const auto& r : rows) arr.push_back(ordered_json::parse(integral_to_json(r)));
      output.write(arr.dump(2));
    }
    return 0;
  }

  if (sub == cmd_entropy) {
    const SemiAxisModel model = load_model(model_source);
    std::vector<double> eps_list = grid.set() ? grid.make() : std::vector<double>{};
    if (!grid.set()) {
      if (!(epsilon > 0)) throw Error(errc::config, "need --epsilon or a grid");
      eps_list.push_back(epsilon);
    }
    std::vector<EntropyBounds> rows;
    rows.reserve(eps_list.size());
    for (double eps : eps_list) rows.push_back(entropy_estimate(model, eps));
    if (format == "csv") {
      output.write(entropy_to_csv(rows).dump());
    } else {
      ordered_json arr = ordered_json::array();
      for (const auto& r : rows) arr.push_back(ordered_json::parse(entropy_to_json(r)));
      output.write(arr.dump(2));
    }
    return 0;
  }

  if (sub == cmd_risk) {
    const SemiAxisModel model = load_model(model_source);
    if (!(sigma > 0)) throw Error(errc::config, "risk needs --sigma > 0");
    SolverOptions opts;
    opts.tol = tol;
    const PinskerSolution sol = linear_minimax_risk(model, sigma, opts);
    if (format == "csv") {
      output.write(risk_sweep_to_csv({sol}).dump());
    } else {
      output.write(ordered_json::parse(pinsker_to_json(sol)).dump(2));
    }
    return 0;
  }

  if (sub == cmd_risk_sweep) {
    const SemiAxisModel model = load_model(model_source);
    if (!grid.set()) throw Error(errc::config, "risk-sweep needs a sigma grid");
    const std::vector<double> sigmas = grid.make();
    SolverOptions opts;
    opts.tol = tol;
    std::vector<PinskerSolution> sols(sigmas.size());
    parallel_for(static_cast<std::int64_t>(sigmas.size()), [&](std::int64_t i) {
      sols[i] = linear_minimax_risk(model, sigmas[i], opts);
    });
    if (format == "json") {
      ordered_json arr = ordered_json::array();
      for (const auto& s : sols) arr.push_back(ordered_json::parse(pinsker_to_json(s)));
      output.write(arr.dump(2));
    } else {
      output.write(risk_sweep_to_csv(sols).dump());
    }
    return 0;
  }

  if (sub == cmd_asym) {
    if (family_source.empty()) throw Error(errc::config, "asymptotics needs --family");
    const SemiAxisModel family = load_model(family_source);
    const SemiAxisModel model =
        model_source.empty() ? family : load_model(model_source);
    if (!grid.set()) throw Error(errc::config, "asymptotics needs a parameter grid");
    Quantity quantity;
    if (quantity_name_opt == "entropy") {
      quantity = Quantity::entropy;
    } else if (quantity_name_opt == "linear-risk") {
      quantity = Quantity::linear_risk;
    } else if (quantity_name_opt == "critical-radius") {
      quantity = Quantity::critical_radius;
    } else if (quantity_name_opt == "nonlinear-risk") {
      quantity = Quantity::nonlinear_risk;
    } else {
      throw Error(errc::config, "unknown quantity " + quantity_name_opt);
    }
    const SweepReport report = convergence_sweep(model, family, quantity, grid.make());
    output.write(format == "json" ? sweep_to_json(report) : sweep_to_csv(report).dump());
    return 0;
  }

  if (sub == cmd_sobolev) {
    const BoxDomain box(parse_number_list(lengths_text, "--lengths"));
    if (s_max > 0) {
      const std::vector<double> evs = dirichlet_eigenvalues(box, s_max);
      Csv csv;
      csv.header = {"index", "lambda", "mu"};
      for (std::size_t i = 0; i < evs.size(); ++i) {
        const double mu = 1.0 / std::sqrt(1.0 + std::pow(evs[i], order_k));
        csv.rows.push_back({std::to_string(i + 1), format_double(evs[i]), format_double(mu)});
      }
      output.write(csv.dump());
      return 0;
    }
    if (sobolev_quantity.empty())
      throw Error(errc::config, "sobolev needs --s-max or --quantity with a grid");
    if (!grid.set()) throw Error(errc::config, "sobolev --quantity needs a grid");
    const std::vector<double> params = grid.make();
    Csv csv;
    csv.header = {"param", "exact", "one_term", "two_term"};
    for (double p : params) {
      double exact = 0.0;
      double one = 0.0;
      double two = 0.0;
      if (sobolev_quantity == "weyl") {
        exact = static_cast<double>(dirichlet_eigenvalue_count(box, p));
        one = weyl_counting(box, p, WeylOrder::one_term);
        two = weyl_counting(box, p, WeylOrder::two_term);
      } else if (sobolev_quantity == "riesz") {
        exact = riesz_mean(box, p);
        one = riesz_mean_prediction(box, p, WeylOrder::one_term);
        two = riesz_mean_prediction(box, p, WeylOrder::two_term);
      } else if (sobolev_quantity == "entropy") {
        const SemiAxisModel axes = sobolev_semi_axes(box, order_k, p / 32.0);
        exact = entropy_estimate(axes, p).estimate;
        one = sobolev_entropy_prediction(box, order_k, p, WeylOrder::one_term).value;
        two = sobolev_entropy_prediction(box, order_k, p, WeylOrder::two_term).value;
      } else if (sobolev_quantity == "risk") {
        const SobolevRiskPrediction lead =
            sobolev_risk_prediction(box, order_k, p, WeylOrder::one_term);
        const double eps_floor = std::min(0.5, std::sqrt(lead.value) / 64.0);
        const SemiAxisModel axes = sobolev_semi_axes(box, order_k, eps_floor);
        exact = linear_minimax_risk(axes, p).linear_risk;
        one = lead.value;
        two = sobolev_risk_prediction(box, order_k, p, WeylOrder::two_term).value;
      } else {
        throw Error(errc::config, "unknown sobolev quantity " + sobolev_quantity);
      }
      csv.rows.push_back({format_double(p), format_double(exact), format_double(one),
                          format_double(two)});
    }
    output.write(csv.dump());
    return 0;
  }

  if (sub == cmd_sim) {
    const SemiAxisModel model = load_model(model_source);
    if (!(sigma > 0)) throw Error(errc::config, "simulate needs --sigma > 0");
    SimConfig config;
    config.sigma = sigma;
    config.trials = trials;
    config.seed = seed;
    config.n_trunc = n_trunc;
    std::int64_t resolved_n = n_trunc;
    if (resolved_n == 0) {
      const double eps = critical_radius(model, sigma);
      resolved_n = model.counting_function(
                       std::nextafter(eps, std::numeric_limits<double>::infinity())) +
                   8;
    }
    std::vector<double> x;
    if (truth_json.empty()) {
      x = densify(worst_case_vector(model, sigma), resolved_n);
    } else {
      const ordered_json j = [&] {
        try {
          return ordered_json::parse(truth_json);
        } catch (const std::exception& e) {
          throw Error(errc::config, std::string("invalid --x JSON: ") + e.what());
        }
      }();
      if (!j.is_array()) throw Error(errc::config, "--x must be a JSON array");
      x = j.get<std::vector<double>>();
      for (std::size_t i = static_cast<std::size_t>(resolved_n); i < x.size(); ++i) {
        if (x[i] != 0.0)
          throw Error(errc::config,
                      "truth vector extends beyond the truncation; raise --n-trunc");
      }
      x.resize(static_cast<std::size_t>(resolved_n), 0.0);
    }
    config.n_trunc = resolved_n;
    const MseEstimate estimate = empirical_mse(model, sigma, x, config);
    output.write(ordered_json::parse(mse_to_json(estimate)).dump(2));
    return 0;
  }

  if (sub == cmd_verify) {
    const std::vector<CriterionResult> results = run_suite(suite);
    bool all_pass = true;
    for (const auto& r : results) {
      std::cout << format_criterion_line(r) << "\n";
      all_pass = all_pass && r.pass;
    }
    std::cout << (all_pass ? "suite passed" : "suite FAILED") << " (" << results.size()
              << " criteria)\n";
    return all_pass ? 0 : 2;
  }

  throw Error(errc::config, "unhandled subcommand");
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const Error& e) {
    ordered_json j;
    j["error"] = e.code_name();
    j["message"] = e.what();
    std::cerr << j.dump() << "\n";
    return errc_is_numerical(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    ordered_json j;
    j["error"] = "INTERNAL";
    j["message"] = e.what();
    std::cerr << j.dump() << "\n";
    return 1;
  }
}
