#include "ellipsoid/reports.hpp"

#include <sstream>

#include <json.hpp>

#include "ellipsoid/errors.hpp"
#include "ellipsoid/util.hpp"

namespace ellipsoid {

namespace {

using nlohmann::ordered_json;

ordered_json parse_json(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw Error(errc::model_parse, std::string("invalid report JSON: ") + e.what());
  }
}

const char* method_name(IntegralMethod m) {
  return m == IntegralMethod::exact_sum ? "exact_sum" : "quadrature";
}

IntegralMethod method_from(const std::string& s) {
  if (s == "exact_sum") return IntegralMethod::exact_sum;
  if (s == "quadrature") return IntegralMethod::quadrature;
  throw Error(errc::model_parse, "unknown integral method '" + s + "'");
}

}  // namespace

std::string Csv::dump() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) os << ',';
    os << header[i];
  }
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      os << row[i];
    }
    os << '\n';
  }
  return os.str();
}

Csv Csv::parse(const std::string& text) {
  Csv out;
  std::istringstream is(text);
  std::string line;
  bool first = true;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
      std::size_t comma = line.find(',', start);
      cells.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (first) {
      out.header = std::move(cells);
      first = false;
    } else {
      out.rows.push_back(std::move(cells));
    }
  }
  return out;
}

std::string integral_to_json(const IntegralResult& r) {
  ordered_json j;
  j["tau"] = r.tau;
  j["epsilon"] = r.epsilon;
  j["value"] = r.value;
  j["method"] = method_name(r.method);
  j["err"] = r.abs_error_estimate;
  return j.dump();
}

IntegralResult integral_from_json(const std::string& text) {
  const ordered_json j = parse_json(text);
  IntegralResult r;
  r.tau = j.at("tau").get<double>();
  r.epsilon = j.at("epsilon").get<double>();
  r.value = j.at("value").get<double>();
  r.method = method_from(j.at("method").get<std::string>());
  r.abs_error_estimate = j.at("err").get<double>();
  return r;
}

Csv integrals_to_csv(const std::vector<IntegralResult>& rs) {
  Csv csv;
  csv.header = {"tau", "epsilon", "value", "method", "err"};
  for (const auto& r : rs) {
    csv.rows.push_back({format_double(r.tau), format_double(r.epsilon),
                        format_double(r.value), method_name(r.method),
                        format_double(r.abs_error_estimate)});
  }
  return csv;
}

std::string entropy_to_json(const EntropyBounds& b) {
  ordered_json j;
  j["epsilon"] = b.epsilon;
  j["lower"] = b.lower;
  j["upper"] = b.upper;
  j["estimate"] = b.estimate;
  j["error_magnitude"] = b.error_magnitude;
  return j.dump();
}

EntropyBounds entropy_from_json(const std::string& text) {
  const ordered_json j = parse_json(text);
  EntropyBounds b;
  b.epsilon = j.at("epsilon").get<double>();
  b.lower = j.at("lower").get<double>();
  b.upper = j.at("upper").get<double>();
  b.estimate = j.at("estimate").get<double>();
  b.error_magnitude = j.at("error_magnitude").get<double>();
  return b;
}

Csv entropy_to_csv(const std::vector<EntropyBounds>& bs) {
  Csv csv;
  csv.header = {"epsilon", "lower", "upper", "estimate", "error_magnitude"};
  for (const auto& b : bs) {
    csv.rows.push_back({format_double(b.epsilon), format_double(b.lower),
                        format_double(b.upper), format_double(b.estimate),
                        format_double(b.error_magnitude)});
  }
  return csv;
}

std::string pinsker_to_json(const PinskerSolution& s) {
  ordered_json j;
  j["sigma"] = s.sigma;
  j["critical_radius"] = s.critical_radius;
  j["linear_risk"] = s.linear_risk;
  j["psi_residual"] = s.psi_residual;
  j["bracket_low"] = s.bracket_low;
  j["bracket_high"] = s.bracket_high;
  j["b_sigma"] = s.b_sigma;
  j["vacuous"] = s.bracket_vacuous;
  j["solver_iterations"] = s.solver_iterations;
  return j.dump();
}

PinskerSolution pinsker_from_json(const std::string& text) {
  const ordered_json j = parse_json(text);
  PinskerSolution s;
  s.sigma = j.at("sigma").get<double>();
  s.critical_radius = j.at("critical_radius").get<double>();
  s.linear_risk = j.at("linear_risk").get<double>();
  s.psi_residual = j.at("psi_residual").get<double>();
  s.bracket_low = j.at("bracket_low").get<double>();
  s.bracket_high = j.at("bracket_high").get<double>();
  s.b_sigma = j.at("b_sigma").get<double>();
  s.bracket_vacuous = j.at("vacuous").get<bool>();
  s.solver_iterations = j.at("solver_iterations").get<int>();
  return s;
}

Csv risk_sweep_to_csv(const std::vector<PinskerSolution>& sols) {
  Csv csv;
  csv.header = {"sigma", "eps_sigma", "R_L", "bracket_low", "b_sigma"};
  for (const auto& s : sols) {
    csv.rows.push_back({format_double(s.sigma), format_double(s.critical_radius),
                        format_double(s.linear_risk), format_double(s.bracket_low),
                        format_double(s.b_sigma)});
  }
  return csv;
}

std::string mse_to_json(const MseEstimate& e) {
  ordered_json j;
  j["mean"] = e.mean;
  j["std_error"] = e.std_error;
  j["trials"] = e.trials;
  j["analytic"] = e.analytic;
  return j.dump();
}

MseEstimate mse_from_json(const std::string& text) {
  const ordered_json j = parse_json(text);
  MseEstimate e;
  e.mean = j.at("mean").get<double>();
  e.std_error = j.at("std_error").get<double>();
  e.trials = j.at("trials").get<std::int64_t>();
  e.analytic = j.at("analytic").get<double>();
  return e;
}

std::string sweep_to_json(const SweepReport& report) {
  ordered_json j;
  j["quantity"] = quantity_name(report.quantity);
  j["model"] = report.model_description;
  ordered_json rows = ordered_json::array();
  for (const auto& r : report.rows) {
    ordered_json row;
    row["param"] = r.param;
    row["exact"] = r.exact;
    row["predicted"] = r.predicted;
    row["ratio"] = r.ratio;
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j.dump();
}

Csv sweep_to_csv(const SweepReport& report) {
  Csv csv;
  csv.header = {"param", "exact", "predicted", "ratio"};
  for (const auto& r : report.rows) {
    csv.rows.push_back({format_double(r.param), format_double(r.exact),
                        format_double(r.predicted), format_double(r.ratio)});
  }
  return csv;
}

}  // namespace ellipsoid
