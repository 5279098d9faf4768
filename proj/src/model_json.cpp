#include "ellipsoid/model_json.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "ellipsoid/errors.hpp"
#include "ellipsoid/util.hpp"

namespace ellipsoid {

namespace {

using nlohmann::ordered_json;

double number_field(const ordered_json& j, const char* name) {
  if (!j.contains(name) || !j[name].is_number())
    throw Error(errc::model_parse, std::string("model field '") + name + "' must be a number");
  return j[name].get<double>();
}

std::int64_t int_field(const ordered_json& j, const char* name) {
  if (!j.contains(name) || !j[name].is_number_integer())
    throw Error(errc::model_parse, std::string("model field '") + name + "' must be an integer");
  return j[name].get<std::int64_t>();
}

SemiAxisModel parse(const ordered_json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw Error(errc::model_parse, "model JSON needs a string 'kind' field");
  const std::string kind = j["kind"].get<std::string>();

  std::int64_t budget = kDefaultAxisBudget;
  if (j.contains("cap")) {
    budget = int_field(j, "cap");
    if (budget < 1) throw Error(errc::model_parse, "model 'cap' must be >= 1");
  }

  SemiAxisModel model = [&]() -> SemiAxisModel {
    try {
      if (kind == "explicit") {
        if (!j.contains("values") || !j["values"].is_array())
          throw Error(errc::model_parse, "explicit model needs a 'values' array");
        std::vector<double> values;
        for (const auto& v : j["values"]) {
          if (!v.is_number()) throw Error(errc::model_parse, "'values' must be numbers");
          values.push_back(v.get<double>());
        }
        return SemiAxisModel::explicit_axes(std::move(values), budget);
      }
      if (kind == "finite_dim")
        return SemiAxisModel::finite_dim(int_field(j, "d"), number_field(j, "value"), budget);
      if (kind == "exponential")
        return SemiAxisModel::exponential(number_field(j, "c"), budget);
      if (kind == "exp_n_log_n")
        return SemiAxisModel::exp_n_log_n(number_field(j, "c"), budget);
      if (kind == "polynomial")
        return SemiAxisModel::polynomial(number_field(j, "c"), number_field(j, "alpha"), budget);
      if (kind == "poly_log")
        return SemiAxisModel::poly_log(number_field(j, "c"), number_field(j, "alpha"),
                                       number_field(j, "beta"), budget);
      if (kind == "double_exp")
        return SemiAxisModel::double_exp(number_field(j, "c0"), number_field(j, "c"),
                                         number_field(j, "alpha"), budget);
      if (kind == "sobolev_box") {
        if (!j.contains("lengths") || !j["lengths"].is_array())
          throw Error(errc::model_parse, "sobolev_box model needs a 'lengths' array");
        std::vector<double> lengths;
        for (const auto& v : j["lengths"]) {
          if (!v.is_number()) throw Error(errc::model_parse, "'lengths' must be numbers");
          lengths.push_back(v.get<double>());
        }
        return SemiAxisModel::sobolev_box(std::move(lengths),
                                          static_cast<int>(int_field(j, "k")), budget);
      }
      if (kind == "scaled") {
        if (!j.contains("inner"))
          throw Error(errc::model_parse, "scaled model needs an 'inner' model");
        return SemiAxisModel::scaled(parse(j["inner"]), number_field(j, "lambda"));
      }
    } catch (const Error&) {
      throw;
    } catch (const std::exception& e) {
      throw Error(errc::model_parse, e.what());
    }
    throw Error(errc::model_parse, "unknown model kind '" + kind + "'");
  }();

  if (j.contains("elasticity_index")) {
    const auto& b = j["elasticity_index"];
    if (b.is_string() && (b.get<std::string>() == "inf" || b.get<std::string>() == "infinity")) {
      model = model.with_elasticity_index(std::numeric_limits<double>::infinity());
    } else if (b.is_number()) {
      model = model.with_elasticity_index(b.get<double>());
    } else {
      throw Error(errc::model_parse, "'elasticity_index' must be a number or \"inf\"");
    }
  }
  return model;
}

ordered_json serialize(const SemiAxisModel& model) {
  ordered_json j;
  struct Visitor {
    ordered_json& j;
    void operator()(const families::Explicit& f) {
      j["kind"] = "explicit";
      j["values"] = f.values;
    }
    void operator()(const families::FiniteDim& f) {
      j["kind"] = "finite_dim";
      j["d"] = f.d;
      j["value"] = f.value;
    }
    void operator()(const families::Exponential& f) {
      j["kind"] = "exponential";
      j["c"] = f.c;
    }
    void operator()(const families::ExpNLogN& f) {
      j["kind"] = "exp_n_log_n";
      j["c"] = f.c;
    }
    void operator()(const families::Polynomial& f) {
      j["kind"] = "polynomial";
      j["c"] = f.c;
      j["alpha"] = f.alpha;
    }
    void operator()(const families::PolyLog& f) {
      j["kind"] = "poly_log";
      j["c"] = f.c;
      j["alpha"] = f.alpha;
      j["beta"] = f.beta;
    }
    void operator()(const families::DoubleExp& f) {
      j["kind"] = "double_exp";
      j["c0"] = f.c0;
      j["c"] = f.c;
      j["alpha"] = f.alpha;
    }
    void operator()(const families::SobolevBox& f) {
      j["kind"] = "sobolev_box";
      j["lengths"] = f.box.lengths;
      j["k"] = f.k;
    }
    void operator()(const families::Scaled& f) {
      j["kind"] = "scaled";
      j["lambda"] = f.lambda;
      j["inner"] = ordered_json::parse(model_to_json(*f.inner));
    }
  };
  std::visit(Visitor{j}, model.family());
  if (model.axis_budget() != kDefaultAxisBudget) j["cap"] = model.axis_budget();
  if (auto b = model.elasticity_index()) {
    if (std::isinf(*b)) {
      j["elasticity_index"] = "inf";
    } else {
      j["elasticity_index"] = *b;
    }
  }
  return j;
}

}  // namespace

SemiAxisModel model_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw Error(errc::model_parse, std::string("invalid model JSON: ") + e.what());
  }
  return parse(j);
}

std::string model_to_json(const SemiAxisModel& model) { return serialize(model).dump(); }

std::string model_description(const SemiAxisModel& model) {
  struct Visitor {
    std::string operator()(const families::Explicit& f) {
      return "explicit(n=" + std::to_string(f.values.size()) + ")";
    }
    std::string operator()(const families::FiniteDim& f) {
      return "finite_dim(d=" + std::to_string(f.d) + ",value=" + format_double(f.value) + ")";
    }
    std::string operator()(const families::Exponential& f) {
      return "exponential(c=" + format_double(f.c) + ")";
    }
    std::string operator()(const families::ExpNLogN& f) {
      return "exp_n_log_n(c=" + format_double(f.c) + ")";
    }
    std::string operator()(const families::Polynomial& f) {
      return "polynomial(c=" + format_double(f.c) + ",alpha=" + format_double(f.alpha) + ")";
    }
    std::string operator()(const families::PolyLog& f) {
      return "poly_log(c=" + format_double(f.c) + ",alpha=" + format_double(f.alpha) +
             ",beta=" + format_double(f.beta) + ")";
    }
    std::string operator()(const families::DoubleExp& f) {
      return "double_exp(c0=" + format_double(f.c0) + ",c=" + format_double(f.c) +
             ",alpha=" + format_double(f.alpha) + ")";
    }
    std::string operator()(const families::SobolevBox& f) {
      std::ostringstream os;
      os << "sobolev_box(lengths=";
      for (std::size_t i = 0; i < f.box.lengths.size(); ++i) {
        if (i) os << "x";
        os << format_double(f.box.lengths[i]);
      }
      os << ",k=" << f.k << ")";
      return os.str();
    }
    std::string operator()(const families::Scaled& f) {
      return "scaled(lambda=" + format_double(f.lambda) + "," +
             model_description(*f.inner) + ")";
    }
  };
  return std::visit(Visitor{}, model.family());
}

}  // namespace ellipsoid
