#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ellipsoid/asymptotics.hpp"
#include "ellipsoid/entropy.hpp"
#include "ellipsoid/errors.hpp"
#include "ellipsoid/integrals.hpp"
#include "ellipsoid/lambert.hpp"
#include "ellipsoid/model_json.hpp"
#include "ellipsoid/risk.hpp"
#include "ellipsoid/simulate.hpp"
#include "ellipsoid/sobolev.hpp"
#include "ellipsoid/verify.hpp"

namespace py = pybind11;
using namespace ellipsoid;

PYBIND11_MODULE(_core, m) {
  m.doc() = "compactness measures of l^2 ellipsoids";

  static py::exception<Error> exc(m, "EllipsoidError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      exc(e.what());
    }
  });

  py::class_<SemiAxisModel>(m, "SemiAxisModel")
      .def_static("explicit_axes", &SemiAxisModel::explicit_axes, py::arg("values"),
                  py::arg("budget") = kDefaultAxisBudget)
      .def_static("finite_dim", &SemiAxisModel::finite_dim, py::arg("d"), py::arg("value"),
                  py::arg("budget") = kDefaultAxisBudget)
      .def_static("exponential", &SemiAxisModel::exponential, py::arg("c"),
                  py::arg("budget") = kDefaultAxisBudget)
      .def_static("exp_n_log_n", &SemiAxisModel::exp_n_log_n, py::arg("c"),
                  py::arg("budget") = kDefaultAxisBudget)
      .def_static("polynomial", &SemiAxisModel::polynomial, py::arg("c"), py::arg("alpha"),
                  py::arg("budget") = kDefaultAxisBudget)
      .def_static("poly_log", &SemiAxisModel::poly_log, py::arg("c"), py::arg("alpha"),
                  py::arg("beta"), py::arg("budget") = kDefaultAxisBudget)
      .def_static("double_exp", &SemiAxisModel::double_exp, py::arg("c0"), py::arg("c"),
                  py::arg("alpha"), py::arg("budget") = kDefaultAxisBudget)
      .def_static("sobolev_box", &SemiAxisModel::sobolev_box, py::arg("lengths"),
                  py::arg("k"), py::arg("budget") = kDefaultAxisBudget)
      .def_static("scaled", &SemiAxisModel::scaled, py::arg("inner"), py::arg("lambda_"))
      .def_static("from_json", &model_from_json, py::arg("text"))
      .def("semi_axis", &SemiAxisModel::semi_axis, py::arg("n"))
      .def("counting_function", &SemiAxisModel::counting_function, py::arg("eps"))
      .def("max_semi_axis", &SemiAxisModel::max_semi_axis)
      .def("truncate_at", &SemiAxisModel::truncate_at, py::arg("eps_min"))
      .def_property_readonly("elasticity_index",
                             [](const SemiAxisModel& m_) {
                               return m_.elasticity_index();
                             })
      .def("to_json", [](const SemiAxisModel& m_) { return model_to_json(m_); })
      .def("__repr__", [](const SemiAxisModel& m_) {
        return "<SemiAxisModel " + model_description(m_) + ">";
      });

  py::enum_<IntegralMethod>(m, "IntegralMethod")
      .value("exact_sum", IntegralMethod::exact_sum)
      .value("quadrature", IntegralMethod::quadrature);

  py::class_<IntegralResult>(m, "IntegralResult")
      .def_readonly("value", &IntegralResult::value)
      .def_readonly("tau", &IntegralResult::tau)
      .def_readonly("epsilon", &IntegralResult::epsilon)
      .def_readonly("method", &IntegralResult::method)
      .def_readonly("abs_error_estimate", &IntegralResult::abs_error_estimate);

  m.def("integral_exact", &integral_exact, py::arg("model"), py::arg("tau"), py::arg("eps"));
  m.def(
      "integral_quadrature",
      [](const SemiAxisModel& model, double tau, double eps, double tol) {
        return integral_quadrature(model, tau, eps, tol);
      },
      py::arg("model"), py::arg("tau"), py::arg("eps"), py::arg("tol") = 1e-10);
  m.def("transfer_residual", &transfer_residual, py::arg("model"), py::arg("tau1"),
        py::arg("tau2"), py::arg("eps"), py::arg("tol") = 1e-10);

  py::class_<EntropyBounds>(m, "EntropyBounds")
      .def_readonly("epsilon", &EntropyBounds::epsilon)
      .def_readonly("lower", &EntropyBounds::lower)
      .def_readonly("upper", &EntropyBounds::upper)
      .def_readonly("estimate", &EntropyBounds::estimate)
      .def_readonly("error_magnitude", &EntropyBounds::error_magnitude);

  m.def("entropy_lower_bound", &entropy_lower_bound, py::arg("model"), py::arg("eps"));
  m.def("mityagin_bounds", &mityagin_bounds, py::arg("model"), py::arg("eps"));
  m.def("entropy_estimate", &entropy_estimate, py::arg("model"), py::arg("eps"));
  m.def("exact_entropy_single_axis", &exact_entropy_single_axis, py::arg("mu_star"),
        py::arg("eps"));

  py::class_<PinskerSolution>(m, "PinskerSolution")
      .def_readonly("sigma", &PinskerSolution::sigma)
      .def_readonly("critical_radius", &PinskerSolution::critical_radius)
      .def_readonly("linear_risk", &PinskerSolution::linear_risk)
      .def_readonly("psi_residual", &PinskerSolution::psi_residual)
      .def_readonly("bracket_low", &PinskerSolution::bracket_low)
      .def_readonly("bracket_high", &PinskerSolution::bracket_high)
      .def_readonly("b_sigma", &PinskerSolution::b_sigma)
      .def_readonly("bracket_vacuous", &PinskerSolution::bracket_vacuous)
      .def_readonly("solver_iterations", &PinskerSolution::solver_iterations);

  py::class_<RiskBracket>(m, "RiskBracket")
      .def_readonly("low", &RiskBracket::low)
      .def_readonly("high", &RiskBracket::high)
      .def_readonly("b_sigma", &RiskBracket::b_sigma)
      .def_readonly("vacuous", &RiskBracket::vacuous);

  m.def("psi", &psi, py::arg("model"), py::arg("eps"));
  m.def(
      "critical_radius",
      [](const SemiAxisModel& model, double sigma, double tol) {
        SolverOptions opts;
        opts.tol = tol;
        return critical_radius(model, sigma, opts);
      },
      py::arg("model"), py::arg("sigma"), py::arg("tol") = 1e-12);
  m.def(
      "linear_minimax_risk",
      [](const SemiAxisModel& model, double sigma, double tol) {
        SolverOptions opts;
        opts.tol = tol;
        return linear_minimax_risk(model, sigma, opts);
      },
      py::arg("model"), py::arg("sigma"), py::arg("tol") = 1e-12);
  m.def("linear_risk_variational", &linear_risk_variational, py::arg("model"),
        py::arg("sigma"));
  m.def(
      "pinsker_weights",
      [](const SemiAxisModel& model, double sigma, std::int64_t n_max) {
        return pinsker_weights(model, sigma, n_max);
      },
      py::arg("model"), py::arg("sigma"), py::arg("n_max"));
  m.def("lambert_w", &lambert_w, py::arg("x"));
  m.def(
      "nonlinear_risk_bracket",
      [](const SemiAxisModel& model, double sigma) {
        return nonlinear_risk_bracket(model, sigma);
      },
      py::arg("model"), py::arg("sigma"));

  m.def("predict_entropy", &predict_entropy, py::arg("family"), py::arg("eps"));
  m.def("predict_linear_risk", &predict_linear_risk, py::arg("family"), py::arg("sigma"));
  m.def("predict_critical_radius", &predict_critical_radius, py::arg("family"),
        py::arg("sigma"));
  m.def("predict_risk_two_term", &predict_risk_two_term, py::arg("c1"), py::arg("alpha1"),
        py::arg("c2"), py::arg("alpha2"), py::arg("sigma"));
  m.def("predict_entropy_multi_term", &predict_entropy_multi_term, py::arg("coeffs"),
        py::arg("eps"));
  m.def(
      "predict_bias_variance",
      [](const SemiAxisModel& model, double sigma) {
        return predict_bias_variance(model, sigma);
      },
      py::arg("model"), py::arg("sigma"));
  m.def("merge_truncated", &merge_truncated, py::arg("a"), py::arg("b"), py::arg("eps_min"));

  py::class_<BoxDomain>(m, "BoxDomain")
      .def(py::init<std::vector<double>>(), py::arg("lengths"))
      .def_readonly("lengths", &BoxDomain::lengths)
      .def_property_readonly("dim", &BoxDomain::dim)
      .def("volume", &BoxDomain::volume)
      .def("boundary_measure", &BoxDomain::boundary_measure)
      .def("first_eigenvalue", &BoxDomain::first_eigenvalue);

  py::enum_<WeylOrder>(m, "WeylOrder")
      .value("one_term", WeylOrder::one_term)
      .value("two_term", WeylOrder::two_term);

  py::class_<SpectralConstants>(m, "SpectralConstants")
      .def_readonly("kappa", &SpectralConstants::kappa)
      .def_readonly("k1", &SpectralConstants::k1)
      .def_readonly("k2", &SpectralConstants::k2)
      .def_readonly("chi_d", &SpectralConstants::chi_d)
      .def_readonly("chi_dm1", &SpectralConstants::chi_dm1)
      .def_readonly("p_k", &SpectralConstants::p_k);

  py::class_<SobolevPrediction>(m, "SobolevPrediction")
      .def_readonly("value", &SobolevPrediction::value)
      .def_readonly("second_order_proven", &SobolevPrediction::second_order_proven);

  py::class_<SobolevRiskPrediction>(m, "SobolevRiskPrediction")
      .def_readonly("value", &SobolevRiskPrediction::value)
      .def_readonly("constants", &SobolevRiskPrediction::constants);

  m.def(
      "dirichlet_eigenvalues",
      [](const BoxDomain& box, double s_max) { return dirichlet_eigenvalues(box, s_max); },
      py::arg("box"), py::arg("s_max"));
  m.def(
      "dirichlet_eigenvalue_count",
      [](const BoxDomain& box, double s) { return dirichlet_eigenvalue_count(box, s); },
      py::arg("box"), py::arg("s"));
  m.def(
      "sobolev_semi_axes",
      [](const BoxDomain& box, int k, double eps_min) {
        return sobolev_semi_axes(box, k, eps_min);
      },
      py::arg("box"), py::arg("k"), py::arg("eps_min"));
  m.def("chi_r", &chi_r, py::arg("hausdorff_measure"), py::arg("r"));
  m.def("unit_ball_volume", &unit_ball_volume, py::arg("r"));
  m.def("weyl_counting", &weyl_counting, py::arg("box"), py::arg("s"), py::arg("order"));
  m.def(
      "riesz_mean", [](const BoxDomain& box, double h) { return riesz_mean(box, h); },
      py::arg("box"), py::arg("h"));
  m.def("riesz_mean_prediction", &riesz_mean_prediction, py::arg("box"), py::arg("h"),
        py::arg("order"));
  m.def("sobolev_entropy_prediction", &sobolev_entropy_prediction, py::arg("box"),
        py::arg("k"), py::arg("eps"), py::arg("order"));
  m.def("sobolev_risk_prediction", &sobolev_risk_prediction, py::arg("box"), py::arg("k"),
        py::arg("sigma"), py::arg("order"));
  m.def("pinsker_constant", &pinsker_constant, py::arg("k"));

  py::class_<SimConfig>(m, "SimConfig")
      .def(py::init<>())
      .def_readwrite("sigma", &SimConfig::sigma)
      .def_readwrite("trials", &SimConfig::trials)
      .def_readwrite("seed", &SimConfig::seed)
      .def_readwrite("n_trunc", &SimConfig::n_trunc);

  py::class_<MseEstimate>(m, "MseEstimate")
      .def_readonly("mean", &MseEstimate::mean)
      .def_readonly("std_error", &MseEstimate::std_error)
      .def_readonly("trials", &MseEstimate::trials)
      .def_readonly("analytic", &MseEstimate::analytic);

  m.def("worst_case_vector", &worst_case_vector, py::arg("model"), py::arg("sigma"));
  m.def("densify", &densify, py::arg("sparse"), py::arg("n"));
  m.def("analytic_mse", &analytic_mse, py::arg("weights"), py::arg("sigma"), py::arg("x"));
  m.def("empirical_mse", &empirical_mse, py::arg("model"), py::arg("sigma"), py::arg("x"),
        py::arg("config"));

  m.def("run_verify_suite", [](const std::string& suite) {
    py::list out;
    for (const auto& r : run_suite(suite)) {
      py::dict d;
      d["id"] = r.id;
      d["name"] = r.name;
      d["pass"] = r.pass;
      d["detail"] = r.detail;
      d["seconds"] = r.seconds;
      out.append(d);
    }
    return out;
  });
}
