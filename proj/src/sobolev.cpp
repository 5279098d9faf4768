#include "ellipsoid/sobolev.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ellipsoid/errors.hpp"
#include "ellipsoid/util.hpp"

namespace ellipsoid {

namespace {

constexpr double kPi = std::numbers::pi;

double chi_volume(const BoxDomain& box) { return chi_r(box.volume(), box.dim()); }

// chi of the boundary; zero-coefficient placeholder for d = 1.
double chi_boundary(const BoxDomain& box) {
  return box.dim() >= 2 ? chi_r(box.boundary_measure(), box.dim() - 1) : 0.0;
}

}  // namespace

double unit_ball_volume(int r) {
  if (r < 0) throw Error(errc::domain_error, "dimension must be non-negative");
  return std::pow(kPi, r / 2.0) / std::tgamma(r / 2.0 + 1.0);
}

double chi_r(double hausdorff_measure, int r) {
  if (r < 1) throw Error(errc::domain_error, "chi_r requires r >= 1");
  if (!(hausdorff_measure > 0))
    throw Error(errc::domain_error, "chi_r requires a positive measure");
  return unit_ball_volume(r) * hausdorff_measure / (r * std::pow(2.0 * kPi, r));
}

SemiAxisModel sobolev_semi_axes(const BoxDomain& box, int k, double eps_min,
                                std::int64_t budget) {
  if (k < 1) throw Error(errc::domain_error, "smoothness order k must be >= 1");
  if (!(eps_min > 0) || !(eps_min < 1))
    throw Error(errc::domain_error, "sobolev axes need eps_min in (0, 1)");
  // Invert mu = (1 + lambda^k)^{-1/2}: mu >= eps_min iff lambda <= s_cut.
  const double s_cut = std::pow(1.0 / (eps_min * eps_min) - 1.0, 1.0 / k);
  const std::vector<double> evs = dirichlet_eigenvalues(box, s_cut, budget);
  if (evs.empty())
    throw Error(errc::domain_error, "eps_min admits no Sobolev semi-axis; raise it");
  std::vector<double> axes(evs.size());
  for (std::size_t i = 0; i < evs.size(); ++i)
    axes[i] = 1.0 / std::sqrt(1.0 + std::pow(evs[i], k));
  return SemiAxisModel::explicit_axes(std::move(axes), std::max(budget, kDefaultAxisBudget));
}

double weyl_counting(const BoxDomain& box, double s, WeylOrder order) {
  if (!(s > 0)) throw Error(errc::domain_error, "weyl_counting requires s > 0");
  const int d = box.dim();
  double value = d * chi_volume(box) * std::pow(s, d / 2.0);
  if (order == WeylOrder::two_term && d >= 2) {
    value -= (d - 1) / 4.0 * chi_boundary(box) * std::pow(s, (d - 1) / 2.0);
  }
  return value;
}

double riesz_mean(const BoxDomain& box, double h, std::int64_t budget) {
  if (!(h > 0)) throw Error(errc::domain_error, "riesz_mean requires h > 0");
  const double h2 = h * h;
  const double s_max = 1.0 / h2;
  if (s_max < box.first_eigenvalue()) return 0.0;
  KahanSum sum;
  for (double lambda : dirichlet_eigenvalues(box, s_max, budget)) {
    const double term = 1.0 - h2 * lambda;
    if (term > 0) sum.add(term);
  }
  return sum.value();
}

double riesz_mean_prediction(const BoxDomain& box, double h, WeylOrder order) {
  if (!(h > 0)) throw Error(errc::domain_error, "riesz_mean_prediction requires h > 0");
  const int d = box.dim();
  double value = 2.0 * d * chi_volume(box) / (d + 2.0) * std::pow(h, -d);
  if (order == WeylOrder::two_term && d >= 2) {
    value -= (d - 1) * chi_boundary(box) / (2.0 * (d + 1.0)) * std::pow(h, -(d - 1.0));
  }
  return value;
}

double riesz_mean_integral_form(const BoxDomain& box, double h, std::int64_t budget) {
  if (!(h > 0)) throw Error(errc::domain_error, "riesz_mean_integral_form requires h > 0");
  const double s_max = 1.0 / (h * h);
  if (s_max < box.first_eigenvalue()) return 0.0;
  std::vector<double> evs = dirichlet_eigenvalues(box, s_max, budget);
  evs.erase(std::unique(evs.begin(), evs.end()), evs.end());
  // M_lambda is right-continuous and constant between consecutive distinct
  // eigenvalues; each panel integrates exactly with one lattice count. The
  // level is sampled at the panel midpoint: counting exactly at an eigenvalue
  // is ulp-sensitive (the recursion subtracts coordinate terms from s).
  KahanSum integral;
  for (std::size_t i = 0; i < evs.size(); ++i) {
    const double a = evs[i];
    const double b = i + 1 < evs.size() ? evs[i + 1] : s_max;
    if (!(b > a)) continue;
    const auto level =
        static_cast<double>(dirichlet_eigenvalue_count(box, 0.5 * (a + b), budget));
    integral.add(level * (b - a));
  }
  return integral.value() / s_max;
}

SobolevPrediction sobolev_entropy_prediction(const BoxDomain& box, int k, double eps,
                                             WeylOrder order) {
  if (k < 1) throw Error(errc::domain_error, "smoothness order k must be >= 1");
  if (!(eps > 0) || !(eps < 1))
    throw Error(errc::domain_error, "entropy prediction needs eps in (0, 1)");
  const int d = box.dim();
  SobolevPrediction out;
  out.value = k * chi_volume(box) * std::pow(eps, -static_cast<double>(d) / k);
  if (order == WeylOrder::two_term) {
    out.second_order_proven = d >= 3;
    if (d >= 2) {
      out.value -= k / 4.0 * chi_boundary(box) * std::pow(eps, -(d - 1.0) / k);
    }
  }
  return out;
}

SobolevRiskPrediction sobolev_risk_prediction(const BoxDomain& box, int k, double sigma,
                                              WeylOrder order) {
  if (k < 1) throw Error(errc::domain_error, "smoothness order k must be >= 1");
  if (!(sigma > 0)) throw Error(errc::domain_error, "risk prediction needs sigma > 0");
  const double d = box.dim();
  SpectralConstants cs;
  cs.chi_d = chi_volume(box);
  cs.chi_dm1 = chi_boundary(box);
  cs.kappa = k * d * d * cs.chi_d / ((d + k) * (d + 2.0 * k));
  cs.k1 = (d + 2.0 * k) / d;
  cs.k2 = box.dim() >= 2
              ? -k * (d - 1.0) * (d + k) * (d + 2.0 * k) * cs.chi_dm1 /
                    (2.0 * d * d * (d + k - 1.0) * (d + 2.0 * k - 1.0) * cs.chi_d)
              : 0.0;
  cs.p_k = box.dim() == 1 ? pinsker_constant(k) : 0.0;

  const double base = cs.kappa * sigma * sigma;
  SobolevRiskPrediction out;
  out.constants = cs;
  out.value = cs.k1 * std::pow(base, 2.0 * k / (d + 2.0 * k));
  if (order == WeylOrder::two_term) {
    out.value += cs.k2 * std::pow(base, (2.0 * k + 1.0) / (d + 2.0 * k));
  }
  return out;
}

double pinsker_constant(int k) {
  if (k < 1) throw Error(errc::domain_error, "pinsker_constant requires k >= 1");
  const double kk = k;
  return std::pow(2.0 * kk + 1.0, 1.0 / (2.0 * kk + 1.0)) *
         std::pow(kk / (kPi * (kk + 1.0)), 2.0 * kk / (2.0 * kk + 1.0));
}

}  // namespace ellipsoid
