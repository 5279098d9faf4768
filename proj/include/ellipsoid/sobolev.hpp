#pragma once

#include "ellipsoid/box_spectrum.hpp"
#include "ellipsoid/semiaxes.hpp"

namespace ellipsoid {

enum class WeylOrder { one_term, two_term };

// Constants of the Sobolev risk expansion K1 (kappa sigma^2)^{2k/(d+2k)} +
// K2 (kappa sigma^2)^{(2k+1)/(d+2k)}. For d = 1 the boundary term carries the
// factor d-1 = 0, so chi_dm1 and K2 are zero; p_k is set for d = 1 only.
struct SpectralConstants {
  double kappa = 0.0;   // k d^2 chi_d / ((d+k)(d+2k))
  double k1 = 0.0;      // (d+2k)/d
  double k2 = 0.0;      // boundary coefficient, <= 0
  double chi_d = 0.0;
  double chi_dm1 = 0.0;
  double p_k = 0.0;     // classical 1-d Pinsker constant
};

struct SobolevPrediction {
  double value = 0.0;
  // The printed second-order term is established for d >= 3 only; lower
  // dimensions still evaluate the same formula but are flagged unproven.
  bool second_order_proven = true;
};

struct SobolevRiskPrediction {
  double value = 0.0;
  SpectralConstants constants;
};

// Volume of the unit ball in R^r: pi^{r/2} / Gamma(r/2 + 1).
double unit_ball_volume(int r);

// chi_r(S) = omega_r H^r(S) / (r (2 pi)^r) for r >= 1.
double chi_r(double hausdorff_measure, int r);

// Ellipsoid axes mu = (1 + lambda^k)^{-1/2} of the order-k Sobolev ellipsoid
// on the box, down to eps_min in (0, 1); returned as an Explicit model.
SemiAxisModel sobolev_semi_axes(const BoxDomain& box, int k, double eps_min,
                                std::int64_t budget = kDefaultSpectrumBudget);

// Weyl eigenvalue-count prediction d chi_d(Omega) s^{d/2}, minus
// ((d-1)/4) chi_{d-1}(boundary) s^{(d-1)/2} at two-term order.
double weyl_counting(const BoxDomain& box, double s, WeylOrder order);

// Riesz mean sum_n (1 - h^2 lambda_n)_+ over the enumerated spectrum.
double riesz_mean(const BoxDomain& box, double h,
                  std::int64_t budget = kDefaultSpectrumBudget);

// Its closed-form asymptotics (2 d chi_d/(d+2)) h^{-d} - ... at two-term order.
double riesz_mean_prediction(const BoxDomain& box, double h, WeylOrder order);

// Independent route for the Riesz mean: h^2 int_0^{h^-2} M_lambda(s) ds with
// the eigenvalue-counting function evaluated by lattice counts per panel.
double riesz_mean_integral_form(const BoxDomain& box, double h,
                                std::int64_t budget = kDefaultSpectrumBudget);

// Metric-entropy prediction k chi_d eps^{-d/k} [- (k/4) chi_{d-1} eps^{-(d-1)/k}].
SobolevPrediction sobolev_entropy_prediction(const BoxDomain& box, int k, double eps,
                                             WeylOrder order);

// Linear-risk prediction with its spectral constants.
SobolevRiskPrediction sobolev_risk_prediction(const BoxDomain& box, int k, double sigma,
                                              WeylOrder order);

// P_k = (2k+1)^{1/(2k+1)} (k/(pi(k+1)))^{2k/(2k+1)}.
double pinsker_constant(int k);

}  // namespace ellipsoid
