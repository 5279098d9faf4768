#include "ellipsoid/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ellipsoid/errors.hpp"
#include "ellipsoid/rng.hpp"
#include "ellipsoid/util.hpp"

namespace ellipsoid {

SparseVector worst_case_vector(const SemiAxisModel& model, double sigma) {
  (void)sigma;  // the extremal point does not depend on the noise level
  return SparseVector{{1, model.max_semi_axis()}};
}

std::vector<double> densify(const SparseVector& sparse, std::int64_t n) {
  std::vector<double> out(static_cast<std::size_t>(n), 0.0);
  for (const auto& [idx, v] : sparse) {
    if (idx < 1 || idx > n)
      throw Error(errc::dimension_mismatch, "sparse index outside the truncation");
    out[idx - 1] = v;
  }
  return out;
}

double analytic_mse(const std::vector<double>& weights, double sigma,
                    const std::vector<double>& x) {
  if (weights.size() != x.size())
    throw Error(errc::dimension_mismatch, "weights and truth must share a truncation");
  KahanSum variance;
  KahanSum bias;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    variance.add(weights[i] * weights[i]);
    const double miss = 1.0 - weights[i];
    bias.add(miss * miss * x[i] * x[i]);
  }
  return sigma * sigma * variance.value() + bias.value();
}

MseEstimate empirical_mse(const SemiAxisModel& model, double sigma,
                          const std::vector<double>& x, const SimConfig& config) {
  if (!(sigma > 0)) throw Error(errc::domain_error, "simulation needs sigma > 0");
  if (config.trials < 1) throw Error(errc::config, "simulation needs at least one trial");

  const double eps = critical_radius(model, sigma);
  const std::int64_t support =
      model.counting_function(std::nextafter(eps, std::numeric_limits<double>::infinity()));
  const std::int64_t n_trunc = config.n_trunc > 0 ? config.n_trunc : support + 8;
  if (n_trunc < support)
    throw Error(errc::config, "n_trunc must cover the Pinsker weight support");
  if (static_cast<std::int64_t>(x.size()) != n_trunc)
    throw Error(errc::dimension_mismatch, "truth vector must have n_trunc coordinates");

  std::vector<double> weights(static_cast<std::size_t>(n_trunc));
  for (std::int64_t n = 1; n <= n_trunc; ++n) {
    const double mu = model.semi_axis(n);
    weights[n - 1] = mu > 0 ? std::max(0.0, 1.0 - eps / mu) : 0.0;
  }

  // Fixed block partition: per-block sums depend only on (seed, trial range),
  // and the merge order is fixed, so the result is worker-count invariant.
  const std::int64_t trials = config.trials;
  const std::int64_t blocks = std::min<std::int64_t>(trials, 256);
  std::vector<double> block_sum(static_cast<std::size_t>(blocks));
  std::vector<double> block_sum_sq(static_cast<std::size_t>(blocks));

  parallel_for(blocks, [&](std::int64_t b) {
    const std::int64_t begin = trials * b / blocks;
    const std::int64_t end = trials * (b + 1) / blocks;
    KahanSum s1;
    KahanSum s2;
    for (std::int64_t t = begin; t < end; ++t) {
      KahanSum loss;
      for (std::int64_t n = 0; n < n_trunc; ++n) {
        const double noise =
            rng::draw_normal(config.seed, static_cast<std::uint64_t>(t),
                             static_cast<std::uint64_t>(n));
        const double y = x[n] + sigma * noise;
        const double err = weights[n] * y - x[n];
        loss.add(err * err);
      }
      const double l = loss.value();
      s1.add(l);
      s2.add(l * l);
    }
    block_sum[b] = s1.value();
    block_sum_sq[b] = s2.value();
  });

  KahanSum total;
  KahanSum total_sq;
  for (std::int64_t b = 0; b < blocks; ++b) {
    total.add(block_sum[b]);
    total_sq.add(block_sum_sq[b]);
  }
  const auto n_trials = static_cast<double>(trials);
  const double mean = total.value() / n_trials;
  double variance = 0.0;
  if (trials > 1) {
    variance = std::max(0.0, (total_sq.value() - n_trials * mean * mean) / (n_trials - 1.0));
  }

  MseEstimate out;
  out.mean = mean;
  out.std_error = std::sqrt(variance / n_trials);
  out.trials = trials;
  out.analytic = analytic_mse(weights, sigma, x);
  return out;
}

}  // namespace ellipsoid
