#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ellipsoid/risk.hpp"
#include "ellipsoid/semiaxes.hpp"

namespace ellipsoid {

struct SimConfig {
  double sigma = 1.0;
  std::int64_t trials = 10'000;
  std::uint64_t seed = 0;
  std::int64_t n_trunc = 0;  // 0: Pinsker-weight support + 8 guard coordinates
};

struct MseEstimate {
  double mean = 0.0;
  double std_error = 0.0;  // sample std / sqrt(trials)
  std::int64_t trials = 0;
  double analytic = 0.0;
};

// Sparse coordinates (1-based index, value) of a sequence-space vector.
using SparseVector = std::vector<std::pair<std::int64_t, double>>;

// The extremal point mu_* e_{n*}: it lies on the ellipsoid and saturates the
// worst-case bias of the Pinsker filter, making truncation exactly lossless.
SparseVector worst_case_vector(const SemiAxisModel& model, double sigma);

std::vector<double> densify(const SparseVector& sparse, std::int64_t n);

// Closed-form MSE sigma^2 sum c_n^2 + sum (1-c_n)^2 x_n^2 of the diagonal
// filter `weights` at truth `x` (same truncation).
double analytic_mse(const std::vector<double>& weights, double sigma,
                    const std::vector<double>& x);

// Simulates y = x + sigma xi, applies the Pinsker weights at this sigma, and
// averages the squared error over config.trials draws. Deterministic given the
// seed: trials map to fixed substreams and partial sums merge in a fixed
// order, so results are bit-identical for any worker count.
MseEstimate empirical_mse(const SemiAxisModel& model, double sigma,
                          const std::vector<double>& x, const SimConfig& config);

}  // namespace ellipsoid
