#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ellipsoid {

// Neumaier-compensated accumulator. Exact enough that million-term sums stay
// within a few ulps of the true value.
class KahanSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

enum class GridScale { linear, log };

// points >= 2, start < stop; log scale additionally requires start > 0.
std::vector<double> make_grid(double start, double stop, int points, GridScale scale);

// Shortest decimal representation that round-trips to the same double.
std::string format_double(double x);

// Worker cap: ELLIPSOID_LAB_THREADS if set (>=1), else hardware concurrency.
int worker_count();

// Runs fn(i) for i in [0, n). Block partition is fixed (independent of the
// worker count) so any reduction done per-index stays deterministic.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn);

}  // namespace ellipsoid
