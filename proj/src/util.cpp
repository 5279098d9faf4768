#include "ellipsoid/util.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <thread>

#include "ellipsoid/errors.hpp"

namespace ellipsoid {

std::vector<double> make_grid(double start, double stop, int points, GridScale scale) {
  if (points < 2) throw Error(errc::config, "grid needs at least 2 points");
  if (!(start < stop)) throw Error(errc::config, "grid start must be < stop");
  if (scale == GridScale::log && !(start > 0))
    throw Error(errc::config, "log grid requires start > 0");

  std::vector<double> g(static_cast<std::size_t>(points));
  if (scale == GridScale::linear) {
    const double h = (stop - start) / (points - 1);
    for (int i = 0; i < points; ++i) g[i] = start + h * i;
  } else {
    const double la = std::log(start);
    const double lb = std::log(stop);
    const double h = (lb - la) / (points - 1);
    for (int i = 0; i < points; ++i) g[i] = std::exp(la + h * i);
  }
  g.front() = start;
  g.back() = stop;
  return g;
}

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

int worker_count() {
  if (const char* env = std::getenv("ELLIPSOID_LAB_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) return static_cast<int>(std::min<long>(v, 1024));
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn) {
  if (n <= 0) return;
  const int workers = std::min<std::int64_t>(worker_count(), n);
  if (workers == 1) {
    for (std::int64_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::int64_t> next{0};
  std::exception_ptr first_error;
  std::atomic<bool> failed{false};
  auto run = [&] {
    for (;;) {
      std::int64_t i = next.fetch_add(1);
      if (i >= n || failed.load()) return;
      try {
        fn(i);
      } catch (...) {
        bool expected = false;
        if (failed.compare_exchange_strong(expected, true)) {
          first_error = std::current_exception();
        }
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) pool.emplace_back(run);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::overflow_budget: return "OverflowBudget";
    case errc::invalid_tau: return "InvalidTau";
    case errc::quadrature_non_convergence: return "QuadratureNonConvergence";
    case errc::domain_error: return "DomainError";
    case errc::bracket_failure: return "BracketFailure";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::unsupported_family: return "UnsupportedFamily";
    case errc::invalid_exponents: return "InvalidExponents";
    case errc::unknown_index: return "UnknownIndex";
    case errc::model_parse: return "MODEL_PARSE";
    case errc::config: return "CONFIG";
  }
  return "Unknown";
}

bool errc_is_numerical(errc code) noexcept {
  switch (code) {
    case errc::overflow_budget:
    case errc::quadrature_non_convergence:
    case errc::bracket_failure:
    case errc::budget_exceeded:
      return true;
    default:
      return false;
  }
}

}  // namespace ellipsoid
