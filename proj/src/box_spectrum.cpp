#include "ellipsoid/box_spectrum.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>

#include "ellipsoid/errors.hpp"
#include "ellipsoid/util.hpp"

namespace ellipsoid {

namespace {

constexpr double kPi = std::numbers::pi;

// Largest n >= 0 with (pi n / L)^2 <= budget_s; 0 if none.
std::int64_t max_index(double length, double budget_s) {
  if (budget_s <= 0) return 0;
  double raw = length * std::sqrt(budget_s) / kPi;
  auto n = static_cast<std::int64_t>(std::floor(raw));
  // Guard the floor against rounding at exact lattice hits.
  auto sq = [&](std::int64_t m) {
    double t = kPi * static_cast<double>(m) / length;
    return t * t;
  };
  while (n > 0 && sq(n) > budget_s) --n;
  while (sq(n + 1) <= budget_s) ++n;
  return n;
}

// Recursive count of lattice points over coordinates [from, d) with remaining
// squared budget. Coordinates are processed in a fixed order => deterministic.
std::int64_t count_tail(const std::vector<double>& lengths, std::size_t from,
                        double budget_s, std::int64_t cap) {
  if (from + 1 == lengths.size()) {
    std::int64_t c = max_index(lengths[from], budget_s);
    if (c > cap) throw Error(errc::budget_exceeded, "eigenvalue budget exceeded");
    return c;
  }
  std::int64_t total = 0;
  const double L = lengths[from];
  std::int64_t n_max = max_index(L, budget_s);
  for (std::int64_t n = 1; n <= n_max; ++n) {
    double t = kPi * static_cast<double>(n) / L;
    total += count_tail(lengths, from + 1, budget_s - t * t, cap - total);
    if (total > cap) throw Error(errc::budget_exceeded, "eigenvalue budget exceeded");
  }
  return total;
}

void enumerate_tail(const std::vector<double>& lengths, std::size_t from,
                    double partial, double budget_s, std::int64_t cap,
                    std::vector<double>& out) {
  const double L = lengths[from];
  std::int64_t n_max = max_index(L, budget_s);
  for (std::int64_t n = 1; n <= n_max; ++n) {
    double t = kPi * static_cast<double>(n) / L;
    double term = t * t;
    if (from + 1 == lengths.size()) {
      out.push_back(partial + term);
      if (static_cast<std::int64_t>(out.size()) > cap)
        throw Error(errc::budget_exceeded, "eigenvalue budget exceeded");
    } else {
      enumerate_tail(lengths, from + 1, partial + term, budget_s - term, cap, out);
    }
  }
}

}  // namespace

BoxDomain::BoxDomain(std::vector<double> lengths_) : lengths(std::move(lengths_)) {
  if (lengths.empty()) throw Error(errc::domain_error, "box needs at least one length");
  for (double L : lengths) {
    if (!(L > 0) || !std::isfinite(L))
      throw Error(errc::domain_error, "box lengths must be positive finite");
  }
}

double BoxDomain::volume() const {
  double v = 1.0;
  for (double L : lengths) v *= L;
  return v;
}

double BoxDomain::boundary_measure() const {
  double v = volume();
  double b = 0.0;
  for (double L : lengths) b += v / L;
  return 2.0 * b;
}

double BoxDomain::first_eigenvalue() const {
  double s = 0.0;
  for (double L : lengths) {
    double t = kPi / L;
    s += t * t;
  }
  return s;
}

std::int64_t dirichlet_eigenvalue_count(const BoxDomain& box, double s,
                                        std::int64_t budget) {
  if (s < box.first_eigenvalue()) return 0;
  return count_tail(box.lengths, 0, s, budget);
}

std::vector<double> dirichlet_eigenvalues(const BoxDomain& box, double s_max,
                                          std::int64_t budget) {
  if (s_max < box.first_eigenvalue()) return {};
  // Size check first so a hopeless request fails fast.
  std::int64_t n = dirichlet_eigenvalue_count(box, s_max, budget);
  (void)n;

  std::vector<double> out;
  if (box.dim() == 1) {
    enumerate_tail(box.lengths, 0, 0.0, s_max, budget, out);
  } else {
    // Stripe over the first coordinate; each stripe enumerates a (d-1)-box.
    const double L0 = box.lengths[0];
    std::int64_t n0_max = max_index(L0, s_max);
    std::vector<std::vector<double>> stripes(static_cast<std::size_t>(n0_max));
    std::vector<double> tail_lengths(box.lengths.begin() + 1, box.lengths.end());
    parallel_for(n0_max, [&](std::int64_t i) {
      double t = kPi * static_cast<double>(i + 1) / L0;
      double term = t * t;
      if (term > s_max) return;
      enumerate_tail(tail_lengths, 0, term, s_max - term, budget, stripes[i]);
    });
    std::size_t total = 0;
    for (const auto& s : stripes) total += s.size();
    out.reserve(total);
    for (const auto& s : stripes) out.insert(out.end(), s.begin(), s.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

double dirichlet_nth_eigenvalue(const BoxDomain& box, std::int64_t n,
                                std::int64_t budget) {
  if (n < 1) throw Error(errc::domain_error, "eigenvalue index must be >= 1");
  double lo = 0.0;
  double hi = box.first_eigenvalue();
  while (dirichlet_eigenvalue_count(box, hi, budget) < n) {
    lo = hi;
    hi *= 2.0;
    if (!std::isfinite(hi)) throw Error(errc::budget_exceeded, "eigenvalue search overflow");
  }
  // Smallest s with count(s) >= n is exactly lambda_n.
  for (int it = 0; it < 200 && hi - lo > hi * 1e-15; ++it) {
    double mid = 0.5 * (lo + hi);
    if (dirichlet_eigenvalue_count(box, mid, budget) >= n) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace ellipsoid
