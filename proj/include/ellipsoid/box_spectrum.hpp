#pragma once

#include <cstdint>
#include <vector>

namespace ellipsoid {

// Axis-aligned box (0,L_1) x ... x (0,L_d). The Dirichlet Laplacian on a box
// has the explicit spectrum lambda = sum_i (pi n_i / L_i)^2 over integer
// lattice points n_i >= 1, which is what all spectral routines here exploit.
struct BoxDomain {
  std::vector<double> lengths;

  explicit BoxDomain(std::vector<double> lengths_);

  int dim() const { return static_cast<int>(lengths.size()); }
  double volume() const;
  // H^{d-1}(boundary) = 2 * sum_i volume / L_i; for d = 1 this is 2 (two endpoints).
  double boundary_measure() const;
  // lambda_1 = sum_i (pi / L_i)^2.
  double first_eigenvalue() const;
};

inline constexpr std::int64_t kDefaultSpectrumBudget = 10'000'000;

// Number of Dirichlet eigenvalues <= s (with multiplicity), i.e. lattice
// points n in (N*)^d with sum (pi n_i/L_i)^2 <= s. Pure counting, no
// materialization; throws BudgetExceeded past the cap.
std::int64_t dirichlet_eigenvalue_count(const BoxDomain& box, double s,
                                        std::int64_t budget = kDefaultSpectrumBudget);

// All eigenvalues <= s_max with multiplicity, ascending. Enumeration is
// striped over the first lattice coordinate and merged, so the output is
// deterministic regardless of worker count.
std::vector<double> dirichlet_eigenvalues(const BoxDomain& box, double s_max,
                                          std::int64_t budget = kDefaultSpectrumBudget);

// n-th smallest eigenvalue (n >= 1), found by bisecting the counting function.
double dirichlet_nth_eigenvalue(const BoxDomain& box, std::int64_t n,
                                std::int64_t budget = kDefaultSpectrumBudget);

}  // namespace ellipsoid
