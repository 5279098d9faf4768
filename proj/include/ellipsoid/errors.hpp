#pragma once

#include <stdexcept>
#include <string>

namespace ellipsoid {

// Machine-readable failure categories. Codes ending up in CLI error JSON and
// exit statuses: validation problems map to exit 1, numerical failures to 2.
enum class errc {
  overflow_budget,            // counting/truncation would exceed the axis cap
  invalid_tau,                // type-tau integral with tau < 1
  quadrature_non_convergence, // panel/evaluation budget exhausted before tol
  domain_error,               // argument outside the mathematical domain
  bracket_failure,            // root bracket could not be established/refined
  budget_exceeded,            // spectral enumeration cap exceeded
  dimension_mismatch,
  unsupported_family,
  invalid_exponents,
  unknown_index,              // elasticity index required but absent
  model_parse,
  config,
};

const char* errc_name(errc code) noexcept;

// Whether the failure is a numerical one (exit 2) as opposed to bad input (exit 1).
bool errc_is_numerical(errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const noexcept { return code_; }
  const char* code_name() const noexcept { return errc_name(code_); }

 private:
  errc code_;
};

}  // namespace ellipsoid
