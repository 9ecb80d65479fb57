#pragma once

#include <cmath>
#include <stdexcept>

namespace symsq {

// Shared accuracy contract for every evaluator: how many decimal digits the
// scalar carries and the relative error the caller is asking for.
struct PrecisionContext {
  int working_digits = 16;
  double target_rel_error = 1e-13;

  PrecisionContext() = default;
  PrecisionContext(int digits, double tol) : working_digits(digits), target_rel_error(tol) {
    validate();
  }

  void validate() const {
    if (working_digits < 16) throw std::invalid_argument("PrecisionContext: working_digits < 16");
    if (!(target_rel_error > 0) ||
        target_rel_error < std::pow(10.0, 1 - static_cast<double>(working_digits)))
      throw std::invalid_argument("PrecisionContext: target_rel_error below 10^(1-digits)");
  }

  static PrecisionContext doubles(double tol = 1e-13) { return PrecisionContext(16, tol); }
  static PrecisionContext digits(int d) { return PrecisionContext(d, std::pow(10.0, 3 - d)); }
};

// Hard errors: mathematically undefined inputs.
struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};
// Regime errors: an expansion was requested strictly outside its validity range.
struct RegimeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Budget errors: quadrature/series did not settle within its evaluation budget.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Data coverage errors: a catalog or coefficient table is too short for the request.
struct CoverageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace symsq
