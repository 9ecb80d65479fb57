#pragma once

#include <cmath>

#include "symsq/precision.hpp"

namespace symsq::oscint {

// Parameter pack for the stationary-phase-free integral bound
// |I| <= (b-a) X (1/(RV) + 1/(RP) + Y/(R^2 P^2))^A.
struct BkyParams {
  double P, R, V, X, Y;
  double a, b;
  int A;

  void validate() const {
    if (!(P > 0 && R > 0 && V > 0 && X > 0 && Y > 0))
      throw DomainError("BkyParams: P,R,V,X,Y must be positive");
    if (!(a < b)) throw DomainError("BkyParams: need a < b");
    if (A < 1) throw DomainError("BkyParams: A must be a positive integer");
  }
};

inline double bky_estimate(const BkyParams& p) {
  p.validate();
  double base = 1.0 / (p.R * p.V) + 1.0 / (p.R * p.P) + p.Y / (p.R * p.R * p.P * p.P);
  return (p.b - p.a) * p.X * std::pow(base, p.A);
}

}  // namespace symsq::oscint
