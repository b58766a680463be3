#pragma once

#include <stdexcept>
#include <string>

namespace gjms {

/// Arguments outside the operator's domain (even d, k < 1, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The determinant integral does not converge (2k > d).
class DivergentDeterminant : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Throws InvalidInput / DivergentDeterminant unless d is odd, d >= 3, k >= 1 and 2k <= d.
void require_odd_sphere_operator(int d, int k);

}  // namespace gjms
