#pragma once

// Direct numerical evaluation of the determinant integrals
//
//   log det P_{2k}(d) = (-1)^{(d-1)/2+k} / 2^{d-1} ∫_0^∞ π/(x²+π²) sinh(x/2) sinh(kx) / cosh^{d+1}(x/2) dx
//
//   log det(B² - α_j²) = (-1)^{(d+1)/2+j} / 2^{d-2} ∫_0^∞ π/(x²+π²) sinh(x/2) sinh(α_j x) / cosh^d(x/2) dx
//
// with α_j = j + 1/2, in double precision. Integrands are evaluated in
// exponentially scaled form so nothing overflows for large x.

#include <cstddef>
#include <functional>
#include <optional>

namespace gjms {

enum class QuadratureScheme { GaussKronrod, TanhSinh };

struct QuadratureConfig {
  double abs_tol = 1e-12;
  QuadratureScheme scheme = QuadratureScheme::GaussKronrod;
  std::size_t max_evals = 2'000'000;
  /// Upper cut of the semi-infinite range; chosen from the tail bound when unset.
  std::optional<double> truncation_x;

  /// Throws InvalidInput when abs_tol < 1e-14 or max_evals == 0.
  void validate() const;
};

/// Sphere dimension d, operator P_{2k}, and optionally one factor B² - α_j².
struct SphereOperatorSpec {
  int d = 3;
  int k = 1;
  std::optional<int> j;

  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  /// Quadrature error estimate plus the analytic tail bound.
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
  double truncation_x = 0.0;
  double tail_bound = 0.0;
  bool converged = false;
};

/// π/(x²+π²) · sinh(x/2) sinh(kx) / cosh^{d+1}(x/2), without the prefactor.
double integrand_main(double x, int d, int k);

/// Same value through sinh²(x/2) U_{2k-1}(cosh(x/2)) / cosh^{d+1}(x/2).
double integrand_chebyshev(double x, int d, int k);

/// π/(x²+π²) · sinh(x/2) sinh(α_j x) / cosh^d(x/2), α_j = j + 1/2.
double integrand_factor(double x, int d, int j);

enum class IntegrandForm { Hyperbolic, Chebyshev };

/// log det P_{2k}(d) by quadrature. Throws InvalidInput (even d, k < 1) or
/// DivergentDeterminant (2k > d).
QuadratureResult logdet_quadrature(int d, int k, const QuadratureConfig& cfg = {},
                                   IntegrandForm form = IntegrandForm::Hyperbolic);

/// log det(B² - α_j²) on the d-sphere. Requires 2(j+1) < d for convergence.
QuadratureResult logdet_factor_quadrature(int d, int j, const QuadratureConfig& cfg = {});

// Integration primitives, exposed for testing.

struct IntegralEstimate {
  double value = 0.0;
  double error = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

using RealFunction = std::function<double(double)>;

IntegralEstimate integrate_interval(const RealFunction& f, double a, double b, double abs_tol,
                                    QuadratureScheme scheme, std::size_t max_evals);

/// ∫_0^∞ f. When `decay_rate` > 0, f must satisfy |f(x)| <= π/(x²+π²) e^{-rate·x},
/// and the range is cut where that bound's tail drops below abs_tol/10.
/// Otherwise x = tan θ maps the half line onto [0, π/2), which needs f = O(1/x²).
QuadratureResult integrate_half_line(const RealFunction& f, double decay_rate, const QuadratureConfig& cfg);

/// ∫_X^∞ π/(x²+π²) e^{-rate·x} dx bound: π e^{-rate·X} / ((X²+π²) rate).
double tail_bound(double x, double decay_rate);

/// Smallest X (to within 1/64) with tail_bound(X, rate) < abs_tol / 10.
double auto_truncation(double decay_rate, double abs_tol);

}  // namespace gjms
