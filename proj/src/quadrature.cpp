#include "gjms/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <vector>

#include "gjms/errors.hpp"

namespace gjms {

namespace {

constexpr double kPi = std::numbers::pi;

// π/(x²+π²) · tanh(x/2) e^{(k - d/2)x} (1 - e^{-2kx}) / (1 + e^{-x})^d,
// which is integrand_main / 2^{d-1}.
double scaled_main(double x, int d, int k) {
  const double em = std::exp(-x);
  const double growth = std::exp((k - 0.5 * d) * x);
  return kPi / (x * x + kPi * kPi) * std::tanh(0.5 * x) * growth * -std::expm1(-2.0 * k * x) /
         std::pow(1.0 + em, d);
}

// integrand_chebyshev / 2^{d-1}: tanh²(x/2) V_{2k-1} w^{d-2k} 2^{1-2k}, where
// V_n = U_n(c)/c^n, c = cosh(x/2) and w = e^{-x/2}/(1+e^{-x}) = 1/(2c).
double scaled_chebyshev(double x, int d, int k) {
  const double em = std::exp(-x);
  const double w = std::exp(-0.5 * x) / (1.0 + em);
  const double u2 = 4.0 * w * w;  // 1/c²
  double v_prev = 1.0;             // V_0
  double v = 2.0;                  // V_1
  for (int n = 1; n < 2 * k - 1; ++n) {
    const double next = 2.0 * v - u2 * v_prev;
    v_prev = v;
    v = next;
  }
  const double t = std::tanh(0.5 * x);
  return kPi / (x * x + kPi * kPi) * t * t * v * std::pow(w, d - 2 * k) * std::ldexp(1.0, 1 - 2 * k);
}

// integrand_factor / 2^{d-2}: tanh(x/2) e^{(α-(d-1)/2)x} (1 - e^{-2αx}) / (1+e^{-x})^{d-1}.
double scaled_factor(double x, int d, int j) {
  const double alpha = j + 0.5;
  const double em = std::exp(-x);
  const double growth = std::exp((alpha - 0.5 * (d - 1)) * x);
  return kPi / (x * x + kPi * kPi) * std::tanh(0.5 * x) * growth * -std::expm1(-2.0 * alpha * x) /
         std::pow(1.0 + em, d - 1);
}

// QUADPACK qk15 nodes and weights.
constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment kronrod15(const RealFunction& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[i];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += kKronrodWeights[i] * pair;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair;
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

IntegralEstimate adaptive_kronrod(const RealFunction& f, double a, double b, double abs_tol,
                                  std::size_t max_evals) {
  std::priority_queue<Segment> heap;
  IntegralEstimate est;
  // seed with unit-ish panels; the integrands vary on a scale of a few units
  const int panels = std::max(1, static_cast<int>(std::ceil((b - a) / 4.0)));
  double total = 0.0;
  double error = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + (b - a) * p / panels;
    const double hi = p + 1 == panels ? b : a + (b - a) * (p + 1) / panels;
    Segment s = kronrod15(f, lo, hi);
    est.evaluations += 15;
    total += s.value;
    error += s.error;
    heap.push(s);
  }
  while (error > abs_tol && est.evaluations + 30 <= max_evals) {
    const Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Segment left = kronrod15(f, worst.a, mid);
    const Segment right = kronrod15(f, mid, worst.b);
    est.evaluations += 30;
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    if (mid <= worst.a || mid >= worst.b) break;
  }
  // recompute from the panels to shed accumulated cancellation in the running sums
  total = 0.0;
  error = 0.0;
  while (!heap.empty()) {
    total += heap.top().value;
    error += heap.top().error;
    heap.pop();
  }
  est.value = total;
  est.error = error;
  est.converged = error <= abs_tol;
  return est;
}

IntegralEstimate tanh_sinh(const RealFunction& f, double a, double b, double abs_tol, std::size_t max_evals) {
  // x = c + h·tanh(π/2 sinh t); weights decay doubly exponentially, so |t| <= 4
  // leaves an endpoint contribution far below double precision.
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  constexpr double kTMax = 4.0;
  constexpr double kHalfPi = 0.5 * kPi;

  auto node_sum = [&](double t) {
    const double u = kHalfPi * std::sinh(t);
    const double cu = std::cosh(u);
    const double weight = kHalfPi * std::cosh(t) / (cu * cu);
    // distance from either endpoint: half·(1 - tanh|u|) = half·2/(1+e^{2|u|})
    const double gap = half * 2.0 / (1.0 + std::exp(2.0 * u));
    double s = 0.0;
    if (gap > 0.0 && weight > 0.0) s += f(b - gap) + f(a + gap);
    return weight * s;
  };

  IntegralEstimate est;
  double h = 1.0;
  double sum = kHalfPi * f(center);  // t = 0
  est.evaluations = 1;
  for (double t = h; t <= kTMax; t += h) {
    sum += node_sum(t);
    est.evaluations += 2;
  }
  double previous = sum * h * half;
  for (int level = 1; level < 20; ++level) {
    h *= 0.5;
    for (double t = h; t <= kTMax; t += 2.0 * h) {
      sum += node_sum(t);
      est.evaluations += 2;
    }
    const double current = sum * h * half;
    const double diff = std::abs(current - previous);
    previous = current;
    // the level-to-level difference overestimates the finer level's error
    if (level >= 3 && diff <= abs_tol) {
      est.value = current;
      est.error = diff;
      est.converged = true;
      return est;
    }
    if (est.evaluations >= max_evals) {
      est.value = current;
      est.error = diff;
      return est;
    }
  }
  est.value = previous;
  est.error = std::abs(previous);
  return est;
}

int sign_of_power(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

}  // namespace

void QuadratureConfig::validate() const {
  if (!(abs_tol >= 1e-14)) throw InvalidInput("abs_tol must be >= 1e-14");
  if (max_evals == 0) throw InvalidInput("max_evals must be positive");
  if (truncation_x && !(*truncation_x > 0.0)) throw InvalidInput("truncation_x must be positive");
}

void SphereOperatorSpec::validate() const {
  require_odd_sphere_operator(d, k);
  if (j && (*j < 0 || *j > k - 1)) throw InvalidInput("factor index j must lie in [0, k-1]");
}

double integrand_main(double x, int d, int k) { return std::ldexp(scaled_main(x, d, k), d - 1); }

double integrand_chebyshev(double x, int d, int k) { return std::ldexp(scaled_chebyshev(x, d, k), d - 1); }

double integrand_factor(double x, int d, int j) { return std::ldexp(scaled_factor(x, d, j), d - 2); }

double tail_bound(double x, double decay_rate) {
  return kPi * std::exp(-decay_rate * x) / ((x * x + kPi * kPi) * decay_rate);
}

double auto_truncation(double decay_rate, double abs_tol) {
  const double target = abs_tol / 10.0;
  double hi = 1.0;
  while (tail_bound(hi, decay_rate) >= target) hi *= 2.0;
  double lo = 0.0;
  while (hi - lo > 1.0 / 64.0) {
    const double mid = 0.5 * (lo + hi);
    (tail_bound(mid, decay_rate) < target ? hi : lo) = mid;
  }
  return hi;
}

IntegralEstimate integrate_interval(const RealFunction& f, double a, double b, double abs_tol,
                                    QuadratureScheme scheme, std::size_t max_evals) {
  if (scheme == QuadratureScheme::TanhSinh) return tanh_sinh(f, a, b, abs_tol, max_evals);
  return adaptive_kronrod(f, a, b, abs_tol, max_evals);
}

QuadratureResult integrate_half_line(const RealFunction& f, double decay_rate, const QuadratureConfig& cfg) {
  cfg.validate();
  QuadratureResult r;
  IntegralEstimate est;
  if (decay_rate > 0.0) {
    r.truncation_x = cfg.truncation_x.value_or(auto_truncation(decay_rate, cfg.abs_tol));
    r.tail_bound = tail_bound(r.truncation_x, decay_rate);
    // tanh-sinh clusters nodes at the ends, so split the long range into panels
    if (cfg.scheme == QuadratureScheme::TanhSinh) {
      const int panels = std::max(1, static_cast<int>(std::ceil(r.truncation_x / 8.0)));
      for (int p = 0; p < panels; ++p) {
        const double lo = r.truncation_x * p / panels;
        const double hi = r.truncation_x * (p + 1) / panels;
        const auto part = tanh_sinh(f, lo, hi, 0.9 * cfg.abs_tol / panels, cfg.max_evals);
        est.value += part.value;
        est.error += part.error;
        est.evaluations += part.evaluations;
      }
      est.converged = est.error <= 0.9 * cfg.abs_tol;
    } else {
      est = adaptive_kronrod(f, 0.0, r.truncation_x, 0.9 * cfg.abs_tol, cfg.max_evals);
    }
  } else {
    const auto mapped = [&f](double theta) {
      const double c = std::cos(theta);
      if (c <= 0.0) return 0.0;
      return f(std::tan(theta)) / (c * c);
    };
    r.truncation_x = std::numeric_limits<double>::infinity();
    est = integrate_interval(mapped, 0.0, 0.5 * kPi, cfg.abs_tol, cfg.scheme, cfg.max_evals);
  }
  r.value = est.value;
  r.error_estimate = est.error + r.tail_bound;
  r.evaluations = est.evaluations;
  r.converged = est.converged && r.error_estimate <= cfg.abs_tol;
  return r;
}

QuadratureResult logdet_quadrature(int d, int k, const QuadratureConfig& cfg, IntegrandForm form) {
  require_odd_sphere_operator(d, k);
  const double rate = 0.5 * d - k;
  const int sign = sign_of_power((d - 1) / 2 + k);
  RealFunction f;
  if (form == IntegrandForm::Chebyshev) {
    f = [=](double x) { return sign * scaled_chebyshev(x, d, k); };
  } else {
    f = [=](double x) { return sign * scaled_main(x, d, k); };
  }
  return integrate_half_line(f, rate, cfg);
}

QuadratureResult logdet_factor_quadrature(int d, int j, const QuadratureConfig& cfg) {
  if (d % 2 == 0) throw InvalidInput("d must be odd");
  if (d < 3) throw InvalidInput("d must be at least 3");
  if (j < 0) throw InvalidInput("factor index j must be >= 0");
  if (2 * (j + 1) > d) throw DivergentDeterminant("factor determinant diverges for 2(j+1) > d");
  const double rate = 0.5 * d - j - 1.0;
  const int sign = sign_of_power((d + 1) / 2 + j);
  return integrate_half_line([=](double x) { return sign * scaled_factor(x, d, j); }, rate, cfg);
}

}  // namespace gjms
