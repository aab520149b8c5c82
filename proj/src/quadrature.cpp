#include "stare/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace stare {

double integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                          double rel_tol, double abs_tol) {
  if (!(rel_tol > 0) || !(abs_tol > 0)) throw ParameterError("quadrature tolerances must be positive");
  using rule = boost::math::quadrature::gauss_kronrod<double, 15>;
  double error = 0, l1 = 0;
  double value = rule::integrate(f, lo, hi, 15, rel_tol, &error, &l1);
  double target = std::max(abs_tol, rel_tol * std::abs(value));
  if (error > target) {
    // the rule terminates relative to the L1 norm; cancellation-heavy
    // integrands need the requested absolute accuracy rescaled by it
    const double tighter = std::clamp(0.1 * target / std::max(l1, 1e-300), 1e-15, rel_tol);
    value = rule::integrate(f, lo, hi, 15, tighter, &error, &l1);
    target = std::max(abs_tol, rel_tol * std::abs(value));
  }
  // the error estimate accumulates a roundoff floor proportional to the
  // L1 norm once the subdivision is deep; below that it is not meaningful
  if (error > target * 10.0 && error > 1e-9 * l1)
    throw NumericError("adaptive quadrature failed to converge");
  return value;
}

ChebyshevAntiderivative::ChebyshevAntiderivative(const std::function<double(double)>& f, double lo,
                                                 double hi, int nodes)
    : lo_(lo), hi_(hi) {
  if (!(hi > lo)) throw ParameterError("Chebyshev interval must be non-empty");
  if (nodes < 8) throw ParameterError("Chebyshev grid too small");
  const int n = nodes;

  // Sample on the Lobatto grid u_k = cos(pi k / n), x = midpoint + half * u.
  const double half = (hi - lo) / 2.0;
  const double mid = (hi + lo) / 2.0;
  std::vector<double> samples(n + 1);
  for (int k = 0; k <= n; ++k) {
    const double u = std::cos(std::numbers::pi * k / n);
    samples[k] = f(mid + half * u);
  }

  // Cosine table: cos(pi m / n) for m in [0, 2n), indexed by (j*k) mod 2n.
  std::vector<double> cos_table(2 * n);
  for (int m = 0; m < 2 * n; ++m) cos_table[m] = std::cos(std::numbers::pi * m / n);

  std::vector<double> c(n + 1, 0.0);
  for (int j = 0; j <= n; ++j) {
    double acc = 0.5 * (samples[0] + (j % 2 == 0 ? samples[n] : -samples[n]));
    for (int k = 1; k < n; ++k) {
      acc += samples[k] * cos_table[static_cast<std::size_t>(j) * k % (2 * n)];
    }
    c[j] = 2.0 * acc / n;
  }
  c[0] /= 2.0;
  c[n] /= 2.0;

  // Termwise antiderivative: if f = sum c_j T_j then (d/du)^{-1} has
  // C_j = (c_{j-1} - c_{j+1}) / (2j) for j >= 2 and C_1 = c_0 - c_2/2,
  // scaled by the interval half-width.
  coeff_.assign(n + 2, 0.0);
  for (int j = 1; j <= n + 1; ++j) {
    const double prev = (j == 1) ? 2.0 * c[0] : c[j - 1];
    const double next = (j + 1 <= n) ? c[j + 1] : 0.0;
    coeff_[j] = half * (prev - next) / (2.0 * j);
  }
  double at_lo = 0.0;
  for (int j = 1; j <= n + 1; ++j) at_lo += (j % 2 == 0 ? coeff_[j] : -coeff_[j]);
  value_at_lo_ = at_lo;
}

double ChebyshevAntiderivative::operator()(double x) const {
  const double u = std::clamp(2.0 * (x - lo_) / (hi_ - lo_) - 1.0, -1.0, 1.0);
  // Clenshaw recurrence.
  double b1 = 0.0, b2 = 0.0;
  for (std::size_t j = coeff_.size(); j-- > 1;) {
    const double b0 = 2.0 * u * b1 - b2 + coeff_[j];
    b2 = b1;
    b1 = b0;
  }
  const double value = u * b1 - b2 + coeff_[0];
  return value - value_at_lo_;
}

}  // namespace stare
