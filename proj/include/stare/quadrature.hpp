#pragma once

#include <functional>
#include <vector>

#include "stare/types.hpp"

namespace stare {

// Adaptive Gauss-Kronrod (15-point base rule). Throws NumericError when the
// requested tolerances cannot be met.
double integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                          double rel_tol = 1e-9, double abs_tol = 1e-12);

// Spectral running integral F(x) = ∫_lo^x f(t) dt of a smooth integrand,
// precomputed once on a Chebyshev grid and evaluated by Clenshaw recurrence.
class ChebyshevAntiderivative {
 public:
  ChebyshevAntiderivative(const std::function<double(double)>& f, double lo, double hi,
                          int nodes = 2048);

  double operator()(double x) const;
  double upper() const { return hi_; }

 private:
  double lo_, hi_;
  std::vector<double> coeff_;  // Chebyshev coefficients of the antiderivative
  double value_at_lo_ = 0;
};

}  // namespace stare
