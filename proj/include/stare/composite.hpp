#pragma once

#include <cmath>

#include "stare/schedule.hpp"
#include "stare/types.hpp"

namespace stare {

// Physical-units parameters of the qubit + damped auxiliary qubit model.
// Rates (g0, omega_a, kappa) and times (t_i, t_f) share one unit system;
// s_i/s_f are the sweep-function endpoints s(t_i), s(t_f).
struct CompositeParams {
  double g0 = 1.0;
  double omega_a = 1.0;
  double kappa = 1.0;
  double nbar = 0.0;
  double x0 = 0.0;
  double t_i = -1.0;
  double t_f = 1.0;
  ScheduleKind schedule = ScheduleKind::Linear;
  double s_i = 0.0;
  double s_f = 0.0;

  void validate() const {
    if (!(g0 > 0) || !(omega_a > 0) || !(kappa > 0))
      throw ParameterError("g0, omega_a, kappa must be positive");
    if (!(nbar >= 0)) throw ParameterError("nbar must be non-negative");
    if (!(t_f > t_i)) throw ParameterError("t_f must exceed t_i");
    if (!(s_f > s_i)) throw ParameterError("sweep endpoints require s_f > s_i");
    if (!(x0 >= 0)) throw ParameterError("x0 must be non-negative");
  }

  double total_time() const { return t_f - t_i; }
  double d_i() const { return s_i / g0; }
  double d_f() const { return s_f / g0; }
  double tau_of_t(double t) const { return (t - t_i) / total_time(); }
};

// Zero-frequency reservoir spectral density of the damped auxiliary qubit.
double gamma_re_zero(const CompositeParams& params);

// Derived dephasing rate gamma(t) = (1/2) Gamma_re(0) Delta(t)^2.
double gamma_rate(double t, const CompositeParams& params);

// Bose occupation 1/(exp(omega_a/theta) - 1); theta = 0 maps to 0.
double thermal_occupation(double omega_a, double theta);

// Correlation decay time of the damped auxiliary qubit.
double aux_correlation_time(const CompositeParams& params);

// Ratios for the reduction-validity conditions; a condition passes when its
// ratio is below `threshold` (conventional order-of-magnitude margin for the
// "much less than one" requirements). Raw ratios are always reported so a
// different cutoff can be applied downstream.
struct ValidityReport {
  double markov_ratio = 0;     // (x0 g0 tau_A)^2
  double adiabatic_ratio = 0;  // eigenbasis variation over tau_A at mid-sweep
  double regime1_ratio = 0;    // (b/a) / x0
  double regime2_ratio = 0;    // (b/a) |d_dot(1/2)| / (x0^2 a)
  double threshold = 0.1;
  bool markov_ok = false;
  bool adiabatic_ok = false;
  bool regime1_ok = false;
  bool regime2_ok = false;
};

// Ratios assembled from already-reduced quantities; b_over_a = gamma/g0 at the
// crossing, d_dot_mid = |d'(tau)| at tau = 1/2, tau_a in the same time units
// as 1/g0.
ValidityReport validity_from_ratios(double x0, double g0, double tau_a, double b_over_a,
                                    double a, double d_dot_mid, double s0, double sdot0,
                                    double threshold = 0.1);

// Full report for the given composite model over total time T; the dephasing
// rate entering b/a is the microscopically derived gamma at the crossing.
ValidityReport validity_report(const CompositeParams& params, double T);

// Dimensionless dephasing strength gamma(d=0) * T of the derived rate.
double composite_b_at_crossing(const CompositeParams& params);

// Schedule driving the composite sweep; the open-system-optimal kind uses
// b = composite_b_at_crossing(params).
Schedule composite_schedule(const CompositeParams& params);

}  // namespace stare
