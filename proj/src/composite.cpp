#include "stare/composite.hpp"

#include <cmath>
#include <limits>

namespace stare {

double gamma_re_zero(const CompositeParams& params) {
  params.validate();
  const double w = params.kappa * (2.0 * params.nbar + 1.0);
  return params.x0 * params.x0 * w / (w * w / 4.0 + params.omega_a * params.omega_a);
}

double gamma_rate(double t, const CompositeParams& params) {
  const Schedule schedule = composite_schedule(params);
  const double d = d_of_tau(schedule.q(params.tau_of_t(t)), params.d_i(), params.d_f());
  const double gap = params.g0 * std::sqrt(1.0 + d * d);
  return 0.5 * gamma_re_zero(params) * gap * gap;
}

double thermal_occupation(double omega_a, double theta) {
  if (!(omega_a > 0)) throw ParameterError("thermal_occupation requires omega_a > 0");
  if (theta < 0) throw ParameterError("temperature must be non-negative");
  if (theta == 0) return 0.0;
  return 1.0 / std::expm1(omega_a / theta);
}

double aux_correlation_time(const CompositeParams& params) {
  return 1.0 / (params.kappa * (2.0 * params.nbar + 1.0));
}

ValidityReport validity_from_ratios(double x0, double g0, double tau_a, double b_over_a, double a,
                                    double d_dot_mid, double s0, double sdot0, double threshold) {
  ValidityReport r;
  r.threshold = threshold;
  const double m = x0 * g0 * tau_a;
  r.markov_ratio = m * m;
  const double d0 = s0 / g0;
  // |<+| dH/dt |->| ~ |s'(0)| / sqrt(1 + (s(0)/g0)^2), gap at mid-sweep.
  r.adiabatic_ratio =
      std::abs(sdot0) / std::sqrt(1.0 + d0 * d0) * tau_a / (g0 * std::sqrt(1.0 + d0 * d0));
  r.regime1_ratio = x0 > 0 ? b_over_a / x0 : std::numeric_limits<double>::infinity();
  r.regime2_ratio = x0 > 0 ? b_over_a * std::abs(d_dot_mid) / (x0 * x0 * a)
                           : std::numeric_limits<double>::infinity();
  r.markov_ok = r.markov_ratio < threshold;
  r.adiabatic_ok = r.adiabatic_ratio < threshold;
  r.regime1_ok = r.regime1_ratio < threshold;
  r.regime2_ok = r.regime2_ratio < threshold;
  return r;
}

ValidityReport validity_report(const CompositeParams& params, double T) {
  params.validate();
  if (!(T > 0)) throw ParameterError("validity_report requires T > 0");
  const double tau_a = aux_correlation_time(params);
  const double gamma0 = 0.5 * gamma_re_zero(params) * params.g0 * params.g0;
  const double b_over_a = gamma0 / params.g0;
  const double a = params.g0 * T;

  const Schedule schedule = composite_schedule(params);
  const double d_dot_mid = schedule.qdot(0.5) * (params.d_f() - params.d_i());
  const double q_mid = schedule.q(0.5);
  const double s0 = params.g0 * d_of_tau(q_mid, params.d_i(), params.d_f());
  const double sdot0 = params.g0 * d_dot_mid / T;  // physical-units sweep rate at mid-sweep

  return validity_from_ratios(params.x0, params.g0, tau_a, b_over_a, a, d_dot_mid, s0, sdot0);
}

double composite_b_at_crossing(const CompositeParams& params) {
  const double gamma0 = 0.5 * gamma_re_zero(params) * params.g0 * params.g0;
  return gamma0 * params.total_time();
}

Schedule composite_schedule(const CompositeParams& params) {
  switch (params.schedule) {
    case ScheduleKind::Linear:
      return Schedule::linear();
    case ScheduleKind::RolandCerf:
      return Schedule::roland_cerf(params.d_i(), params.d_f());
    case ScheduleKind::OptimalStare: {
      SweepSpec spec{params.g0 * params.total_time(), composite_b_at_crossing(params),
                     params.d_i(), params.d_f(), ScheduleKind::OptimalStare};
      return Schedule::optimal_stare(spec);
    }
    case ScheduleKind::Tabulated:
      throw ParameterError("tabulated schedules are not wired into the composite model");
  }
  throw ParameterError("unknown schedule kind");
}

}  // namespace stare
