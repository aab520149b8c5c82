#include "stare/schedule.hpp"

#include <algorithm>
#include <cmath>

#include "stare/analytics.hpp"

namespace stare {

double xi_constant(const SweepSpec& spec) {
  spec.validate();
  if (!(spec.b > 0)) throw ParameterError("xi_constant requires b > 0");
  const double theta_i = std::atan(x_of_d(spec.d_i, spec.a, spec.b));
  const double theta_f = std::atan(x_of_d(spec.d_f, spec.a, spec.b));
  const double dtheta = theta_f - theta_i;
  return dtheta * dtheta / (4.0 * spec.b);
}

double q_linear(double tau) { return tau; }

double q_roland_cerf(double tau, double d_i, double d_f) {
  if (!(d_f > d_i)) throw ParameterError("q_roland_cerf requires d_f > d_i");
  const double ti = std::atan(d_i);
  const double tf = std::atan(d_f);
  const double u = tau * tf + (1.0 - tau) * ti;
  return (std::tan(u) - d_i) / (d_f - d_i);
}

double q_optimal_stare(double tau, const SweepSpec& spec) {
  return Schedule::optimal_stare(spec).q(tau);
}

Schedule Schedule::linear() {
  Schedule s;
  s.kind_ = ScheduleKind::Linear;
  return s;
}

Schedule Schedule::roland_cerf(double d_i, double d_f) {
  if (!(d_f > d_i)) throw ParameterError("roland_cerf requires d_f > d_i");
  Schedule s;
  s.kind_ = ScheduleKind::RolandCerf;
  s.d_i_ = d_i;
  s.d_f_ = d_f;
  s.theta_i_ = std::atan(d_i);
  s.theta_f_ = std::atan(d_f);
  return s;
}

Schedule Schedule::optimal_stare(const SweepSpec& spec) {
  spec.validate();
  if (spec.b <= kOptimalScheduleBFloor) {
    // Degenerate dephasing: the optimizer reduces to the purely unitary form.
    Schedule s = roland_cerf(spec.d_i, spec.d_f);
    s.kind_ = ScheduleKind::OptimalStare;
    s.used_fallback_ = true;
    return s;
  }
  Schedule s;
  s.kind_ = ScheduleKind::OptimalStare;
  s.d_i_ = spec.d_i;
  s.d_f_ = spec.d_f;
  s.a_ = spec.a;
  s.b_ = spec.b;
  s.theta_i_ = std::atan(x_of_d(spec.d_i, spec.a, spec.b));
  s.theta_f_ = std::atan(x_of_d(spec.d_f, spec.a, spec.b));
  s.xi_ = xi_constant(spec);
  return s;
}

Schedule Schedule::tabulated(std::vector<double> taus, std::vector<double> values) {
  if (taus.size() != values.size() || taus.size() < 2)
    throw ParameterError("tabulated schedule needs matching node/value lists, >= 2 points");
  if (std::abs(taus.front()) > 1e-12 || std::abs(taus.back() - 1.0) > 1e-12)
    throw ParameterError("tabulated schedule nodes must span [0, 1]");
  if (std::abs(values.front()) > 1e-10 || std::abs(values.back() - 1.0) > 1e-10)
    throw ParameterError("tabulated schedule must satisfy q(0) = 0, q(1) = 1");
  for (std::size_t k = 1; k < taus.size(); ++k) {
    if (!(taus[k] > taus[k - 1])) throw ParameterError("tabulated nodes must increase");
    if (values[k] < values[k - 1]) throw ParameterError("tabulated schedule must be monotone");
  }

  Schedule s;
  s.kind_ = ScheduleKind::Tabulated;
  const std::size_t n = taus.size();
  // Fritsch-Carlson slopes keep the interpolant monotone.
  std::vector<double> delta(n - 1), slope(n);
  for (std::size_t k = 0; k + 1 < n; ++k)
    delta[k] = (values[k + 1] - values[k]) / (taus[k + 1] - taus[k]);
  slope[0] = delta[0];
  slope[n - 1] = delta[n - 2];
  for (std::size_t k = 1; k + 1 < n; ++k)
    slope[k] = (delta[k - 1] * delta[k] <= 0) ? 0.0 : 0.5 * (delta[k - 1] + delta[k]);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (delta[k] == 0) {
      slope[k] = slope[k + 1] = 0;
      continue;
    }
    const double alpha = slope[k] / delta[k];
    const double beta = slope[k + 1] / delta[k];
    const double r = alpha * alpha + beta * beta;
    if (r > 9.0) {
      const double tscale = 3.0 / std::sqrt(r);
      slope[k] = tscale * alpha * delta[k];
      slope[k + 1] = tscale * beta * delta[k];
    }
  }
  s.tab_tau_ = std::move(taus);
  s.tab_q_ = std::move(values);
  s.tab_slope_ = std::move(slope);
  return s;
}

std::size_t Schedule::tab_interval(double tau) const {
  const auto it = std::upper_bound(tab_tau_.begin(), tab_tau_.end(), tau);
  const std::size_t k = static_cast<std::size_t>(std::distance(tab_tau_.begin(), it));
  return std::clamp<std::size_t>(k, 1, tab_tau_.size() - 1) - 1;
}

double Schedule::q(double tau) const {
  switch (kind_) {
    case ScheduleKind::Linear:
      return tau;
    case ScheduleKind::RolandCerf: {
      const double u = tau * theta_f_ + (1.0 - tau) * theta_i_;
      return (std::tan(u) - d_i_) / (d_f_ - d_i_);
    }
    case ScheduleKind::OptimalStare: {
      if (used_fallback_) {
        const double u = tau * theta_f_ + (1.0 - tau) * theta_i_;
        return (std::tan(u) - d_i_) / (d_f_ - d_i_);
      }
      const double u = tau * (theta_f_ - theta_i_) + theta_i_;
      const double tu = std::tan(u);
      const double denom = b_ * b_ - a_ * a_ * tu * tu;
      if (!(denom > 0)) throw NumericError("optimal schedule denominator not positive");
      const double d = std::sqrt(a_ * a_ + b_ * b_) * tu / std::sqrt(denom);
      return (d - d_i_) / (d_f_ - d_i_);
    }
    case ScheduleKind::Tabulated: {
      const std::size_t k = tab_interval(tau);
      const double hseg = tab_tau_[k + 1] - tab_tau_[k];
      const double x = (tau - tab_tau_[k]) / hseg;
      const double h00 = (1 + 2 * x) * (1 - x) * (1 - x);
      const double h10 = x * (1 - x) * (1 - x);
      const double h01 = x * x * (3 - 2 * x);
      const double h11 = x * x * (x - 1);
      return h00 * tab_q_[k] + h10 * hseg * tab_slope_[k] + h01 * tab_q_[k + 1] +
             h11 * hseg * tab_slope_[k + 1];
    }
  }
  throw NumericError("unreachable schedule kind");
}

double Schedule::qdot(double tau) const {
  switch (kind_) {
    case ScheduleKind::Linear:
      return 1.0;
    case ScheduleKind::RolandCerf: {
      const double u = tau * theta_f_ + (1.0 - tau) * theta_i_;
      const double tu = std::tan(u);
      return (theta_f_ - theta_i_) * (1.0 + tu * tu) / (d_f_ - d_i_);
    }
    case ScheduleKind::OptimalStare: {
      if (used_fallback_) {
        const double u = tau * theta_f_ + (1.0 - tau) * theta_i_;
        const double tu = std::tan(u);
        return (theta_f_ - theta_i_) * (1.0 + tu * tu) / (d_f_ - d_i_);
      }
      SweepSpec spec{a_, b_, d_i_, d_f_, ScheduleKind::OptimalStare};
      return std::sqrt(xi_ / mass_function(q(tau), spec));
    }
    case ScheduleKind::Tabulated: {
      const std::size_t k = tab_interval(tau);
      const double hseg = tab_tau_[k + 1] - tab_tau_[k];
      const double x = (tau - tab_tau_[k]) / hseg;
      const double d00 = 6 * x * (x - 1);
      const double d10 = (1 - x) * (1 - 3 * x);
      const double d01 = -d00;
      const double d11 = x * (3 * x - 2);
      return (d00 * tab_q_[k] + d01 * tab_q_[k + 1]) / hseg + d10 * tab_slope_[k] +
             d11 * tab_slope_[k + 1];
    }
  }
  throw NumericError("unreachable schedule kind");
}

double Schedule::qddot(double tau) const {
  switch (kind_) {
    case ScheduleKind::Linear:
      return 0.0;
    case ScheduleKind::RolandCerf: {
      const double u = tau * theta_f_ + (1.0 - tau) * theta_i_;
      return 2.0 * std::tan(u) * (theta_f_ - theta_i_) * qdot(tau);
    }
    case ScheduleKind::OptimalStare: {
      if (used_fallback_) {
        const double u = tau * theta_f_ + (1.0 - tau) * theta_i_;
        return 2.0 * std::tan(u) * (theta_f_ - theta_i_) * qdot(tau);
      }
      SweepSpec spec{a_, b_, d_i_, d_f_, ScheduleKind::OptimalStare};
      const double m = mass_function(q(tau), spec);
      return -0.5 * xi_ * mass_function_dq(q(tau), spec) / (m * m);
    }
    case ScheduleKind::Tabulated: {
      const std::size_t k = tab_interval(tau);
      const double hseg = tab_tau_[k + 1] - tab_tau_[k];
      const double x = (tau - tab_tau_[k]) / hseg;
      const double s00 = (12 * x - 6) / (hseg * hseg);
      const double s10 = (6 * x - 4) / hseg;
      const double s11 = (6 * x - 2) / hseg;
      return s00 * (tab_q_[k] - tab_q_[k + 1]) + s10 * tab_slope_[k] + s11 * tab_slope_[k + 1];
    }
  }
  throw NumericError("unreachable schedule kind");
}

Schedule make_schedule(const SweepSpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case ScheduleKind::Linear:
      return Schedule::linear();
    case ScheduleKind::RolandCerf:
      return Schedule::roland_cerf(spec.d_i, spec.d_f);
    case ScheduleKind::OptimalStare:
      return Schedule::optimal_stare(spec);
    case ScheduleKind::Tabulated:
      throw ParameterError("tabulated schedules are constructed explicitly");
  }
  throw ParameterError("unknown schedule kind");
}

}  // namespace stare
