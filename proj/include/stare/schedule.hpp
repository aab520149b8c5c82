#pragma once

#include <cmath>
#include <vector>

#include "stare/types.hpp"

namespace stare {

enum class ScheduleKind { Linear, RolandCerf, OptimalStare, Tabulated };

// Dimensionless problem parameters: a = g0*T, b = gamma*T, sweep endpoints
// d_i < d_f, and the schedule selection.
struct SweepSpec {
  double a = 1.0;
  double b = 0.0;
  double d_i = -1.0;
  double d_f = 1.0;
  ScheduleKind kind = ScheduleKind::Linear;

  void validate() const {
    if (!(a > 0)) throw ParameterError("adiabaticity parameter a must be positive");
    if (!(b >= 0)) throw ParameterError("dephasing strength b must be non-negative");
    if (!(d_f > d_i)) throw ParameterError("sweep endpoints require d_f > d_i");
  }
};

inline double d_of_tau(double q_value, double d_i, double d_f) {
  return q_value * d_f + (1.0 - q_value) * d_i;
}

// x(d) entering the optimal open-system schedule and its boundary angles.
inline double x_of_d(double d, double a, double b) {
  return b * d / std::sqrt(a * a * (d * d + 1.0) + b * b);
}

// Action constant of the optimal schedule, (theta_f - theta_i)^2 / (4b).
double xi_constant(const SweepSpec& spec);

double q_linear(double tau);
double q_roland_cerf(double tau, double d_i, double d_f);
double q_optimal_stare(double tau, const SweepSpec& spec);

// Below this value of b the optimal schedule degenerates to 0/0 and we fall
// back to the Roland-Cerf form.
inline constexpr double kOptimalScheduleBFloor = 1e-6;

// Monotone evolution schedule q: [0,1] -> [0,1] with analytic derivatives.
class Schedule {
 public:
  Schedule() = default;

  static Schedule linear();
  static Schedule roland_cerf(double d_i, double d_f);
  // Falls back to roland_cerf when spec.b <= kOptimalScheduleBFloor; the
  // fallback is reported through used_fallback().
  static Schedule optimal_stare(const SweepSpec& spec);
  // Monotone cubic interpolant through (tau_k, q_k); requires q_0 = 0, q_n = 1.
  static Schedule tabulated(std::vector<double> taus, std::vector<double> values);

  double q(double tau) const;
  double qdot(double tau) const;
  double qddot(double tau) const;

  ScheduleKind kind() const { return kind_; }
  bool used_fallback() const { return used_fallback_; }

 private:
  ScheduleKind kind_ = ScheduleKind::Linear;
  bool used_fallback_ = false;

  // Roland-Cerf / OptimalStare parameters.
  double d_i_ = 0, d_f_ = 0;
  double a_ = 0, b_ = 0;
  double theta_i_ = 0, theta_f_ = 0;  // boundary angles of the active closed form
  double xi_ = 0;

  // Tabulated nodes (monotone cubic Hermite).
  std::vector<double> tab_tau_, tab_q_, tab_slope_;
  std::size_t tab_interval(double tau) const;
};

// Schedule selected by the spec's kind field.
Schedule make_schedule(const SweepSpec& spec);

}  // namespace stare
