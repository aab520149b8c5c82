#include "stare/eigenframe.hpp"

#include <cmath>

namespace stare {

Mat2 hamiltonian_q(double tau, double a, double d) {
  (void)tau;
  if (!(a > 0)) throw ParameterError("hamiltonian_q: a must be positive");
  Mat2 h;
  h << d, 1.0, 1.0, -d;
  return (a / 2.0) * h;
}

EigenFrame eigenframe(double tau, double a, double d) {
  if (!(a > 0)) throw ParameterError("eigenframe: a must be positive");
  EigenFrame f;
  f.tau = tau;
  f.a = a;
  f.d = d;
  // Mixing angle with tan(theta) = 1/d, continued through d <= 0 so that
  // theta in (0, pi) and the kets stay continuous along the sweep.
  f.theta = std::atan2(1.0, d);
  const double half = std::sqrt(1.0 + d * d);
  f.e_plus = a / 2.0 * half;
  f.e_minus = -f.e_plus;
  f.gap = a * half;
  const double c = std::cos(f.theta / 2.0);
  const double s = std::sin(f.theta / 2.0);
  f.ket_plus << c, s;
  f.ket_minus << -s, c;
  f.p_plus = f.ket_plus * f.ket_plus.adjoint();
  f.p_minus = f.ket_minus * f.ket_minus.adjoint();
  return f;
}

ProjectorVelocity projector_velocity(double tau, const SweepSpec& sweep) {
  sweep.validate();
  const Schedule schedule = make_schedule(sweep);
  const double qv = schedule.q(tau);
  const double qd = schedule.qdot(tau);
  const double d = d_of_tau(qv, sweep.d_i, sweep.d_f);
  const EigenFrame f = eigenframe(tau, sweep.a, d);

  // dP_-/dtau = kappa (|+><-| + |-><+|) with kappa = d'(tau) / (2 (1 + d^2)).
  const double kappa = qd * (sweep.d_f - sweep.d_i) / (2.0 * (1.0 + d * d));
  ProjectorVelocity out;
  out.pdot_minus = kappa * (f.ket_plus * f.ket_minus.adjoint() + f.ket_minus * f.ket_plus.adjoint());
  out.trace_scalar = kappa * kappa;
  return out;
}

}  // namespace stare
