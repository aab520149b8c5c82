#include "stare/liouvillian.hpp"

#include <cmath>

#include "stare/eigenframe.hpp"

namespace stare {

namespace {

Mat2 commutator_rhs(const Mat2& h, const Mat2& rho) {
  const Mat2 hr = h * rho;
  return -i_unit * (hr - hr.adjoint());
}

}  // namespace

Mat2 rhs_unitary(double tau, const SweepSpec& spec, const Mat2& rho) {
  const Schedule schedule = make_schedule(spec);
  const double d = d_of_tau(schedule.q(tau), spec.d_i, spec.d_f);
  return commutator_rhs(hamiltonian_q(tau, spec.a, d), rho);
}

Mat2 rhs_stare(double tau, const SweepSpec& spec, const Mat2& rho) {
  return rhs_stare(tau, spec, {}, rho);
}

Mat2 rhs_stare(double tau, const SweepSpec& spec, const std::function<double(double)>& b_of_tau,
               const Mat2& rho) {
  const Schedule schedule = make_schedule(spec);
  const double d = d_of_tau(schedule.q(tau), spec.d_i, spec.d_f);
  const double b = b_of_tau ? b_of_tau(tau) : spec.b;
  const EigenFrame f = eigenframe(tau, spec.a, d);

  Mat2 out = commutator_rhs(hamiltonian_q(tau, spec.a, d), rho);
  if (b != 0.0) {
    // P+ rho P- + P- rho P+ assembled from the frame kets.
    const complexd c_pm = f.ket_plus.dot(rho * f.ket_minus);
    const Mat2 cross = f.ket_plus * f.ket_minus.adjoint();
    out -= b * (c_pm * cross + std::conj(c_pm) * cross.adjoint());
  }
  return out;
}

Mat2 hamiltonian_physical(double t, const CompositeParams& params) {
  const Schedule schedule = composite_schedule(params);
  const double q = schedule.q(params.tau_of_t(t));
  const double s = q * params.s_f + (1.0 - q) * params.s_i;
  Mat2 h;
  h << s / 2.0, params.g0 / 2.0, params.g0 / 2.0, -s / 2.0;
  return h;
}

Mat4 hamiltonian_composite(double t, const CompositeParams& params) {
  const Mat2 hs = hamiltonian_physical(t, params);
  const Mat2 ha = (params.omega_a / 2.0) * pauli_z();
  return kron(hs, identity2()) + kron(identity2(), ha) + params.x0 * kron(hs, pauli_x());
}

Mat4 rhs_composite(double t, const CompositeParams& params, const Mat4& chi) {
  static const Mat4 o = kron(identity2(), sigma_minus());
  static const Mat4 odag = o.adjoint();
  static const Mat4 n_down = odag * o;
  static const Mat4 n_up = o * odag;

  const Mat4 h = hamiltonian_composite(t, params);
  const Mat4 hc = h * chi;
  Mat4 out = -i_unit * (hc - hc.adjoint());

  const double down = params.kappa * (params.nbar + 1.0);
  const double up = params.kappa * params.nbar;
  if (down != 0.0) out += down * (o * chi * odag - 0.5 * (n_down * chi + chi * n_down));
  if (up != 0.0) out += up * (odag * chi * o - 0.5 * (n_up * chi + chi * n_up));
  return out;
}

}  // namespace stare
