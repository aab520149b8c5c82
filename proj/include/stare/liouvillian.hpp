#pragma once

#include <functional>

#include "stare/composite.hpp"
#include "stare/matrix.hpp"
#include "stare/schedule.hpp"

namespace stare {

enum class DynamicsKind { Unitary, Stare, Composite };

// Selects one of the three right-hand sides. Unitary/Stare use the
// dimensionless sweep block; Composite uses physical-units parameters.
// b_of_tau, when set, overrides the constant spec.b for the Stare dissipator
// (supports time-dependent rates such as gamma(t) ∝ Delta(t)^2).
struct LiouvillianSpec {
  DynamicsKind kind = DynamicsKind::Unitary;
  SweepSpec sweep;
  std::function<double(double)> b_of_tau;
  CompositeParams composite;

  static LiouvillianSpec unitary(const SweepSpec& s) {
    LiouvillianSpec spec;
    spec.kind = DynamicsKind::Unitary;
    spec.sweep = s;
    return spec;
  }
  static LiouvillianSpec stare(const SweepSpec& s, std::function<double(double)> b_fn = {}) {
    LiouvillianSpec spec;
    spec.kind = DynamicsKind::Stare;
    spec.sweep = s;
    spec.b_of_tau = std::move(b_fn);
    return spec;
  }
  static LiouvillianSpec composite_model(const CompositeParams& p) {
    LiouvillianSpec spec;
    spec.kind = DynamicsKind::Composite;
    spec.composite = p;
    return spec;
  }
};

// d(rho)/dtau = -i [H_q(tau), rho].
Mat2 rhs_unitary(double tau, const SweepSpec& spec, const Mat2& rho);

// d(rho)/dtau = -i [H_q, rho] - b(tau) (P+ rho P- + P- rho P+), projectors in
// the instantaneous frame of the swept Hamiltonian.
Mat2 rhs_stare(double tau, const SweepSpec& spec, const Mat2& rho);
Mat2 rhs_stare(double tau, const SweepSpec& spec, const std::function<double(double)>& b_of_tau,
               const Mat2& rho);

// Composite qubit ⊗ auxiliary master equation in physical units:
// d(chi)/dt = -i [H_SA(t), chi] + kappa [(nbar+1) D(o) + nbar D(o†)] chi,
// with o = I ⊗ sigma_- and D(o)chi = o chi o† - {o†o, chi}/2.
Mat4 rhs_composite(double t, const CompositeParams& params, const Mat4& chi);

// System Hamiltonian H_S(t) = s(t)/2 sigma_z + g0/2 sigma_x in physical units.
Mat2 hamiltonian_physical(double t, const CompositeParams& params);
Mat4 hamiltonian_composite(double t, const CompositeParams& params);

}  // namespace stare
