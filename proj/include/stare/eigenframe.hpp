#pragma once

#include "stare/matrix.hpp"
#include "stare/schedule.hpp"
#include "stare/types.hpp"

namespace stare {

// Instantaneous eigen-decomposition of the qubit Hamiltonian at fixed tau.
// Energies are in units of 1/T (dimensionless evolution time).
struct EigenFrame {
  double tau = 0;
  double a = 0;
  double d = 0;
  double theta = 0;  // mixing angle, continuous in (0, pi) along the sweep
  double e_plus = 0;
  double e_minus = 0;
  double gap = 0;
  Vec2 ket_plus;
  Vec2 ket_minus;
  Mat2 p_plus;
  Mat2 p_minus;
};

// H_q = (a/2) [d sigma_z + sigma_x]; Hermitian and traceless.
Mat2 hamiltonian_q(double tau, double a, double d);

EigenFrame eigenframe(double tau, double a, double d);

struct ProjectorVelocity {
  Mat2 pdot_minus;      // dP_-/dtau along the sweep
  double trace_scalar;  // Tr{P_+ (dP_-/dtau)^2}
};

ProjectorVelocity projector_velocity(double tau, const SweepSpec& sweep);

}  // namespace stare
