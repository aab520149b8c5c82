#pragma once

#include "stare/matrix.hpp"
#include "stare/quadrature.hpp"
#include "stare/schedule.hpp"

namespace stare {

// Adiabatic expansion data of the density matrix at a single tau. a0 lives in
// the kernel of the generator (diagonal in the instantaneous basis), b1/b2 in
// its range (strictly off-diagonal).
struct ExpansionCoefficients {
  double tau = 0;
  Mat2 a0, a1, b1, a2, b2;
  double j_value = 0;  // running dissipative integral, <= 0
  complexd lambda_plus, lambda_minus;
};

// Weight of the leading-order infidelity action functional.
double mass_function(double q_value, const SweepSpec& spec);
// dM/dq, used for analytic schedule derivatives.
double mass_function_dq(double q_value, const SweepSpec& spec);

// Leading-order infidelity 2 ∫ M(q) qdot^2 dtau by adaptive quadrature.
double infidelity_leading(const Schedule& schedule, const SweepSpec& spec);

// Next-order correction term for constant b (quadrature path).
double correction_c(const Schedule& schedule, const SweepSpec& spec);

// Closed form of the correction for the optimal schedule. Rejects sweeps with
// an endpoint at d = 0 (logarithmic singularity of this form); the quadrature
// path remains available for those.
double correction_c_optimal_closed(const SweepSpec& spec);

// Minimum attainable leading-order infidelity (theta_f - theta_i)^2 / (2b).
double i_min(const SweepSpec& spec);

// Minimum transfer time for a target infidelity; physical rate units.
double t_min(double gamma, double target_infidelity, double g0, double d_i, double d_f);

ExpansionCoefficients expansion_at(double tau, const Schedule& schedule, const SweepSpec& spec);

// Truncated expansion a0 + a1 + b1 + a2 + b2 (unit trace, Hermitian, not
// necessarily positive).
Mat2 reconstruct_rho(const ExpansionCoefficients& coeffs);

// Caches the running integrals of the expansion for repeated tau queries.
class ExpansionEvaluator {
 public:
  ExpansionEvaluator(const Schedule& schedule, const SweepSpec& spec);
  ExpansionCoefficients at(double tau) const;
  double j_of(double tau) const { return j_integral_(tau); }

 private:
  Schedule schedule_;
  SweepSpec spec_;
  ChebyshevAntiderivative j_integral_;
  ChebyshevAntiderivative a2_integral_;
};

enum class LzAsymptotic { LzFormula, WeakDephasing, StrongDephasing };

// Linear-sweep infidelity asymptotics in terms of A2 = g0^2/eps and B = gamma/g0.
double lz_asymptotics(LzAsymptotic kind, double a_squared, double b_ratio);

}  // namespace stare
