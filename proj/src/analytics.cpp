#include "stare/analytics.hpp"

#include <cmath>
#include <numbers>

#include "stare/eigenframe.hpp"

namespace stare {

double mass_function(double q_value, const SweepSpec& spec) {
  spec.validate();
  const double d = d_of_tau(q_value, spec.d_i, spec.d_f);
  const double u = 1.0 + d * d;
  const double dd = spec.d_f - spec.d_i;
  return spec.b * dd * dd / (4.0 * u * u * (spec.a * spec.a * u + spec.b * spec.b));
}

double mass_function_dq(double q_value, const SweepSpec& spec) {
  spec.validate();
  const double d = d_of_tau(q_value, spec.d_i, spec.d_f);
  const double u = 1.0 + d * d;
  const double dd = spec.d_f - spec.d_i;
  const double a2 = spec.a * spec.a, b2 = spec.b * spec.b;
  const double denom = u * u * u * (a2 * u + b2) * (a2 * u + b2);
  return -spec.b * dd * dd * dd * d * (3.0 * a2 * u + 2.0 * b2) / (2.0 * denom);
}

double infidelity_leading(const Schedule& schedule, const SweepSpec& spec) {
  spec.validate();
  if (spec.b == 0) return 0.0;
  auto integrand = [&](double tau) {
    const double qd = schedule.qdot(tau);
    return 2.0 * mass_function(schedule.q(tau), spec) * qd * qd;
  };
  return integrate_adaptive(integrand, 0.0, 1.0, 1e-9, 1e-12);
}

namespace {

// Bracket multiplying -d (d_f - d_i) qdot in the correction integrand.
double correction_rational(double d, const SweepSpec& spec) {
  const double u = 1.0 + d * d;
  const double a2 = spec.a * spec.a, b2 = spec.b * spec.b;
  const double num = 3.0 * a2 * a2 * u * u - 3.0 * a2 * b2 * u - 2.0 * b2 * b2;
  return num / (spec.b * u * (a2 * u + b2) * (a2 * u + b2));
}

}  // namespace

double correction_c(const Schedule& schedule, const SweepSpec& spec) {
  spec.validate();
  if (!(spec.b > 0)) throw ParameterError("correction_c requires constant b > 0");
  ChebyshevAntiderivative j_of([&](double tau) {
    const double qd = schedule.qdot(tau);
    return -2.0 * mass_function(schedule.q(tau), spec) * qd * qd;
  }, 0.0, 1.0);

  auto integrand = [&](double tau) {
    const double qv = schedule.q(tau);
    const double qd = schedule.qdot(tau);
    const double d = d_of_tau(qv, spec.d_i, spec.d_f);
    const double bracket =
        2.0 * j_of(tau) - d * (spec.d_f - spec.d_i) * qd * correction_rational(d, spec);
    return 2.0 * qd * qd * mass_function(qv, spec) * bracket;
  };
  // symmetric sweeps cancel the odd part of the integrand almost exactly, so
  // the absolute floor matters more than the relative target there
  return integrate_adaptive(integrand, 0.0, 1.0, 1e-9, 1e-12);
}

double correction_c_optimal_closed(const SweepSpec& spec) {
  spec.validate();
  if (!(spec.b > 0)) throw ParameterError("closed-form correction requires b > 0");
  if (std::abs(spec.d_i) < 1e-9 || std::abs(spec.d_f) < 1e-9)
    throw ParameterError("closed-form correction is singular for sweeps touching d = 0");
  const double imin = i_min(spec);
  const double xi_v = x_of_d(spec.d_i, spec.a, spec.b);
  const double xf_v = x_of_d(spec.d_f, spec.a, spec.b);
  const double bracket = 5.0 * std::log(spec.d_f * xi_v / (spec.d_i * xf_v)) -
                         std::log((spec.d_f * spec.d_f + 1.0) / (spec.d_i * spec.d_i + 1.0)) +
                         2.0 * (xf_v * xf_v / (spec.d_f * spec.d_f) -
                                xi_v * xi_v / (spec.d_i * spec.d_i));
  return -imin * imin - imin / spec.b * bracket;
}

double i_min(const SweepSpec& spec) {
  spec.validate();
  if (!(spec.b > 0)) throw ParameterError("i_min requires b > 0");
  const double dtheta =
      std::atan(x_of_d(spec.d_f, spec.a, spec.b)) - std::atan(x_of_d(spec.d_i, spec.a, spec.b));
  return dtheta * dtheta / (2.0 * spec.b);
}

double t_min(double gamma, double target_infidelity, double g0, double d_i, double d_f) {
  if (!(gamma > 0)) throw ParameterError("t_min requires gamma > 0");
  if (!(target_infidelity > 0 && target_infidelity < 1))
    throw ParameterError("t_min requires a target infidelity in (0, 1)");
  if (!(g0 > 0)) throw ParameterError("t_min requires g0 > 0");
  if (!(d_f > d_i)) throw ParameterError("t_min requires d_f > d_i");
  auto x = [&](double d) { return gamma * d / std::sqrt(g0 * g0 * (d * d + 1.0) + gamma * gamma); };
  const double dtheta = std::atan(x(d_f)) - std::atan(x(d_i));
  return dtheta * dtheta / (2.0 * gamma * target_infidelity);
}

namespace {

struct FramePieces {
  double d, u, ddot, kappa, g;  // g = (d_f - d_i) / (2u); kappa = qdot * g
  double w, wdot;               // gap * T and its tau-derivative
  complexd mu;                  // generator eigenvalue on |+><-|
};

FramePieces frame_pieces(double tau, const Schedule& schedule, const SweepSpec& spec) {
  FramePieces p;
  const double qv = schedule.q(tau);
  const double qd = schedule.qdot(tau);
  p.d = d_of_tau(qv, spec.d_i, spec.d_f);
  p.u = 1.0 + p.d * p.d;
  p.ddot = qd * (spec.d_f - spec.d_i);
  p.g = (spec.d_f - spec.d_i) / (2.0 * p.u);
  p.kappa = qd * p.g;
  p.w = spec.a * std::sqrt(p.u);
  p.wdot = spec.a * p.d * p.ddot / std::sqrt(p.u);
  p.mu = complexd(-spec.b, -p.w);
  return p;
}

}  // namespace

ExpansionEvaluator::ExpansionEvaluator(const Schedule& schedule, const SweepSpec& spec)
    : schedule_(schedule),
      spec_(spec),
      j_integral_(
          [&](double tau) {
            const double qd = schedule.qdot(tau);
            return -2.0 * mass_function(schedule.q(tau), spec) * qd * qd;
          },
          0.0, 1.0),
      a2_integral_(
          [&](double tau) {
            const FramePieces p = frame_pieces(tau, schedule, spec);
            const double qd = schedule.qdot(tau);
            const double qdd = schedule.qddot(tau);
            const double jv = j_integral_(tau);
            const complexd mu2 = p.mu * p.mu;
            const complexd term12 = p.kappa * p.kappa * (2.0 * jv / p.mu +
                                                         complexd(0, 1) * p.wdot / (mu2 * p.mu));
            const double ratio_num = p.g * p.g * qd * qdd -
                                     p.kappa * p.kappa * 2.0 * p.d * p.ddot / p.u;
            return 2.0 * (term12 + ratio_num / mu2).real();
          },
          0.0, 1.0) {}

ExpansionCoefficients ExpansionEvaluator::at(double tau) const {
  const FramePieces p = frame_pieces(tau, schedule_, spec_);
  const EigenFrame f = eigenframe(tau, spec_.a, p.d);
  const double qdd = schedule_.qddot(tau);

  ExpansionCoefficients c;
  c.tau = tau;
  c.lambda_plus = complexd(-spec_.b, p.w);
  c.lambda_minus = std::conj(c.lambda_plus);
  c.j_value = j_integral_(tau);

  const Mat2 s_pm = f.ket_plus * f.ket_minus.adjoint();
  const Mat2 s_mp = s_pm.adjoint();
  const Mat2 kernel_dir = f.p_minus - f.p_plus;

  c.a0 = f.p_minus;
  c.a1 = kernel_dir * c.j_value;
  c.b1 = p.kappa * (s_pm / p.mu + s_mp / std::conj(p.mu));
  c.a2 = kernel_dir * a2_integral_(tau);

  // kappa * x1 assembled without dividing by qdot (schedules may pause).
  const complexd mu2 = p.mu * p.mu;
  const complexd kx1 = p.kappa * (2.0 * c.j_value / p.mu + complexd(0, 1) * p.wdot / (mu2 * p.mu)) +
                       (p.g * qdd - p.kappa * 2.0 * p.d * p.ddot / p.u) / mu2;
  c.b2 = kx1 * s_pm + std::conj(kx1) * s_mp;
  return c;
}

ExpansionCoefficients expansion_at(double tau, const Schedule& schedule, const SweepSpec& spec) {
  spec.validate();
  return ExpansionEvaluator(schedule, spec).at(tau);
}

Mat2 reconstruct_rho(const ExpansionCoefficients& coeffs) {
  return coeffs.a0 + coeffs.a1 + coeffs.b1 + coeffs.a2 + coeffs.b2;
}

double lz_asymptotics(LzAsymptotic kind, double a_squared, double b_ratio) {
  if (!(a_squared > 0)) throw ParameterError("lz_asymptotics requires A^2 > 0");
  if (b_ratio < 0) throw ParameterError("lz_asymptotics requires B >= 0");
  switch (kind) {
    case LzAsymptotic::LzFormula:
      return std::exp(-std::numbers::pi * a_squared / 2.0);
    case LzAsymptotic::WeakDephasing:
      return 3.0 * std::numbers::pi / 16.0 * b_ratio / a_squared;
    case LzAsymptotic::StrongDephasing:
      return std::numbers::pi / 4.0 / (a_squared * b_ratio);
  }
  throw ParameterError("unknown asymptotic kind");
}

}  // namespace stare
