#include "stare/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "stare/eigenframe.hpp"

namespace stare {

void IntegrationConfig::validate(double t0, double t1) const {
  if (!(t1 > t0)) throw ParameterError("integration span must have t_end > t_start");
  if (!(rtol > 0) || !(atol > 0)) throw ParameterError("tolerances must be positive");
  if (!output_grid.empty()) {
    if (!std::is_sorted(output_grid.begin(), output_grid.end()))
      throw ParameterError("output grid must be sorted");
    if (output_grid.front() < t0 - 1e-12 * (t1 - t0) ||
        output_grid.back() > t1 + 1e-12 * (t1 - t0))
      throw ParameterError("output grid must lie within the integration span");
  }
}

double Trajectory::max_trace_deviation() const {
  double worst = step_trace_deviation;
  for (const auto& d : diagnostics) worst = std::max(worst, d.trace_deviation);
  return worst;
}

double Trajectory::worst_min_eigenvalue() const {
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& d : diagnostics) worst = std::min(worst, d.min_eigenvalue);
  return diagnostics.empty() ? 0.0 : worst;
}

namespace {

Trajectory evolve_qubit(const LiouvillianSpec& liouvillian, const Mat2& rho0,
                        std::pair<double, double> span, const IntegrationConfig& config) {
  const SweepSpec& sweep = liouvillian.sweep;
  sweep.validate();
  const Schedule schedule = make_schedule(sweep);
  const bool dissipative = liouvillian.kind == DynamicsKind::Stare;
  const auto b_fn = liouvillian.b_of_tau;
  const double a = sweep.a, d_i = sweep.d_i, d_f = sweep.d_f, b_const = sweep.b;

  auto rhs = [&, a, d_i, d_f, b_const, dissipative](double tau, const Mat2& rho, Mat2& out) {
    const double d = d_of_tau(schedule.q(tau), d_i, d_f);
    const double hz = a / 2.0 * d, hx = a / 2.0;
    // -i [H, rho] written out for the 2x2 case.
    const complexd r01 = rho(0, 1);
    const complexd hr00 = hz * rho(0, 0) + hx * rho(1, 0);
    const complexd hr01 = hz * r01 + hx * rho(1, 1);
    const complexd hr10 = hx * rho(0, 0) - hz * rho(1, 0);
    const complexd hr11 = hx * r01 - hz * rho(1, 1);
    out(0, 0) = -i_unit * (hr00 - std::conj(hr00));
    out(0, 1) = -i_unit * (hr01 - std::conj(hr10));
    out(1, 0) = std::conj(out(0, 1));
    out(1, 1) = -i_unit * (hr11 - std::conj(hr11));

    if (dissipative) {
      const double b = b_fn ? b_fn(tau) : b_const;
      if (b != 0.0) {
        const double theta = std::atan2(1.0, d);
        const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
        const Vec2 kp(c, s), km(-s, c);
        const complexd c_pm = kp.dot(rho * km);
        const Mat2 cross = kp * km.adjoint();
        out -= b * (c_pm * cross + std::conj(c_pm) * cross.adjoint());
      }
    }
  };
  return detail::integrate_matrix_ode<2>(rhs, rho0, span.first, span.second, config);
}

}  // namespace

Trajectory evolve(const LiouvillianSpec& liouvillian, const DensityMatrix& rho0,
                  std::pair<double, double> span, const IntegrationConfig& config) {
  switch (liouvillian.kind) {
    case DynamicsKind::Unitary:
    case DynamicsKind::Stare: {
      if (rho0.dim() != 2) throw DimensionError("qubit dynamics needs a 2x2 initial state");
      return evolve_qubit(liouvillian, Mat2(rho0.mat), span, config);
    }
    case DynamicsKind::Composite: {
      if (rho0.dim() != 4) throw DimensionError("composite dynamics needs a 4x4 initial state");
      const CompositeParams& params = liouvillian.composite;
      params.validate();
      auto rhs = [&params](double t, const Mat4& chi, Mat4& out) {
        out = rhs_composite(t, params, chi);
      };
      return detail::integrate_matrix_ode<4>(rhs, Mat4(rho0.mat), span.first, span.second, config);
    }
  }
  throw ParameterError("unknown dynamics kind");
}

double infidelity_final(const Trajectory& traj, const SweepSpec& sweep) {
  if (traj.states.empty()) throw ParameterError("empty trajectory");
  const MatX& rho = traj.final_state();
  if (rho.rows() != 2) throw DimensionError("infidelity_final expects a qubit trajectory");
  const EigenFrame f = eigenframe(1.0, sweep.a, sweep.d_f);
  const double value = 1.0 - (f.p_minus * rho).trace().real();
  if (value < -1e-10) throw NumericError("infidelity below the admissible floor");
  return value;
}

}  // namespace stare
