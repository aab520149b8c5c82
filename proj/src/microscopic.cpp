#include "stare/microscopic.hpp"

#include <cmath>

#include "stare/eigenframe.hpp"

namespace stare {

Mat2 aux_thermal_state(double nbar) {
  if (!(nbar >= 0)) throw ParameterError("nbar must be non-negative");
  Mat2 rho = Mat2::Zero();
  rho(0, 0) = nbar / (2.0 * nbar + 1.0);        // excited |up>
  rho(1, 1) = (nbar + 1.0) / (2.0 * nbar + 1.0);
  return rho;
}

Mat4 composite_initial_state(const CompositeParams& params) {
  params.validate();
  const EigenFrame f = eigenframe(0.0, params.g0 * params.total_time(), params.d_i());
  return kron(f.p_minus, aux_thermal_state(params.nbar));
}

CompositeRun run_composite(const CompositeParams& params, const IntegrationConfig& config) {
  params.validate();
  const DensityMatrix chi0 = DensityMatrix::checked(composite_initial_state(params));

  CompositeRun run;
  run.full = evolve(LiouvillianSpec::composite_model(params), chi0, {params.t_i, params.t_f},
                    config);

  const Schedule schedule = composite_schedule(params);
  run.reduced.times = run.full.times;
  run.reduced.accepted_steps = run.full.accepted_steps;
  run.reduced.rejected_steps = run.full.rejected_steps;
  run.reduced.rhs_evaluations = run.full.rhs_evaluations;
  run.reduced.states.reserve(run.full.states.size());
  run.reduced.diagnostics.reserve(run.full.states.size());
  run.infidelity.reserve(run.full.states.size());

  for (std::size_t k = 0; k < run.full.states.size(); ++k) {
    const double t = run.full.times[k];
    const Mat2 rho = partial_trace_aux(Mat4(run.full.states[k]));
    run.reduced.states.push_back(rho);
    run.reduced.diagnostics.push_back({trace_deviation(rho), min_eigenvalue(rho)});
    const double d = d_of_tau(schedule.q(params.tau_of_t(t)), params.d_i(), params.d_f());
    const EigenFrame f = eigenframe(params.tau_of_t(t), params.g0 * params.total_time(), d);
    run.infidelity.push_back(1.0 - (f.p_minus * rho).trace().real());
  }
  return run;
}

}  // namespace stare
