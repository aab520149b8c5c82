#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "stare/liouvillian.hpp"
#include "stare/matrix.hpp"

namespace stare {

struct IntegrationConfig {
  double rtol = 1e-10;
  double atol = 1e-12;
  double max_step = 0.0;      // 0 -> full span
  double initial_step = 0.0;  // 0 -> span * 1e-6
  int output_points = 201;    // uniform grid; ignored when output_grid is set
  std::vector<double> output_grid;

  void validate(double t0, double t1) const;
};

struct StateDiagnostics {
  double trace_deviation = 0;
  double min_eigenvalue = 0;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<MatX> states;
  std::vector<StateDiagnostics> diagnostics;
  std::size_t accepted_steps = 0;
  std::size_t rejected_steps = 0;
  std::size_t rhs_evaluations = 0;
  double step_trace_deviation = 0;  // worst |Tr - Tr(y0)| over accepted steps

  const MatX& final_state() const { return states.back(); }
  double max_trace_deviation() const;
  double worst_min_eigenvalue() const;
};

// Integrates d(rho)/dt = L(t) rho over [t_start, t_end] with an embedded
// Runge-Kutta 5(4) pair, PI step control and dense output on the grid.
Trajectory evolve(const LiouvillianSpec& liouvillian, const DensityMatrix& rho0,
                  std::pair<double, double> span, const IntegrationConfig& config = {});

// 1 - Tr{P_-(tau=1) rho_final} for a dimensionless qubit trajectory.
double infidelity_final(const Trajectory& traj, const SweepSpec& sweep);

namespace detail {

// Dormand-Prince 5(4) on fixed-size complex matrix states. Deterministic:
// no randomness, no threading, purely input-driven step selection.
template <int N, class Rhs>
Trajectory integrate_matrix_ode(Rhs&& rhs, const Eigen::Matrix<complexd, N, N>& y0, double t0,
                                double t1, const IntegrationConfig& config);

}  // namespace detail

}  // namespace stare

#include "stare/integrator_impl.hpp"
