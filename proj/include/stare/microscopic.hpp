#pragma once

#include <vector>

#include "stare/composite.hpp"
#include "stare/integrator.hpp"

namespace stare {

struct CompositeRun {
  Trajectory full;     // 4x4 composite states
  Trajectory reduced;  // partial trace over the auxiliary qubit
  std::vector<double> infidelity;  // 1 - Tr{P_-(t) rho_S(t)} on the output grid
};

// Integrates the composite master equation from the instantaneous ground
// state ⊗ auxiliary thermal state.
CompositeRun run_composite(const CompositeParams& params, const IntegrationConfig& config = {});

// Auxiliary thermal (Gibbs) state for the given occupation.
Mat2 aux_thermal_state(double nbar);

// Initial composite state P_-(t_i) ⊗ thermal.
Mat4 composite_initial_state(const CompositeParams& params);

}  // namespace stare
