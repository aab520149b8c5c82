#pragma once

#include <cmath>
#include <limits>

namespace stare::detail {

// Dormand-Prince 5(4) tableau.
inline constexpr double kC2 = 1.0 / 5, kC3 = 3.0 / 10, kC4 = 4.0 / 5, kC5 = 8.0 / 9;
inline constexpr double kA21 = 1.0 / 5;
inline constexpr double kA31 = 3.0 / 40, kA32 = 9.0 / 40;
inline constexpr double kA41 = 44.0 / 45, kA42 = -56.0 / 15, kA43 = 32.0 / 9;
inline constexpr double kA51 = 19372.0 / 6561, kA52 = -25360.0 / 2187, kA53 = 64448.0 / 6561,
                        kA54 = -212.0 / 729;
inline constexpr double kA61 = 9017.0 / 3168, kA62 = -355.0 / 33, kA63 = 46732.0 / 5247,
                        kA64 = 49.0 / 176, kA65 = -5103.0 / 18656;
inline constexpr double kA71 = 35.0 / 384, kA73 = 500.0 / 1113, kA74 = 125.0 / 192,
                        kA75 = -2187.0 / 6784, kA76 = 11.0 / 84;
inline constexpr double kE1 = 71.0 / 57600, kE3 = -71.0 / 16695, kE4 = 71.0 / 1920,
                        kE5 = -17253.0 / 339200, kE6 = 22.0 / 525, kE7 = -1.0 / 40;
// Dense-output weights.
inline constexpr double kD1 = -12715105075.0 / 11282082432.0, kD3 = 87487479700.0 / 32700410799.0,
                        kD4 = -10690763975.0 / 1880347072.0, kD5 = 701980252875.0 / 199316789632.0,
                        kD6 = -1453857185.0 / 822651844.0, kD7 = 69997945.0 / 29380423.0;

inline constexpr std::size_t kMaxSteps = 50'000'000;

template <int N>
double error_norm(const Eigen::Matrix<complexd, N, N>& err, const Eigen::Matrix<complexd, N, N>& y0,
                  const Eigen::Matrix<complexd, N, N>& y1, double atol, double rtol) {
  double sum = 0;
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      const double scr =
          atol + rtol * std::max(std::abs(y0(i, j).real()), std::abs(y1(i, j).real()));
      const double sci =
          atol + rtol * std::max(std::abs(y0(i, j).imag()), std::abs(y1(i, j).imag()));
      const double er = err(i, j).real() / scr;
      const double ei = err(i, j).imag() / sci;
      sum += er * er + ei * ei;
    }
  }
  return std::sqrt(sum / (2.0 * N * N));
}

template <int N, class Rhs>
Trajectory integrate_matrix_ode(Rhs&& rhs, const Eigen::Matrix<complexd, N, N>& y0, double t0,
                                double t1, const IntegrationConfig& config) {
  using Mat = Eigen::Matrix<complexd, N, N>;
  config.validate(t0, t1);
  const double span = t1 - t0;

  std::vector<double> grid = config.output_grid;
  if (grid.empty()) {
    const int n = std::max(2, config.output_points);
    grid.resize(n);
    for (int i = 0; i < n; ++i) grid[i] = t0 + span * static_cast<double>(i) / (n - 1);
    grid.back() = t1;
  }

  Trajectory traj;
  traj.times.reserve(grid.size());
  traj.states.reserve(grid.size());
  traj.diagnostics.reserve(grid.size());
  auto emit = [&](double t, const Mat& y) {
    traj.times.push_back(t);
    traj.states.push_back(y);
    traj.diagnostics.push_back({trace_deviation(y), min_eigenvalue(y)});
  };

  const double hmax = config.max_step > 0 ? config.max_step : span;
  double h = config.initial_step > 0 ? config.initial_step : span * 1e-6;
  h = std::min(h, hmax);

  constexpr double safe = 0.9, beta = 0.04, expo1 = 0.2 - beta * 0.75;
  constexpr double facc1 = 5.0, facc2 = 0.1;  // 1/5 <= hnew/h <= 10
  double facold = 1e-4;
  bool reject = false;

  Mat y = y0;
  double t = t0;
  const complexd trace0 = y0.trace();
  Mat k1, k2, k3, k4, k5, k6, k7, ynew, yerr, ytmp;
  rhs(t, y, k1);
  traj.rhs_evaluations = 1;

  std::size_t gi = 0;
  while (gi < grid.size() && grid[gi] <= t0) {
    emit(t0, y);
    ++gi;
  }

  const double eps = std::numeric_limits<double>::epsilon();
  while (t < t1) {
    if (traj.accepted_steps + traj.rejected_steps > kMaxSteps)
      throw NumericError("integration exceeded the maximum number of steps");
    if (h <= std::abs(t) * eps * 10.0 || h <= span * 1e-15)
      throw StiffnessError("step size underflow (stiff problem?)", t, MatX(y));

    const bool last = t + h >= t1;
    if (last) h = t1 - t;

    ytmp = y + h * (kA21 * k1);
    rhs(t + kC2 * h, ytmp, k2);
    ytmp = y + h * (kA31 * k1 + kA32 * k2);
    rhs(t + kC3 * h, ytmp, k3);
    ytmp = y + h * (kA41 * k1 + kA42 * k2 + kA43 * k3);
    rhs(t + kC4 * h, ytmp, k4);
    ytmp = y + h * (kA51 * k1 + kA52 * k2 + kA53 * k3 + kA54 * k4);
    rhs(t + kC5 * h, ytmp, k5);
    ytmp = y + h * (kA61 * k1 + kA62 * k2 + kA63 * k3 + kA64 * k4 + kA65 * k5);
    rhs(t + h, ytmp, k6);
    ynew = y + h * (kA71 * k1 + kA73 * k3 + kA74 * k4 + kA75 * k5 + kA76 * k6);
    rhs(t + h, ynew, k7);
    traj.rhs_evaluations += 6;

    yerr = h * (kE1 * k1 + kE3 * k3 + kE4 * k4 + kE5 * k5 + kE6 * k6 + kE7 * k7);
    double err = error_norm<N>(yerr, y, ynew, config.atol, config.rtol);
    if (!std::isfinite(err)) err = 1e10;  // overflowed stage: force a rejection

    const double fac11 = std::pow(err, expo1);
    double fac = fac11 / std::pow(facold, beta);
    fac = std::max(facc2, std::min(facc1, fac / safe));
    double hnew = h / fac;

    if (err <= 1.0) {
      facold = std::max(err, 1e-4);
      ++traj.accepted_steps;
      traj.step_trace_deviation =
          std::max(traj.step_trace_deviation, std::abs(ynew.trace() - trace0));

      if (gi < grid.size() && grid[gi] <= t + h) {
        // Continuous extension over the accepted step.
        const Mat ydiff = ynew - y;
        const Mat bspl = h * k1 - ydiff;
        const Mat rcont4 = ydiff - h * k7 - bspl;
        const Mat rcont5 =
            h * (kD1 * k1 + kD3 * k3 + kD4 * k4 + kD5 * k5 + kD6 * k6 + kD7 * k7);
        while (gi < grid.size() && grid[gi] <= t + h) {
          const double theta = std::clamp((grid[gi] - t) / h, 0.0, 1.0);
          const double theta1 = 1.0 - theta;
          const Mat yout =
              y + theta * (ydiff + theta1 * (bspl + theta * (rcont4 + theta1 * rcont5)));
          emit(grid[gi], yout);
          ++gi;
        }
      }

      t = last ? t1 : t + h;
      y.swap(ynew);
      k1.swap(k7);  // first-same-as-last
      if (hnew > hmax) hnew = hmax;
      if (reject) hnew = std::min(hnew, h);
      reject = false;
    } else {
      hnew = h / std::min(facc1, fac11 / safe);
      reject = true;
      ++traj.rejected_steps;
    }
    h = hnew;
  }

  // Grid points at (or within rounding of) the final time.
  while (gi < grid.size()) {
    emit(grid[gi], y);
    ++gi;
  }
  return traj;
}

}  // namespace stare::detail
