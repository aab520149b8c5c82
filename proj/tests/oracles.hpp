#pragma once

// Independent reference implementations used only by the test suite. These
// deliberately avoid the library's closed forms wherever they check one.

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "stare/analytics.hpp"
#include "stare/eigenframe.hpp"
#include "stare/schedule.hpp"

namespace oracles {

using namespace stare;

// ---------------------------------------------------------------------------
// Shooting oracle for the optimal schedule: integrate dq/dtau = sqrt(xi/M(q))
// with fixed-step RK4 and bisect on xi until q(1) = 1 to the given tolerance.

inline double shoot_q1(double xi, const SweepSpec& spec, int steps = 100000) {
  const double h = 1.0 / steps;
  double q = 0.0;
  auto f = [&](double qv) { return std::sqrt(xi / mass_function(qv, spec)); };
  for (int k = 0; k < steps; ++k) {
    const double k1 = f(q);
    const double k2 = f(q + 0.5 * h * k1);
    const double k3 = f(q + 0.5 * h * k2);
    const double k4 = f(q + h * k3);
    q += h / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
  }
  return q;
}

inline double find_xi_by_shooting(const SweepSpec& spec, double tol = 1e-10) {
  double lo = 0.0, hi = 1e-6;
  while (shoot_q1(hi, spec) < 1.0) hi *= 2.0;
  while (hi - lo > tol * std::max(1.0, hi)) {
    const double mid = 0.5 * (lo + hi);
    (shoot_q1(mid, spec) < 1.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// q(tau) along the shooting solution, sampled at the requested taus.
inline std::vector<double> shoot_q_path(double xi, const SweepSpec& spec,
                                        const std::vector<double>& taus, int steps = 100000) {
  const double h = 1.0 / steps;
  double q = 0.0;
  std::vector<double> out;
  out.reserve(taus.size());
  std::size_t next = 0;
  auto f = [&](double qv) { return std::sqrt(xi / mass_function(qv, spec)); };
  for (int k = 0; k <= steps; ++k) {
    const double tau = k * h;
    while (next < taus.size() && taus[next] <= tau + 1e-12) {
      out.push_back(q);
      ++next;
    }
    if (k == steps) break;
    const double k1 = f(q);
    const double k2 = f(q + 0.5 * h * k1);
    const double k3 = f(q + 0.5 * h * k2);
    const double k4 = f(q + h * k3);
    q += h / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
  }
  while (out.size() < taus.size()) out.push_back(q);
  return out;
}

// ---------------------------------------------------------------------------
// Physical-units optimal unitary sweep s(t) = g0 tan[(2t/T) atan(eps T/(2g0))]
// evaluated literally on a symmetric window and rescaled to a schedule value;
// reference for the dimensionless Roland-Cerf closed form.

inline double rc_schedule_from_physical_symmetric(double tau, double d_f) {
  const double g0 = 1.0, T = 2.0;            // arbitrary scales, they cancel
  const double eps = 2.0 * g0 * d_f / T;     // fixes s(t_f) = eps T / 2 = g0 d_f
  const double t = tau * T - T / 2.0;        // t in [-T/2, T/2]
  const double s = g0 * std::tan(2.0 * t / T * std::atan(eps * T / (2.0 * g0)));
  return (s / g0 + d_f) / (2.0 * d_f);
}

// ---------------------------------------------------------------------------
// State-vector route for the unitary sweep: fixed-step RK4 on the Schrodinger
// equation, bypassing the density-matrix machinery entirely.

inline double schrodinger_final_infidelity(const SweepSpec& spec, int steps = 200000) {
  const Schedule schedule = make_schedule(spec);
  auto h_psi = [&](double tau, const Vec2& psi) -> Vec2 {
    const double d = d_of_tau(schedule.q(tau), spec.d_i, spec.d_f);
    Vec2 out;
    out(0) = -i_unit * (spec.a / 2.0) * (d * psi(0) + psi(1));
    out(1) = -i_unit * (spec.a / 2.0) * (psi(0) - d * psi(1));
    return out;
  };
  Vec2 psi = eigenframe(0.0, spec.a, spec.d_i).ket_minus;
  const double h = 1.0 / steps;
  for (int k = 0; k < steps; ++k) {
    const double tau = k * h;
    const Vec2 k1 = h_psi(tau, psi);
    const Vec2 k2 = h_psi(tau + h / 2, psi + h / 2 * k1);
    const Vec2 k3 = h_psi(tau + h / 2, psi + h / 2 * k2);
    const Vec2 k4 = h_psi(tau + h, psi + h * k3);
    psi += h / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
  }
  const Vec2 minus = eigenframe(1.0, spec.a, spec.d_f).ket_minus;
  return 1.0 - std::norm(minus.dot(psi));
}

// ---------------------------------------------------------------------------
// Composite Simpson rule (self-convergence reference for adaptive quadrature).

inline double simpson(const std::function<double(double)>& f, double lo, double hi, int n) {
  if (n % 2) ++n;
  const double h = (hi - lo) / n;
  double acc = f(lo) + f(hi);
  for (int k = 1; k < n; ++k) acc += f(lo + k * h) * (k % 2 ? 4.0 : 2.0);
  return acc * h / 3.0;
}

// ---------------------------------------------------------------------------
// Deterministic random states.

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eedu);
  return gen;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

template <int N>
Eigen::Matrix<complexd, N, N> random_density() {
  Eigen::Matrix<complexd, N, N> a;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) a(i, j) = complexd(uniform(-1, 1), uniform(-1, 1));
  Eigen::Matrix<complexd, N, N> rho = a * a.adjoint();
  rho /= rho.trace();
  return rho;
}

template <int N>
Eigen::Matrix<complexd, N, N> random_hermitian_unit_trace() {
  Eigen::Matrix<complexd, N, N> a;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) a(i, j) = complexd(uniform(-1, 1), uniform(-1, 1));
  Eigen::Matrix<complexd, N, N> h = (a + a.adjoint()) / 2.0;
  h += (complexd(1.0, 0.0) - h.trace()) / double(N) * Eigen::Matrix<complexd, N, N>::Identity();
  return h;
}

}  // namespace oracles
