#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "stare/eigenframe.hpp"
#include "stare/matrix.hpp"

using namespace stare;
using std::numbers::pi;

TEST_SUITE_BEGIN("quantum-core");

TEST_CASE("hamiltonian_q collapses to sigma_x at zero detuning") {
  const Mat2 h = hamiltonian_q(0.3, 2.0, 0.0);
  CHECK((h - pauli_x()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("hamiltonian_q eigenvalues at a=10, d=8") {
  const Mat2 h = hamiltonian_q(0.0, 10.0, 8.0);
  Eigen::SelfAdjointEigenSolver<Mat2> es(h);
  const double expected = 5.0 * std::sqrt(65.0);
  CHECK(es.eigenvalues()(0) == doctest::Approx(-expected).epsilon(1e-13));
  CHECK(es.eigenvalues()(1) == doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("hamiltonian_q is traceless and Hermitian") {
  for (int k = 0; k < 20; ++k) {
    const double a = oracles::uniform(0.1, 50.0);
    const double d = oracles::uniform(-30.0, 30.0);
    const Mat2 h = hamiltonian_q(0.0, a, d);
    CHECK(std::abs(h.trace()) < 1e-14);
    CHECK(hermiticity_deviation(h) < 1e-14);
  }
}

TEST_CASE("hamiltonian_q rejects non-positive a") {
  CHECK_THROWS_AS(hamiltonian_q(0.0, 0.0, 1.0), ParameterError);
  CHECK_THROWS_AS(hamiltonian_q(0.0, -2.0, 1.0), ParameterError);
}

TEST_CASE("eigenframe at the avoided crossing") {
  const EigenFrame f = eigenframe(0.5, 3.0, 0.0);
  CHECK(f.theta == doctest::Approx(pi / 2).epsilon(1e-14));
  CHECK(f.gap == doctest::Approx(3.0).epsilon(1e-14));
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(f.ket_plus(0) - r) < 1e-14);
  CHECK(std::abs(f.ket_plus(1) - r) < 1e-14);
  CHECK(std::abs(f.ket_minus(0) + r) < 1e-14);
  CHECK(std::abs(f.ket_minus(1) - r) < 1e-14);
}

TEST_CASE("eigenframe at d=1, a=2") {
  const EigenFrame f = eigenframe(0.0, 2.0, 1.0);
  CHECK(f.gap == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-14));
  CHECK(f.theta == doctest::Approx(pi / 4).epsilon(1e-14));
  CHECK(f.ket_plus(0).real() == doctest::Approx(std::cos(pi / 8)).epsilon(1e-14));
}

TEST_CASE("eigenframe decouples at large positive detuning") {
  const EigenFrame f = eigenframe(0.0, 1.0, 1e6);
  CHECK(std::abs(f.ket_plus(0) - 1.0) < 1e-6);
  CHECK(std::abs(f.ket_plus(1)) < 1e-6);
  CHECK(std::abs(f.ket_minus(1) - 1.0) < 1e-6);
}

TEST_CASE("eigenframe projector algebra and eigen-residuals") {
  for (int k = 0; k < 50; ++k) {
    const double a = oracles::uniform(0.5, 40.0);
    const double d = oracles::uniform(-50.0, 50.0);
    const EigenFrame f = eigenframe(0.0, a, d);
    CHECK((f.p_plus + f.p_minus - Mat2::Identity()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((f.p_plus * f.p_plus - f.p_plus).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((f.p_minus * f.p_minus - f.p_minus).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((f.p_plus * f.p_minus).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(std::abs(f.ket_plus.dot(f.ket_minus)) < 1e-12);

    const Mat2 h = hamiltonian_q(0.0, a, d);
    CHECK((h * f.ket_plus - f.e_plus * f.ket_plus).norm() < 1e-12 * f.gap);
    CHECK((h * f.ket_minus - f.e_minus * f.ket_minus).norm() < 1e-12 * f.gap);
    CHECK(f.gap >= a);
  }
}

TEST_CASE("eigenvector continuity along a sweep refines with the grid") {
  const SweepSpec sweep{10.0, 0.0, -8.0, 8.0, ScheduleKind::RolandCerf};
  const Schedule schedule = make_schedule(sweep);
  auto max_step = [&](int n) {
    double worst = 0;
    Vec2 prev = eigenframe(0.0, sweep.a, sweep.d_i).ket_minus;
    for (int k = 1; k <= n; ++k) {
      const double tau = static_cast<double>(k) / n;
      const Vec2 cur =
          eigenframe(tau, sweep.a, d_of_tau(schedule.q(tau), sweep.d_i, sweep.d_f)).ket_minus;
      worst = std::max(worst, (cur - prev).norm());
      prev = cur;
    }
    return worst;
  };
  const double coarse = max_step(1000);
  const double fine = max_step(4000);
  CHECK(coarse < 0.02);       // no phase flips anywhere
  CHECK(fine < coarse / 2.0);  // shrinks as the grid refines
}

TEST_CASE("projector_velocity matches the compact trace form") {
  // linear schedule, symmetric sweep: d = 0 at tau = 1/2, qdot = 1
  const SweepSpec sweep{1.0, 0.0, -10.0, 10.0, ScheduleKind::Linear};
  const ProjectorVelocity pv = projector_velocity(0.5, sweep);
  CHECK(pv.trace_scalar == doctest::Approx(100.0).epsilon(1e-13));
  // trace recomputed from the matrix itself
  const EigenFrame f = eigenframe(0.5, sweep.a, 0.0);
  const double tr = (f.p_plus * pv.pdot_minus * pv.pdot_minus).trace().real();
  CHECK(tr == doctest::Approx(pv.trace_scalar).epsilon(1e-12));
}

TEST_CASE("projector_velocity vanishes in the constant-sweep limit") {
  const SweepSpec sweep{1.0, 0.0, 5.0, 5.0 + 1e-12, ScheduleKind::Linear};
  const ProjectorVelocity pv = projector_velocity(0.3, sweep);
  CHECK(pv.pdot_minus.cwiseAbs().maxCoeff() < 1e-10);
  CHECK(pv.trace_scalar < 1e-20);
}

TEST_CASE("projector_velocity agrees with finite differences at O(h^2)") {
  const SweepSpec sweep{2.0, 0.0, -6.0, 6.0, ScheduleKind::RolandCerf};
  const Schedule schedule = make_schedule(sweep);
  const double tau = 0.37;
  const ProjectorVelocity pv = projector_velocity(tau, sweep);
  auto p_minus_at = [&](double t) {
    return eigenframe(t, sweep.a, d_of_tau(schedule.q(t), sweep.d_i, sweep.d_f)).p_minus;
  };
  double err_prev = 0;
  int i = 0;
  for (const double h : {1e-4, 1e-5}) {
    const Mat2 fd = (p_minus_at(tau + h) - p_minus_at(tau - h)) / (2.0 * h);
    const double err = (fd - pv.pdot_minus).cwiseAbs().maxCoeff();
    CHECK(err < 50.0 * h * h);
    if (i++ > 0) CHECK(err < err_prev);
    err_prev = err;
  }
}

TEST_CASE("partial trace of a product state returns the system factor") {
  const Mat2 rho_s = oracles::random_density<2>();
  const Mat2 rho_a = oracles::random_density<2>();
  const Mat2 out = partial_trace_aux(kron(rho_s, rho_a));
  CHECK((out - rho_s).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("partial trace of the maximally mixed and Bell states") {
  const Mat4 mixed = Mat4::Identity() / 4.0;
  CHECK((partial_trace_aux(mixed) - Mat2::Identity() / 2.0).cwiseAbs().maxCoeff() < 1e-15);

  Eigen::Vector4cd bell;
  bell << 1.0 / std::sqrt(2.0), 0, 0, 1.0 / std::sqrt(2.0);
  const Mat4 chi = bell * bell.adjoint();
  CHECK((partial_trace_aux(chi) - Mat2::Identity() / 2.0).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("partial trace preserves trace and hermiticity") {
  for (int k = 0; k < 25; ++k) {
    const Mat4 chi = oracles::random_density<4>();
    const Mat2 rho = partial_trace_aux(chi);
    CHECK(std::abs(rho.trace() - chi.trace()) < 1e-12);
    CHECK(hermiticity_deviation(rho) < 1e-13);
    CHECK(min_eigenvalue(rho) > -1e-12);
  }
}

TEST_CASE("partial trace rejects qubit-sized input") {
  const DensityMatrix rho = DensityMatrix::checked(Mat2::Identity() / 2.0);
  CHECK_THROWS_AS(partial_trace_aux(rho), DimensionError);
}

TEST_CASE("density matrix validation catches bad states") {
  Mat2 bad_trace = Mat2::Identity();
  CHECK_THROWS_AS(DensityMatrix::checked(bad_trace), ParameterError);

  Mat2 not_hermitian;
  not_hermitian << 0.5, 0.3, -0.3, 0.5;
  CHECK_THROWS_AS(DensityMatrix::checked(not_hermitian), ParameterError);

  Mat2 negative;
  negative << 1.2, 0, 0, -0.2;
  CHECK_THROWS_AS(DensityMatrix::checked(negative), ParameterError);

  Eigen::Matrix3cd wrong = Eigen::Matrix3cd::Identity() / 3.0;
  CHECK_THROWS_AS(DensityMatrix::checked(wrong), DimensionError);
}

TEST_SUITE_END();
