#pragma once

#include <algorithm>

#include "stare/types.hpp"

namespace stare {

inline Mat2 pauli_x() {
  Mat2 m;
  m << 0, 1, 1, 0;
  return m;
}

inline Mat2 pauli_y() {
  Mat2 m;
  m << 0, -i_unit, i_unit, 0;
  return m;
}

inline Mat2 pauli_z() {
  Mat2 m;
  m << 1, 0, 0, -1;
  return m;
}

inline Mat2 identity2() { return Mat2::Identity(); }

// sigma_- = |down><up| in the (up, down) basis.
inline Mat2 sigma_minus() {
  Mat2 m;
  m << 0, 0, 1, 0;
  return m;
}

inline Mat2 sigma_plus() { return sigma_minus().adjoint(); }

// Kronecker product, system-first ordering: (A ⊗ B)[i*2+k, j*2+l] = A(i,j)B(k,l).
inline Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

inline double hermiticity_deviation(const MatX& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

inline bool is_hermitian(const MatX& m, double tol = 1e-12) {
  return hermiticity_deviation(m) < tol;
}

inline double trace_deviation(const MatX& m) { return std::abs(m.trace() - complexd{1.0, 0.0}); }

// Smallest eigenvalue of the Hermitian part.
inline double min_eigenvalue(const MatX& m) {
  Eigen::SelfAdjointEigenSolver<MatX> es(((m + m.adjoint()) / 2.0).eval(),
                                         Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

enum class Basis { Computational, Instantaneous };

// Validated unit-trace Hermitian PSD matrix (2x2 qubit or 4x4 composite).
struct DensityMatrix {
  MatX mat;
  Basis basis = Basis::Computational;

  static DensityMatrix checked(MatX m, Basis basis = Basis::Computational) {
    if (m.rows() != m.cols() || (m.rows() != 2 && m.rows() != 4))
      throw DimensionError("density matrix must be 2x2 or 4x4");
    if (trace_deviation(m) > 1e-10) throw ParameterError("density matrix trace differs from 1");
    if (!is_hermitian(m)) throw ParameterError("density matrix is not Hermitian");
    if (min_eigenvalue(m) < -1e-10) throw ParameterError("density matrix has a negative eigenvalue");
    return DensityMatrix{std::move(m), basis};
  }

  Eigen::Index dim() const { return mat.rows(); }
};

// Trace over the auxiliary factor of a system ⊗ auxiliary state.
inline Mat2 partial_trace_aux(const Mat4& chi) {
  Mat2 rho;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      rho(i, j) = chi(2 * i, 2 * j) + chi(2 * i + 1, 2 * j + 1);
  return rho;
}

inline DensityMatrix partial_trace_aux(const DensityMatrix& chi) {
  if (chi.dim() != 4) throw DimensionError("partial_trace_aux expects a 4x4 state");
  return DensityMatrix::checked(partial_trace_aux(Mat4(chi.mat)), chi.basis);
}

}  // namespace stare
