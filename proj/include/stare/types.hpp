#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace stare {

using complexd = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Vec2 = Eigen::Vector2cd;
using MatX = Eigen::MatrixXcd;

inline constexpr complexd i_unit{0.0, 1.0};

// Invalid physical or schedule parameters (a <= 0, b < 0, d_f <= d_i, ...).
struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Matrix dimension other than the supported 2x2 / 4x4.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A numerical procedure failed to converge to its requested tolerance.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Step-size underflow during integration; carries the last accepted state.
struct StiffnessError : NumericError {
  StiffnessError(const std::string& what, double t, MatX state)
      : NumericError(what), last_time(t), last_state(std::move(state)) {}
  double last_time;
  MatX last_state;
};

}  // namespace stare
