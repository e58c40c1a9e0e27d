#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace bclm {

inline constexpr const char* kToolVersion = "0.1.0";

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NonHermitianInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidRank : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Denominator B of the bound fell below delta_B: every state is (numerically)
// orthogonal to the reference and the ratio A/B carries no information.
struct DegenerateDenominator : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SdpFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AllRestartsFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace bclm
