#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace evanslab {

using cplx = std::complex<double>;

constexpr double kNearBorderMargin = 1e-9;
constexpr double kDefaultBlowUpNorm = 1e8;

/// A spatial eigenvalue sits within the margin of the imaginary axis, so the
/// spectral parameter must be treated as lying on a Fredholm border.
class NearBorderError : public std::runtime_error {
public:
  explicit NearBorderError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A far-field matrix has a repeated eigenvalue without a full eigenvector set.
class DefectiveMatrixError : public std::runtime_error {
public:
  explicit DefectiveMatrixError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Step size underflow in the adaptive integrator.
class StiffnessError : public std::runtime_error {
public:
  StiffnessError(const std::string& msg, double last_z)
      : std::runtime_error(msg + " (last accepted z=" + std::to_string(last_z) + ")"),
        last_z_(last_z) {}
  double last_z() const { return last_z_; }

private:
  double last_z_;
};

/// A zero or pole of the sampled function lies on (or too close to) a contour.
class OnContourError : public std::runtime_error {
public:
  explicit OnContourError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Consecutive phase samples jump by pi or more.
class InsufficientSamplingError : public std::runtime_error {
public:
  explicit InsufficientSamplingError(const std::string& msg) : std::runtime_error(msg) {}
};

inline bool is_finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace evanslab
