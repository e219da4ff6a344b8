#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "evanslab/types.hpp"

namespace evanslab {

struct WindingResult {
  int winding = 0;
  double residual = 0.0;  // |raw phase change / 2pi - winding|
};

/// Winding number of a closed path of nonzero samples. The path is treated as
/// cyclic; a duplicated endpoint is tolerated. Near-zero samples raise
/// OnContourError, phase jumps of pi or more raise InsufficientSamplingError.
inline WindingResult winding_number(std::vector<cplx> samples) {
  if (samples.size() >= 2 && samples.front() == samples.back()) samples.pop_back();
  if (samples.size() < 3) throw std::invalid_argument("winding_number: need at least 3 samples");

  double mmax = 0.0;
  for (cplx s : samples) {
    if (!is_finite(s)) throw OnContourError("winding_number: non-finite sample");
    mmax = std::max(mmax, std::abs(s));
  }
  if (mmax == 0.0) throw OnContourError("winding_number: root/pole on contour");
  for (cplx s : samples)
    if (std::abs(s) < 1e-12 * mmax) throw OnContourError("winding_number: root/pole on contour");

  double total = 0.0;
  const size_t n = samples.size();
  for (size_t i = 0; i < n; ++i) {
    cplx a = samples[i], b = samples[(i + 1) % n];
    double d = std::arg(b / a);
    if (std::abs(d) >= std::numbers::pi - 1e-9)
      throw InsufficientSamplingError("winding_number: phase jump >= pi between samples");
    total += d;
  }
  double raw = total / (2.0 * std::numbers::pi);
  WindingResult r;
  r.winding = static_cast<int>(std::lround(raw));
  r.residual = std::abs(raw - double(r.winding));
  return r;
}

}  // namespace evanslab
