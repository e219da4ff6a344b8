#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "evanslab/types.hpp"

namespace evanslab {

enum class Termination { ReachedEndpoint, BlowUp };

/// Sampled solution of a complex-valued ODE. `samples` holds the accepted
/// steps in order; z is strictly monotone along them.
struct Trajectory {
  struct Sample {
    double z;
    Eigen::VectorXcd state;
  };
  std::vector<Sample> samples;
  Termination termination = Termination::ReachedEndpoint;
  double z_blow = 0.0;  // valid when termination == BlowUp

  const Eigen::VectorXcd& final_state() const { return samples.back().state; }
  double final_z() const { return samples.back().z; }
};

struct IntegrateOptions {
  double rtol = 1e-10;
  double atol = 1e-12;
  double blow_up_norm = kDefaultBlowUpNorm;
  long max_steps = 2'000'000;
  bool record_samples = true;  // always records first/last either way
};

using OdeField = std::function<Eigen::VectorXcd(double, const Eigen::VectorXcd&)>;

/// Adaptive Dormand-Prince 5(4) integration from z_from to z_to (either
/// direction). Terminates early with a blow-up record once the state norm
/// exceeds blow_up_norm; step underflow raises StiffnessError.
inline Trajectory integrate(const OdeField& f, Eigen::VectorXcd y0, double z_from, double z_to,
                            const IntegrateOptions& opt = {}) {
  if (z_from == z_to) throw std::invalid_argument("integrate: z_from == z_to");
  if (opt.rtol <= 0 || opt.atol <= 0) throw std::invalid_argument("integrate: tolerances must be positive");

  static const double A[7][6] = {
      {},
      {1.0 / 5},
      {3.0 / 40, 9.0 / 40},
      {44.0 / 45, -56.0 / 15, 32.0 / 9},
      {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
      {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
      {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84}};
  static const double C[7] = {0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
  static const double B5[7] = {35.0 / 384, 0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84, 0};
  static const double B4[7] = {5179.0 / 57600, 0,           7571.0 / 16695, 393.0 / 640,
                               -92097.0 / 339200, 187.0 / 2100, 1.0 / 40};

  const double dir = (z_to > z_from) ? 1.0 : -1.0;
  const double span = std::abs(z_to - z_from);
  double z = z_from;
  Eigen::VectorXcd y = std::move(y0);
  double h = dir * std::min(span, std::max(1e-6, span / 100.0));

  Trajectory traj;
  traj.samples.push_back({z, y});

  std::array<Eigen::VectorXcd, 7> k;
  long steps = 0;
  while (dir * (z_to - z) > 0.0) {
    if (++steps > opt.max_steps) throw StiffnessError("integrate: step budget exhausted", z);
    if (std::abs(h) > std::abs(z_to - z)) h = z_to - z;

    bool stage_ok = true;
    k[0] = f(z, y);
    if (!k[0].allFinite()) stage_ok = false;
    Eigen::VectorXcd yt;
    for (int s = 1; s < 7 && stage_ok; ++s) {
      yt = y;
      for (int j = 0; j < s; ++j)
        if (A[s][j] != 0.0) yt += h * A[s][j] * k[j];
      k[s] = f(z + C[s] * h, yt);
      if (!k[s].allFinite()) stage_ok = false;
    }

    double err = 0.0;
    Eigen::VectorXcd y5;
    if (stage_ok) {
      y5 = y;
      Eigen::VectorXcd y4 = y;
      for (int s = 0; s < 7; ++s) {
        if (B5[s] != 0.0) y5 += h * B5[s] * k[s];
        if (B4[s] != 0.0) y4 += h * B4[s] * k[s];
      }
      if (!y5.allFinite()) {
        stage_ok = false;
      } else {
        for (int i = 0; i < y.size(); ++i) {
          double sc = opt.atol + opt.rtol * std::max(std::abs(y[i]), std::abs(y5[i]));
          double e = std::abs(y5[i] - y4[i]) / sc;
          err += e * e;
        }
        err = std::sqrt(err / double(y.size()));
      }
    }

    if (stage_ok && err <= 1.0) {
      z += h;
      y = std::move(y5);
      if (opt.record_samples)
        traj.samples.push_back({z, y});
      else
        traj.samples.back() = {z, y};
      if (y.norm() > opt.blow_up_norm) {
        traj.termination = Termination::BlowUp;
        traj.z_blow = z;
        return traj;
      }
      double fac = (err == 0.0) ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
      h *= fac;
    } else {
      double fac = stage_ok ? std::clamp(0.9 * std::pow(err, -0.2), 0.1, 0.5) : 0.25;
      h *= fac;
      if (std::abs(h) < 1e-14 * std::max(1.0, std::abs(z))) {
        // Persistent rejection: either a genuine singularity being approached
        // with a large state (blow-up), or a stiff/singular point.
        if (y.norm() > 1e-2 * opt.blow_up_norm) {
          traj.termination = Termination::BlowUp;
          traj.z_blow = z;
          return traj;
        }
        throw StiffnessError("integrate: step size underflow (stiff/singular)", z);
      }
    }
  }
  traj.termination = Termination::ReachedEndpoint;
  return traj;
}

}  // namespace evanslab
