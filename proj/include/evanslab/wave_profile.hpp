#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace evanslab {

enum class ProfileKind { ClosedForm, PiecewiseConstant };
enum class WaveShape { Pulse, Front };

/// A travelling- or stationary-wave profile (u,v)(z) together with its speed,
/// diffusivity and far-field rest states. Closed-form entries carry exact
/// evaluators for the profile and its first derivatives; piecewise entries
/// carry the jump positions and per-piece constant v values (u is constant),
/// with pieces read as half-open intervals [z_k, z_{k+1}).
struct WaveProfile {
  ProfileKind kind = ProfileKind::ClosedForm;
  double c = 0.0;
  double D = 1.0;
  int example_id = 0;  // catalog id when built from the catalog, else 0

  std::function<double(double)> u, v, du, dv;

  double u_minus = 0, v_minus = 0, u_plus = 0, v_plus = 0;

  // piecewise data
  std::vector<double> jumps;         // ascending
  std::vector<double> piece_values;  // size jumps.size()+1
  double u_const = 0.0;

  WaveShape shape() const {
    return (u_minus == u_plus && v_minus == v_plus) ? WaveShape::Pulse : WaveShape::Front;
  }

  /// v at z for piecewise profiles.
  double piece_value_at(double z) const {
    size_t k = 0;
    while (k < jumps.size() && z >= jumps[k]) ++k;
    return piece_values[k];
  }

  double u_at(double z) const { return kind == ProfileKind::ClosedForm ? u(z) : u_const; }
  double v_at(double z) const { return kind == ProfileKind::ClosedForm ? v(z) : piece_value_at(z); }
};

/// Far-field limits of g_u and g_v along the wave.
struct FarFieldData {
  double gu_plus = 0, gv_plus = 0, gu_minus = 0, gv_minus = 0;

  double gu(int side) const { return side >= 0 ? gu_plus : gu_minus; }
  double gv(int side) const { return side >= 0 ? gv_plus : gv_minus; }
};

}  // namespace evanslab
