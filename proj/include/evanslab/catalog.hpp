#pragma once

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "evanslab/reaction.hpp"
#include "evanslab/wave_profile.hpp"

namespace evanslab {

struct CatalogEntry {
  ReactionTerm reaction;
  WaveProfile profile;
};

namespace detail {

inline double get_param(const std::map<std::string, double>& p, const std::string& name, double def) {
  auto it = p.find(name);
  return it == p.end() ? def : it->second;
}

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument("catalog: " + msg);
}

inline double sech(double z) { return 1.0 / std::cosh(z); }

}  // namespace detail

/// Example 6 wave speed from its closed form c(delta, gamma).
inline double example6_speed(double delta, double gamma) {
  return (std::sqrt(delta) * (1.0 - 2.0 * gamma) +
          std::sqrt(delta * (1.0 - 2.0 * gamma) * (1.0 - 2.0 * gamma) + 8.0)) /
         (2.0 * std::sqrt(2.0));
}

/// The catalog of exact wave solutions (ids 1..10). Parameters outside the
/// admissible ranges raise std::invalid_argument.
///
/// Recognised parameters: D, c, gamma, delta, beta, L (piecewise half-width).
inline CatalogEntry catalog(int id, const std::map<std::string, double>& params = {}) {
  using detail::get_param;
  using detail::require;
  using detail::sech;

  CatalogEntry e;
  ReactionTerm& rt = e.reaction;
  WaveProfile& wp = e.profile;
  wp.example_id = id;

  switch (id) {
    case 1:
    case 7: {
      // g = -u(4-6v); stationary pulse u = -D sech^2(z+beta), v = sech^2(z+beta).
      double D = get_param(params, "D", id == 1 ? 1.0 : 0.5);
      double beta = get_param(params, "beta", 0.0);
      require(D > 0, "example 1/7 requires D > 0");
      if (id == 1) require(get_param(params, "D", 1.0) == 1.0 || true, "");
      rt.add(1, 0, -4.0);
      rt.add(1, 1, 6.0);
      rt.parameters = {{"D", D}, {"beta", beta}, {"c", 0.0}};
      wp.kind = ProfileKind::ClosedForm;
      wp.c = 0.0;
      wp.D = D;
      wp.u = [D, beta](double z) { return -D * sech(z + beta) * sech(z + beta); };
      wp.v = [beta](double z) { return sech(z + beta) * sech(z + beta); };
      wp.du = [D, beta](double z) {
        double s = sech(z + beta);
        return 2.0 * D * s * s * std::tanh(z + beta);
      };
      wp.dv = [beta](double z) {
        double s = sech(z + beta);
        return -2.0 * s * s * std::tanh(z + beta);
      };
      wp.u_minus = wp.u_plus = 0.0;
      wp.v_minus = wp.v_plus = 0.0;
      break;
    }
    case 2:
    case 8: {
      // g = 2u(1-v^2); stationary front u = -D tanh z, v = tanh z.
      double D = get_param(params, "D", id == 2 ? 1.0 : 1.5);
      require(D > 0, "example 2/8 requires D > 0");
      rt.add(1, 0, 2.0);
      rt.add(1, 2, -2.0);
      rt.parameters = {{"D", D}, {"c", 0.0}};
      wp.kind = ProfileKind::ClosedForm;
      wp.c = 0.0;
      wp.D = D;
      wp.u = [D](double z) { return -D * std::tanh(z); };
      wp.v = [](double z) { return std::tanh(z); };
      wp.du = [D](double z) {
        double s = sech(z);
        return -D * s * s;
      };
      wp.dv = [](double z) {
        double s = sech(z);
        return s * s;
      };
      wp.u_minus = D;
      wp.v_minus = -1.0;
      wp.u_plus = -D;
      wp.v_plus = 1.0;
      break;
    }
    case 3:
    case 4: {
      // g = v(v-gamma)(v-1) - u; piecewise stationary pulse (3) / front (4).
      double gamma = get_param(params, "gamma", 0.3);
      require(gamma > 0 && gamma < 1, "example 3/4 requires 0 < gamma < 1");
      rt.add(1, 0, -1.0);
      rt.add(0, 3, 1.0);
      rt.add(0, 2, -(1.0 + gamma));
      rt.add(0, 1, gamma);
      rt.parameters = {{"gamma", gamma}, {"D", 0.0}, {"c", 0.0}};
      wp.kind = ProfileKind::PiecewiseConstant;
      wp.c = 0.0;
      wp.D = 0.0;
      wp.u_const = 0.0;
      if (id == 3) {
        double half = get_param(params, "L", 2.0);
        require(half > 0, "example 3 requires L > 0");
        rt.parameters["L"] = half;
        wp.jumps = {-half, half};
        wp.piece_values = {0.0, 1.0, 0.0};
        wp.v_minus = wp.v_plus = 0.0;
      } else {
        wp.jumps = {0.0};
        wp.piece_values = {0.0, 1.0};
        wp.v_minus = 0.0;
        wp.v_plus = 1.0;
      }
      wp.u_minus = wp.u_plus = 0.0;
      break;
    }
    case 5: {
      // g = 8u^3 - 6u^2 + c^2(u+v); nonstationary pulse, D = 0.
      double c = get_param(params, "c", 1.0);
      require(c > 0, "example 5 requires c > 0");
      rt.add(3, 0, 8.0);
      rt.add(2, 0, -6.0);
      rt.add(1, 0, c * c);
      rt.add(0, 1, c * c);
      rt.parameters = {{"c", c}, {"D", 0.0}};
      wp.kind = ProfileKind::ClosedForm;
      wp.c = c;
      wp.D = 0.0;
      wp.u = [](double z) { return 1.0 / (1.0 + z * z); };
      wp.du = [](double z) {
        double w = 1.0 + z * z;
        return -2.0 * z / (w * w);
      };
      wp.v = [c](double z) {
        double w = 1.0 + z * z;
        return (-c * z * z + 2.0 * z - c) / (c * w * w);
      };
      wp.dv = [c](double z) {
        double w = 1.0 + z * z;
        double N = -c * z * z + 2.0 * z - c;
        double Np = -2.0 * c * z + 2.0;
        return (Np * w - 4.0 * z * N) / (c * w * w * w);
      };
      wp.u_minus = wp.u_plus = 0.0;
      wp.v_minus = wp.v_plus = 0.0;
      break;
    }
    case 6: {
      // g = (u+v) - delta*u(u+gamma)(u+1); nonstationary front, D = 0,
      // with the wave speed fixed by (delta, gamma).
      double delta = get_param(params, "delta", 1.0);
      double gamma = get_param(params, "gamma", 0.75);
      require(delta > 0, "example 6 requires delta > 0");
      require(gamma > 0 && gamma < 1, "example 6 requires 0 < gamma < 1");
      double c = example6_speed(delta, gamma);
      rt.add(1, 0, 1.0 - delta * gamma);
      rt.add(0, 1, 1.0);
      rt.add(3, 0, -delta);
      rt.add(2, 0, -delta * (1.0 + gamma));
      rt.parameters = {{"delta", delta}, {"gamma", gamma}, {"c", c}, {"D", 0.0}};
      wp.kind = ProfileKind::ClosedForm;
      wp.c = c;
      wp.D = 0.0;
      double a = std::sqrt(delta / 8.0);
      auto uf = [a](double z) { return -0.5 + 0.5 * std::tanh(a * z); };
      auto duf = [a](double z) {
        double s = sech(a * z);
        return 0.5 * a * s * s;
      };
      auto dduf = [a](double z) {
        double s = sech(a * z);
        return -a * a * s * s * std::tanh(a * z);
      };
      wp.u = uf;
      wp.du = duf;
      wp.v = [c, uf, duf](double z) { return -duf(z) / c - uf(z); };
      wp.dv = [c, duf, dduf](double z) { return -dduf(z) / c - duf(z); };
      wp.u_minus = -1.0;
      wp.v_minus = 1.0;
      wp.u_plus = 0.0;
      wp.v_plus = 0.0;
      break;
    }
    case 9: {
      // g = 6(u^2 - D^2 v^2) + ((c^2-4)u + (c^2-4D^2)v)/(1-D); nonstationary pulse.
      double D = get_param(params, "D", 0.5);
      double c = get_param(params, "c", 1.5);
      require(D > 0 && D != 1.0, "example 9 requires D > 0, D != 1");
      require(c > 0, "example 9 requires c > 0");
      rt.add(2, 0, 6.0);
      rt.add(0, 2, -6.0 * D * D);
      rt.add(1, 0, (c * c - 4.0) / (1.0 - D));
      rt.add(0, 1, (c * c - 4.0 * D * D) / (1.0 - D));
      rt.parameters = {{"D", D}, {"c", c}};
      wp.kind = ProfileKind::ClosedForm;
      wp.c = c;
      wp.D = D;
      double s0 = c * (1.0 - D);
      wp.u = [D, c, s0](double z) {
        double s = sech(z);
        return -s * s * (2.0 * D * std::tanh(z) - c) / s0;
      };
      wp.du = [D, c, s0](double z) {
        double s = sech(z), t = std::tanh(z);
        return -s * s * (2.0 * D * s * s - 2.0 * t * (2.0 * D * t - c)) / s0;
      };
      wp.v = [c, s0](double z) {
        double s = sech(z);
        return s * s * (2.0 * std::tanh(z) - c) / s0;
      };
      wp.dv = [c, s0](double z) {
        double s = sech(z), t = std::tanh(z);
        return s * s * (2.0 * s * s - 2.0 * t * (2.0 * t - c)) / s0;
      };
      wp.u_minus = wp.u_plus = 0.0;
      wp.v_minus = wp.v_plus = 0.0;
      break;
    }
    case 10: {
      // g = (u+v)(4Du^2 + 4D^3 v^2 + 8D^2 uv - 2cu - 2cD^2 v + c^2)/(1-D);
      // nonstationary front.
      double D = get_param(params, "D", 0.3);
      double c = get_param(params, "c", 0.3);
      require(D > 0 && D != 1.0, "example 10 requires D > 0, D != 1");
      require(c > 0, "example 10 requires c > 0");
      double w = 1.0 / (1.0 - D);
      rt.add(3, 0, 4.0 * D * w);
      rt.add(2, 1, (8.0 * D * D + 4.0 * D) * w);
      rt.add(1, 2, (4.0 * D * D * D + 8.0 * D * D) * w);
      rt.add(0, 3, 4.0 * D * D * D * w);
      rt.add(2, 0, -2.0 * c * w);
      rt.add(1, 1, (-2.0 * c * D * D - 2.0 * c) * w);
      rt.add(0, 2, -2.0 * c * D * D * w);
      rt.add(1, 0, c * c * w);
      rt.add(0, 1, c * c * w);
      rt.parameters = {{"D", D}, {"c", c}};
      wp.kind = ProfileKind::ClosedForm;
      wp.c = c;
      wp.D = D;
      double s0 = c * (D - 1.0);
      wp.u = [D, c, s0](double z) {
        double t = std::tanh(z);
        return (D * t * t - c * t - D) / s0;
      };
      wp.du = [D, c, s0](double z) {
        double t = std::tanh(z), s = sech(z);
        return (2.0 * D * t - c) * s * s / s0;
      };
      wp.v = [c, s0](double z) {
        double t = std::tanh(z);
        return -(t * t - c * t - 1.0) / s0;
      };
      wp.dv = [c, s0](double z) {
        double t = std::tanh(z), s = sech(z);
        return -(2.0 * t - c) * s * s / s0;
      };
      wp.u_minus = 1.0 / (D - 1.0);
      wp.v_minus = -1.0 / (D - 1.0);
      wp.u_plus = -1.0 / (D - 1.0);
      wp.v_plus = 1.0 / (D - 1.0);
      break;
    }
    default:
      throw std::invalid_argument("catalog: unknown example id " + std::to_string(id));
  }

  // No nonstationary pulses exist at equal diffusivities; reject any attempt
  // to construct one.
  if (wp.shape() == WaveShape::Pulse && wp.D == 1.0 && wp.c != 0.0)
    throw std::invalid_argument("catalog: no nonstationary pulse exists for D = 1");

  return e;
}

/// Sup-norm residual of the travelling-wave system over the grid, with second
/// derivatives formed by central differences of the supplied first
/// derivatives (h = 1e-5). Only meaningful for closed-form profiles.
inline double residual(const ReactionTerm& rt, const WaveProfile& wp, const std::vector<double>& grid) {
  if (wp.kind != ProfileKind::ClosedForm)
    throw std::invalid_argument("residual: piecewise profile (residual meaningless across jumps)");
  const double h = 1e-5;
  double worst = 0.0;
  for (double z : grid) {
    double ddu = (wp.du(z + h) - wp.du(z - h)) / (2.0 * h);
    double ddv = (wp.dv(z + h) - wp.dv(z - h)) / (2.0 * h);
    double g = rt.g(wp.u(z), wp.v(z));
    double r1 = ddu + wp.c * wp.du(z) + g;
    double r2 = wp.D * ddv + wp.c * wp.dv(z) - g;
    worst = std::max(worst, std::max(std::abs(r1), std::abs(r2)));
  }
  return worst;
}

/// Far-field g_u, g_v evaluated analytically at the stored rest states.
inline FarFieldData far_field(const ReactionTerm& rt, const WaveProfile& wp) {
  FarFieldData f;
  f.gu_plus = rt.gu(wp.u_plus, wp.v_plus);
  f.gv_plus = rt.gv(wp.u_plus, wp.v_plus);
  f.gu_minus = rt.gu(wp.u_minus, wp.v_minus);
  f.gv_minus = rt.gv(wp.u_minus, wp.v_minus);
  return f;
}

/// A piecewise profile is admissible iff every piece value is a rest state:
/// g(u_-, v_k) = 0 for all pieces (u is the constant u_-).
inline bool validate_piecewise(const ReactionTerm& rt, const WaveProfile& wp) {
  if (wp.kind != ProfileKind::PiecewiseConstant)
    throw std::invalid_argument("validate_piecewise: closed-form profile");
  for (double vk : wp.piece_values)
    if (std::abs(rt.g(wp.u_const, vk)) >= 1e-12) return false;
  return true;
}

/// Number of sign changes of v'(z) over the grid. For D = 1 this is the
/// Sturm-Liouville instability predictor: 0 means a stable (monotone) front,
/// anything else an unstable wave.
inline int zero_count_vprime(const WaveProfile& wp, const std::vector<double>& grid) {
  if (wp.kind != ProfileKind::ClosedForm)
    throw std::invalid_argument("zero_count_vprime: closed-form profiles only");
  int count = 0;
  double prev = 0.0;
  bool have_prev = false;
  for (double z : grid) {
    double d = wp.dv(z);
    if (d == 0.0) continue;
    if (have_prev && prev * d < 0.0) ++count;
    prev = d;
    have_prev = true;
  }
  return count;
}

}  // namespace evanslab
