#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "evanslab/spectral_problem.hpp"
#include "evanslab/types.hpp"
#include "evanslab/wave_profile.hpp"

namespace evanslab {

/// Discriminant of the Fredholm-border quadratic in (lambda - ikc), in its two
/// algebraic forms; the forms agree to rounding and the mismatch is exposed
/// for testing.
struct DeltaForms {
  double quadratic;  // [(D+1)k^2 + gv - gu]^2 - 4 k^2 [D k^2 + gv - D gu]
  double shifted;    // [(D-1)k^2 + gv + gu]^2 - 4 gv gu
};

inline DeltaForms delta_forms(double k2, double gu, double gv, double D) {
  if (k2 < 0) throw std::invalid_argument("delta_forms: k^2 must be >= 0");
  DeltaForms f;
  double B = (D + 1.0) * k2 + gv - gu;
  f.quadratic = B * B - 4.0 * k2 * (D * k2 + gv - D * gu);
  double S = (D - 1.0) * k2 + gv + gu;
  f.shifted = S * S - 4.0 * gv * gu;
  return f;
}

inline double delta(double k2, double gu, double gv, double D) {
  return delta_forms(k2, gu, gv, D).quadratic;
}

/// One branch of the Fredholm border lambda_{+/-}(k) at one far-field state.
struct BorderCurve {
  int branch = +1;  // sign in front of sqrt(Delta)
  int side = +1;    // +1: z -> +inf, -1: z -> -inf
  std::vector<double> k;
  std::vector<cplx> lambda;
};

/// Border point lambda_branch(k):
///   lambda = ikc + ( -[(D+1)k^2 + gv - gu] +/- sqrt(Delta) ) / 2,
/// with sqrt(Delta) = i sqrt(-Delta) when Delta < 0 (so Re lambda =
/// (-(D+1)k^2 - gv + gu)/2 and Im lambda = (2kc +/- sqrt(-Delta))/2 there).
inline cplx border_lambda(double k, double gu, double gv, double D, double c, int branch) {
  double k2 = k * k;
  double B = (D + 1.0) * k2 + gv - gu;
  double d = delta(k2, gu, gv, D);
  cplx sq = d >= 0.0 ? cplx(std::sqrt(d), 0.0) : cplx(0.0, std::sqrt(-d));
  return cplx(0.0, k * c) + (-B + double(branch) * sq) / 2.0;
}

/// Residual of a border sample in the dispersion relation
///   (lambda - ikc)^2 + [(D+1)k^2 + gv - gu](lambda - ikc)
///     + k^2 [D k^2 + gv - D gu] = 0.
inline double border_residual(cplx lambda, double k, double gu, double gv, double D, double c) {
  cplx m = lambda - cplx(0.0, k * c);
  double k2 = k * k;
  cplx r = m * m + ((D + 1.0) * k2 + gv - gu) * m + k2 * (D * k2 + gv - D * gu);
  return std::abs(r);
}

/// Default k-grid half-width: covers both Delta<0 windows with margin.
inline double default_k_max(double gu, double gv, double D) {
  double m = std::max(std::sqrt(std::abs(gu)), std::sqrt(std::abs(gv)));
  return 3.0 * (1.0 + m) / std::sqrt(std::max(1.0 - D, 0.05));
}

/// Both branches of the Fredholm border at one far-field state, sampled on a
/// uniform k-grid over [-k_max, k_max].
inline std::vector<BorderCurve> border_curves(const FarFieldData& far, double D, double c, int side,
                                              double k_max, int n = 2001) {
  if (n < 2) throw std::invalid_argument("border_curves: need n >= 2");
  double gu = far.gu(side), gv = far.gv(side);
  std::vector<BorderCurve> out(2);
  for (int b = 0; b < 2; ++b) {
    out[b].branch = b == 0 ? +1 : -1;
    out[b].side = side;
    out[b].k.reserve(n);
    out[b].lambda.reserve(n);
    for (int i = 0; i < n; ++i) {
      double k = -k_max + 2.0 * k_max * double(i) / double(n - 1);
      out[b].k.push_back(k);
      out[b].lambda.push_back(border_lambda(k, gu, gv, D, c, out[b].branch));
    }
  }
  return out;
}

enum class BorderClass { Stable, DirectInstability, TuringInstability, Both };

struct BorderStability {
  BorderClass cls = BorderClass::Stable;
  bool marginal = false;  // an equality holds in the classification inequalities
};

/// Far-field stability of the essential spectrum: stable iff gv > gu (no
/// direct instability at k=0) and gv > D gu (no Turing instability).
inline BorderStability border_stability(const FarFieldData& far, double D, int side) {
  double gu = far.gu(side), gv = far.gv(side);
  // Tolerant comparisons: catalog far fields can satisfy an equality exactly
  // up to rounding, and the marginal case must not flip to unstable.
  double eps = 1e-10 * std::max({1.0, std::abs(gu), std::abs(gv)});
  bool direct = gv < gu - eps;
  bool turing = gv < D * gu - eps;
  BorderStability r;
  r.marginal = (std::abs(gv - gu) <= eps) || (std::abs(gv - D * gu) <= eps);
  if (direct && turing)
    r.cls = BorderClass::Both;
  else if (direct)
    r.cls = BorderClass::DirectInstability;
  else if (turing)
    r.cls = BorderClass::TuringInstability;
  else
    r.cls = BorderClass::Stable;
  return r;
}

/// k^2 values at which Re lambda can have a stationary point along a border:
/// always k=0, plus the real positive roots of
///   k^2 = (gv + gu)/(1-D) +/- ((1+D)/(1-D)) sqrt(gv gu / D).
/// For 0<D<1 with gu<0, gv<0 the factorised form is used; a positive k^2
/// exists iff D gu > gv > gu / D. No k != 0 stationary points when gv gu < 0.
inline std::vector<double> stationary_k(const FarFieldData& far, double D, int side) {
  if (D == 1.0) throw std::invalid_argument("stationary_k: requires D != 1");
  double gu = far.gu(side), gv = far.gv(side);
  std::vector<double> k2s{0.0};
  if (gu * gv < 0.0 || D <= 0.0) return k2s;  // sqrt(gv gu / D) imaginary or D=0 limit
  if (0.0 < D && D < 1.0 && gu < 0.0 && gv < 0.0) {
    double sD = std::sqrt(D), su = std::sqrt(-gu), sv = std::sqrt(-gv);
    for (double s : {+1.0, -1.0}) {
      double k2 = -((sD * sv + s * su) * (sv + s * sD * su)) / ((1.0 - D) * sD);
      if (k2 > 0.0) k2s.push_back(k2);
    }
    return k2s;
  }
  double base = (gv + gu) / (1.0 - D);
  double spread = (1.0 + D) / (1.0 - D) * std::sqrt(gv * gu / D);
  for (double s : {+1.0, -1.0}) {
    double k2 = base + s * spread;
    if (k2 > 0.0) k2s.push_back(k2);
  }
  return k2s;
}

/// Essential spectrum of a stationary wave (c=0) at one far-field state: the
/// real ray (-inf, max(0, gu - gv)] plus, when Delta goes negative (which
/// requires gu > 0 and gv > 0, D < 1), a closed oval traced parametrically
/// from the border formulas over the k-window where Delta < 0.
struct C0Spectrum {
  double ray_max = 0.0;  // ray is (-inf, ray_max]
  bool has_ellipse = false;
  std::vector<cplx> ellipse;  // closed parametric trace (both branches)
};

inline C0Spectrum c0_spectrum(const FarFieldData& far, double D, int side, int n = 512) {
  double gu = far.gu(side), gv = far.gv(side);
  C0Spectrum s;
  s.ray_max = std::max(0.0, gu - gv);
  if (!(gu > 0.0 && gv > 0.0 && D < 1.0)) return s;
  double lo = std::abs(std::sqrt(gv) - std::sqrt(gu)) / std::sqrt(1.0 - D);
  double hi = (std::sqrt(gv) + std::sqrt(gu)) / std::sqrt(1.0 - D);
  if (!(hi > lo)) return s;
  s.has_ellipse = true;
  // Upper branch left to right, then lower branch back: a closed trace.
  for (int i = 0; i <= n; ++i) {
    double k = lo + (hi - lo) * double(i) / double(n);
    s.ellipse.push_back(border_lambda(k, gu, gv, D, 0.0, +1));
  }
  for (int i = n; i >= 0; --i) {
    double k = lo + (hi - lo) * double(i) / double(n);
    s.ellipse.push_back(border_lambda(k, gu, gv, D, 0.0, -1));
  }
  return s;
}

/// Fredholm-index classification of a lambda grid: per point, the number of
/// spatial eigenvalues with Re nu > 0 at each far field; index = count at
/// -inf minus count at +inf. Points within the near-border margin are flagged
/// and not counted.
struct RegionMap {
  std::vector<cplx> lambda;
  std::vector<int> count_plus, count_minus, index;
  std::vector<bool> on_border;

  bool in_essential_spectrum(size_t i) const { return on_border[i] || index[i] != 0; }
};

inline RegionMap region_map(const SpectralProblem& sp, const std::vector<cplx>& grid) {
  RegionMap m;
  m.lambda = grid;
  for (cplx lam : grid) {
    try {
      int cp = count_roots_positive_real(sp.char_poly_far(+1, lam));
      int cm = count_roots_positive_real(sp.char_poly_far(-1, lam));
      m.count_plus.push_back(cp);
      m.count_minus.push_back(cm);
      m.index.push_back(cm - cp);
      m.on_border.push_back(false);
    } catch (const NearBorderError&) {
      m.count_plus.push_back(-1);
      m.count_minus.push_back(-1);
      m.index.push_back(0);
      m.on_border.push_back(true);
    }
  }
  return m;
}

}  // namespace evanslab
