#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "evanslab/reaction.hpp"
#include "evanslab/types.hpp"
#include "evanslab/wave_profile.hpp"

namespace evanslab {

// ---------------------------------------------------------------------------
// D = 1 scalar reduction
// ---------------------------------------------------------------------------

/// Equal-diffusivity reduction: with u = -v the system collapses to the
/// scalar wave equation v'' + c v' - G(v) = 0 with G(v) = g(-v, v).
/// Coefficients are exact (g is polynomial), so G' and H(v) = int_0^v G are
/// exact too.
struct ScalarReduction {
  std::vector<double> coeffs;  // ascending coefficients of G
  double c = 0.0;

  static ScalarReduction from(const ReactionTerm& rt, double wavespeed) {
    ScalarReduction sr;
    sr.coeffs = rt.scalar_reduction_coeffs();
    sr.c = wavespeed;
    return sr;
  }

  double G(double v) const {
    double s = 0.0;
    for (int i = int(coeffs.size()) - 1; i >= 0; --i) s = s * v + coeffs[i];
    return s;
  }

  double Gp(double v) const {
    double s = 0.0;
    for (int i = int(coeffs.size()) - 1; i >= 1; --i) s = s * v + i * coeffs[i];
    return s;
  }

  /// Potential H(v) = int_0^v G.
  double H(double v) const {
    double s = 0.0;
    for (int i = int(coeffs.size()) - 1; i >= 0; --i) s = s * v + coeffs[i] / double(i + 1);
    return s * v;
  }
};

/// Closed-form Evans function of Example 1 (D = 1 pulse):
///   F(lambda) = 4 (lambda-5) lambda^{3/2} (lambda+3) sqrt(lambda+4),
/// principal branch. The branch cut (-inf, 0] is excluded.
inline cplx evans_example1(cplx lambda) {
  if (lambda.imag() == 0.0 && lambda.real() <= 0.0)
    throw std::domain_error("evans_example1: lambda on the branch cut (-inf, 0]");
  return 4.0 * (lambda - 5.0) * lambda * std::sqrt(lambda) * (lambda + 3.0) * std::sqrt(lambda + 4.0);
}

/// Exact point spectrum of the D=1 closed-form examples, with embedded flags
/// for eigenvalues lying inside the continuous spectrum (-inf, 0].
struct D1Spectrum {
  std::vector<double> eigenvalues;
  std::vector<bool> embedded;
};

inline D1Spectrum d1_point_spectrum(int example_id) {
  if (example_id == 1) return {{5.0, 0.0, -3.0}, {false, true, true}};
  if (example_id == 2) return {{0.0, -3.0}, {true, true}};
  throw std::invalid_argument("d1_point_spectrum: closed forms exist only for examples 1 and 2");
}

// ---------------------------------------------------------------------------
// D = c = 0 piecewise pencil
// ---------------------------------------------------------------------------

/// Quadratic operator pencil from a piecewise-constant wave at D = c = 0:
/// on each piece the eigenvalue problem reduces to p'' + a_k(lambda) p = 0
/// with a_k = g_u - g_u g_v/(lambda + g_v) - lambda. The first and last
/// pieces are unbounded (far fields).
struct PencilPiece {
  double z_lo, z_hi;  // +-infinity on the outer pieces
  double gu, gv;
};

struct PencilProblem {
  std::vector<PencilPiece> pieces;

  static PencilProblem from_profile(const ReactionTerm& rt, const WaveProfile& wp) {
    if (wp.kind != ProfileKind::PiecewiseConstant)
      throw std::invalid_argument("PencilProblem: requires a piecewise-constant profile");
    if (wp.D != 0.0 || wp.c != 0.0)
      throw std::invalid_argument("PencilProblem: requires D = 0 and c = 0");
    const double inf = std::numeric_limits<double>::infinity();
    PencilProblem pp;
    for (size_t k = 0; k < wp.piece_values.size(); ++k) {
      PencilPiece pc;
      pc.z_lo = k == 0 ? -inf : wp.jumps[k - 1];
      pc.z_hi = k == wp.jumps.size() ? inf : wp.jumps[k];
      pc.gu = rt.gu(wp.u_const, wp.piece_values[k]);
      pc.gv = rt.gv(wp.u_const, wp.piece_values[k]);
      pp.pieces.push_back(pc);
    }
    return pp;
  }

  /// Effective potential coefficient a_k(lambda) on piece k.
  cplx coeff(size_t k, cplx lambda) const {
    const PencilPiece& pc = pieces.at(k);
    if (lambda == cplx(-pc.gv, 0.0))
      throw std::domain_error("pencil_reduce: lambda = -g_v is a pole of the pencil");
    return pc.gu - pc.gu * pc.gv / (lambda + pc.gv) - lambda;
  }
};

inline std::vector<cplx> pencil_reduce(const PencilProblem& pp, cplx lambda) {
  std::vector<cplx> a;
  for (size_t k = 0; k < pp.pieces.size(); ++k) a.push_back(pp.coeff(k, lambda));
  return a;
}

/// The Herglotz realness certificate: eigenvalues of the pencil are real
/// whenever g_u g_v keeps one strict sign over all pieces.
inline bool realness_certificate(const PencilProblem& pp) {
  bool any_pos = false, any_neg = false;
  for (const auto& pc : pp.pieces) {
    double s = pc.gu * pc.gv;
    if (s > 0.0) any_pos = true;
    if (s < 0.0) any_neg = true;
    if (s == 0.0) return false;  // not strict
  }
  return !(any_pos && any_neg);
}

/// Essential spectrum contributed by one far-field piece of the pencil:
/// the real lambda where a(lambda) >= 0, i.e. where the far-field equation
/// has a purely imaginary spatial eigenvalue. Since
///   a(lambda) = -lambda (lambda + g_v - g_u) / (lambda + g_v),
/// the set is a union of intervals with endpoints among {0, g_u - g_v, -g_v}.
/// Intervals are returned ascending; -inf/+inf encode unbounded ends.
inline std::vector<std::pair<double, double>> pencil_essential_spectrum(double gu, double gv) {
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> pts{0.0, gu - gv, -gv};
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  auto a = [&](double lam) { return -lam * (lam + gv - gu) / (lam + gv); };

  // Probe each maximal interval between critical points (and the two tails).
  std::vector<double> lo{-inf}, hi;
  for (double p : pts) {
    hi.push_back(p);
    lo.push_back(p);
  }
  hi.push_back(inf);

  std::vector<std::pair<double, double>> iv;
  for (size_t i = 0; i < lo.size(); ++i) {
    double probe;
    if (std::isinf(lo[i]) && std::isinf(hi[i]))
      probe = 0.0;
    else if (std::isinf(lo[i]))
      probe = hi[i] - 1.0;
    else if (std::isinf(hi[i]))
      probe = lo[i] + 1.0;
    else
      probe = 0.5 * (lo[i] + hi[i]);
    if (a(probe) >= 0.0) {
      if (!iv.empty() && iv.back().second == lo[i])
        iv.back().second = hi[i];  // merge across a touching endpoint
      else
        iv.emplace_back(lo[i], hi[i]);
    }
  }
  return iv;
}

/// Closed-form Evans function of Example 3 (piecewise pulse, half-width L):
///   F = sqrt(lambda) [ sqrt(1 + 1/(lambda+gamma))
///        + sqrt(1 + 1/(lambda+1-gamma)) tanh( sqrt(lambda) L sqrt(1 + 1/(lambda+1-gamma)) ) ],
/// i.e. F = mu0 + mu1 tanh(mu1 L) with mu_j the far/inner decay rates.
inline cplx evans_example3(cplx lambda, double gamma, double L) {
  cplx mu0 = std::sqrt(lambda) * std::sqrt(1.0 + 1.0 / (lambda + gamma));
  cplx mu1 = std::sqrt(lambda) * std::sqrt(1.0 + 1.0 / (lambda + 1.0 - gamma));
  if (!is_finite(mu0) || !is_finite(mu1))
    throw std::domain_error("evans_example3: lambda at a pencil pole");
  return mu0 + mu1 * std::tanh(mu1 * L);
}

/// Pole-cleared Evans function of Example 4 (piecewise front):
///   F(lambda) = lambda (2 lambda^2 + 4 lambda + 1 + 2 gamma - 2 gamma^2),
/// equal to (mu0^2 + mu1^2)(lambda+gamma)(lambda+1-gamma). Roots are
/// {0, -1 +- (sqrt2/2) sqrt(gamma^2 + (gamma-1)^2)}; the cleared poles
/// {-gamma, gamma-1} are reported separately.
inline cplx evans_example4(cplx lambda, double gamma) {
  return lambda * (2.0 * lambda * lambda + 4.0 * lambda + 1.0 + 2.0 * gamma - 2.0 * gamma * gamma);
}

inline std::vector<double> evans_example4_roots(double gamma) {
  double r = (std::sqrt(2.0) / 2.0) * std::sqrt(gamma * gamma + (gamma - 1.0) * (gamma - 1.0));
  return {0.0, -1.0 + r, -1.0 - r};
}

inline std::vector<double> evans_example4_poles(double gamma) { return {-gamma, gamma - 1.0}; }

// ---------------------------------------------------------------------------
// General piecewise construction
// ---------------------------------------------------------------------------

/// 2x2 transfer matrix of p'' + a p = 0 over a width-h piece, in the basis
/// {cosh(mu s), sinh(mu s)/mu} with mu^2 = -a: entire in mu^2, with the
/// linear-solution limit [[1, h],[0, 1]] at mu = 0.
inline void pencil_transfer(cplx a, double h, cplx& t00, cplx& t01, cplx& t10, cplx& t11) {
  cplx mu2 = -a;
  if (std::abs(mu2) < 1e-24) {
    t00 = 1.0;
    t01 = h;
    t10 = 0.0;
    t11 = 1.0;
    return;
  }
  cplx mu = std::sqrt(mu2);
  cplx ch = std::cosh(mu * h);
  cplx sh_over = std::sinh(mu * h) / mu;
  t00 = ch;
  t01 = sh_over;
  t10 = mu2 * sh_over;  // mu * sinh(mu h)
  t11 = ch;
}

/// General piecewise Evans function: propagate the decaying solution from
/// -infinity (slope mu with Re mu > 0, principal branch) through the interior
/// pieces by transfer matrices and return the mismatch with the decaying
/// direction at +infinity, E = mu_R p - p'. Roots coincide with eigenvalues;
/// values differ from the closed forms by a nonvanishing analytic factor.
inline cplx piecewise_evans(const PencilProblem& pp, cplx lambda) {
  const size_t m = pp.pieces.size();
  cplx aL = pp.coeff(0, lambda);
  cplx aR = pp.coeff(m - 1, lambda);
  cplx muL = std::sqrt(-aL);
  cplx muR = -std::sqrt(-aR);
  if (muL.real() <= 0.0 || muR.real() >= 0.0)
    throw OnContourError("piecewise_evans: lambda on the pencil essential spectrum");

  cplx p = 1.0, dp = muL;
  for (size_t k = 1; k + 1 < m; ++k) {
    double h = pp.pieces[k].z_hi - pp.pieces[k].z_lo;
    cplx t00, t01, t10, t11;
    pencil_transfer(pp.coeff(k, lambda), h, t00, t01, t10, t11);
    cplx pn = t00 * p + t01 * dp;
    cplx dpn = t10 * p + t11 * dp;
    p = pn;
    dp = dpn;
  }
  return muR * p - dp;
}

}  // namespace evanslab
