#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "evanslab/contour.hpp"
#include "evanslab/ode.hpp"
#include "evanslab/spectral_problem.hpp"
#include "evanslab/types.hpp"
#include "evanslab/winding.hpp"

namespace evanslab {

struct RiccatiOptions {
  double L = 30.0;           // half-length of the truncated domain
  double z0 = 0.0;           // matching point
  bool adaptive_L = false;   // double L until |E| stabilises (<1e-7 change)
  unsigned seed = 20260824;  // seed of the single random re-chart retry
  bool allow_rechart = true; // false inside winding/pole location (fixed chart)
  double rtol = 1e-10;
  double atol = 1e-12;
  double blow_up_norm = kDefaultBlowUpNorm;
};

/// Result of a single Riccati-Evans evaluation. `pole` marks persistent
/// Riccati blow-up (after the single re-chart retry): a chart-independent
/// singularity of E at this lambda.
struct EvansValue {
  cplx lambda;
  cplx E = 0.0;
  bool pole = false;
  std::string chart;
};

struct EvansRoot {
  cplx lambda;
  double residual;  // |E| after refinement
};

struct EvansReport {
  std::vector<EvansValue> samples;
  std::vector<EvansRoot> roots;
  std::vector<cplx> poles;
  std::optional<int> winding;
  double winding_residual = 0.0;
  std::string chart;
  double z0 = 0.0;
  unsigned seed = 0;
};

/// Default chart for each formulation: line chart for the 3d flow, pulse/front
/// plane charts for the 4d flow.
inline Chart default_chart(const SpectralProblem& sp) {
  if (sp.dim == 3) return t3_chart();
  return sp.profile.shape() == WaveShape::Pulse ? t4_pulse_chart() : t4_front_chart();
}

/// Projective line flow on coordinates x of the line through (1, x): with
/// M the charted coefficient matrix and V = (1, x),
///   x_i' = (M V)_{i+1} - x_i (M V)_0.
inline Eigen::VectorXcd line_flow_field(const Eigen::MatrixXcd& M, const Eigen::VectorXcd& x) {
  const int n = static_cast<int>(M.rows());
  Eigen::VectorXcd V(n);
  V(0) = 1.0;
  V.tail(n - 1) = x;
  Eigen::VectorXcd MV = M * V;
  Eigen::VectorXcd dx(n - 1);
  for (int i = 0; i < n - 1; ++i) dx(i) = MV(i + 1) - x(i) * MV(0);
  return dx;
}

/// Matrix Riccati plane flow: with the charted matrix split into blocks
/// (A k x k, B, C, D) the (n-k) x k coordinate W of the plane spanned by the
/// columns of (X; Y), W = Y X^{-1}, satisfies W' = C + D W - W A - W B W.
inline Eigen::MatrixXcd plane_flow_field(const Eigen::MatrixXcd& M, const Eigen::MatrixXcd& W, int k) {
  const int n = static_cast<int>(M.rows());
  auto A = M.topLeftCorner(k, k);
  auto B = M.topRightCorner(k, n - k);
  auto C = M.bottomLeftCorner(n - k, k);
  auto D = M.bottomRightCorner(n - k, n - k);
  return C + D * W - W * A - W * B * W;
}

namespace detail {

struct ChartFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Plane chart coordinates W = Y X^{-1} of a charted n x k basis.
inline Eigen::MatrixXcd plane_coords(const Eigen::MatrixXcd& charted_basis, int k) {
  const int n = static_cast<int>(charted_basis.rows());
  Eigen::MatrixXcd X = charted_basis.topRows(k);
  Eigen::MatrixXcd Y = charted_basis.bottomRows(n - k);
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(X);
  lu.setThreshold(1e-10);
  if (lu.rank() < k) throw ChartFailure("plane chart patch is singular at the initial data");
  return Y * lu.inverse();
}

/// Affine line coordinates (x_1, ..., x_{n-1}) of a charted direction vector.
inline Eigen::VectorXcd line_coords(const Eigen::VectorXcd& charted_dir) {
  const int n = static_cast<int>(charted_dir.size());
  if (std::abs(charted_dir(0)) < 1e-12 * charted_dir.norm())
    throw ChartFailure("line chart patch is singular at the initial data");
  Eigen::VectorXcd x(n - 1);
  for (int i = 1; i < n; ++i) x(i - 1) = charted_dir(i) / charted_dir(0);
  return x;
}

inline Eigen::VectorXcd flatten(const Eigen::MatrixXcd& W) {
  Eigen::VectorXcd v(W.size());
  int idx = 0;
  for (int r = 0; r < W.rows(); ++r)
    for (int col = 0; col < W.cols(); ++col) v(idx++) = W(r, col);
  return v;
}

inline Eigen::MatrixXcd unflatten(const Eigen::VectorXcd& v, int rows, int cols) {
  Eigen::MatrixXcd W(rows, cols);
  int idx = 0;
  for (int r = 0; r < rows; ++r)
    for (int col = 0; col < cols; ++col) W(r, col) = v(idx++);
  return W;
}

/// One attempt at E(lambda) in a fixed chart. Throws ChartFailure on
/// singular initial patch; returns nullopt on Riccati blow-up.
inline std::optional<cplx> evaluate_once(const SpectralProblem& sp, const Chart& chart, cplx lambda,
                                         double L, const RiccatiOptions& opt) {
  const int n = sp.dim;
  Subspaces left = far_subspaces(sp.A_far(-1, lambda));
  Subspaces right = far_subspaces(sp.A_far(+1, lambda));
  const int k = static_cast<int>(left.unstable.cols());
  const int ks = static_cast<int>(right.stable.cols());
  if (k + ks != n)
    throw std::domain_error("riccati evaluate: subspace dimensions do not sum to n (lambda in or near the essential spectrum)");
  if (k < 1 || ks < 1) throw std::domain_error("riccati evaluate: empty shooting subspace");

  IntegrateOptions io;
  io.rtol = opt.rtol;
  io.atol = opt.atol;
  io.blow_up_norm = opt.blow_up_norm;
  io.record_samples = false;

  auto charted_A = [&](double z) { return chart.apply(sp.A(z, lambda)); };

  // Forward plane flow from the unstable subspace at z = -L.
  Eigen::MatrixXcd Wu0 = plane_coords(chart.T * left.unstable, k);
  OdeField fwd = [&](double z, const Eigen::VectorXcd& y) {
    return flatten(plane_flow_field(charted_A(z), unflatten(y, n - k, k), k));
  };
  Trajectory tf = integrate(fwd, flatten(Wu0), -L, opt.z0, io);
  if (tf.termination == Termination::BlowUp) return std::nullopt;
  Eigen::MatrixXcd Wu = unflatten(tf.final_state(), n - k, k);

  if (n == 3) {
    // Backward line flow from the stable eigenvector at z = +L.
    Eigen::VectorXcd x0 = line_coords(chart.T * right.stable.col(0));
    OdeField bwd = [&](double z, const Eigen::VectorXcd& y) { return line_flow_field(charted_A(z), y); };
    Trajectory tb = integrate(bwd, x0, L, opt.z0, io);
    if (tb.termination == Termination::BlowUp) return std::nullopt;
    cplx alpha = tb.final_state()(0), beta = tb.final_state()(1);
    // E = -w1 - w2 alpha + beta for the 1x2 plane coordinate (w1, w2).
    return -Wu(0, 0) - Wu(0, 1) * alpha + beta;
  }

  // n = 4: backward plane flow from the stable subspace at z = +L.
  Eigen::MatrixXcd Ws0 = plane_coords(chart.T * right.stable, k);
  OdeField bwd = [&](double z, const Eigen::VectorXcd& y) {
    return flatten(plane_flow_field(charted_A(z), unflatten(y, n - k, k), k));
  };
  Trajectory tb = integrate(bwd, flatten(Ws0), L, opt.z0, io);
  if (tb.termination == Termination::BlowUp) return std::nullopt;
  Eigen::MatrixXcd Ws = unflatten(tb.final_state(), n - k, k);
  return (Ws - Wu).determinant();
}

/// Effective truncation length: the far-field decay rates set a floor
/// L >= 25/min|Re nu|, capped so slowly-decaying modes (lambda near 0 or a
/// border) do not explode the domain.
inline double effective_L(const SpectralProblem& sp, cplx lambda, double L_request) {
  double min_re = std::numeric_limits<double>::infinity();
  for (int side : {-1, +1})
    for (cplx nu : asymptotic_roots(lambda, sp.far.gu(side), sp.far.gv(side), sp.c, sp.D))
      if (std::abs(nu.real()) > 1e-12) min_re = std::min(min_re, std::abs(nu.real()));
  if (!std::isfinite(min_re) || min_re <= 0.0) return L_request;
  return std::clamp(25.0 / min_re, L_request, 4.0 * L_request);
}

}  // namespace detail

/// Riccati-Evans function E(lambda): shoot the unstable plane forward from
/// -L and the stable line/plane backward from +L in the given chart, match
/// at z0. On blow-up, retry once with a seeded random unitary chart (if
/// allowed); persistent blow-up is recorded as a pole.
inline EvansValue evaluate(const SpectralProblem& sp, const Chart& chart, cplx lambda,
                           const RiccatiOptions& opt = {}) {
  EvansValue out;
  out.lambda = lambda;
  out.chart = chart.name;
  double L = detail::effective_L(sp, lambda, opt.L);

  auto attempt = [&](const Chart& ch) -> std::optional<cplx> {
    if (!opt.adaptive_L) return detail::evaluate_once(sp, ch, lambda, L, opt);
    std::optional<cplx> prev = detail::evaluate_once(sp, ch, lambda, L, opt);
    double Lcur = L;
    for (int it = 0; it < 3 && prev; ++it) {
      Lcur *= 2.0;
      std::optional<cplx> next = detail::evaluate_once(sp, ch, lambda, Lcur, opt);
      if (!next) return prev;  // longer domain blew up; keep the converged-ish value
      if (std::abs(*next - *prev) < 1e-7) return next;
      prev = next;
    }
    return prev;
  };

  try {
    if (auto E = attempt(chart)) {
      out.E = *E;
      return out;
    }
  } catch (const detail::ChartFailure&) {
    // fall through to the retry chart
  }

  if (opt.allow_rechart) {
    Chart retry = random_unitary_chart(sp.dim, opt.seed);
    try {
      if (auto E = attempt(retry)) {
        out.E = *E;
        out.chart = retry.name;
        return out;
      }
    } catch (const detail::ChartFailure&) {
    }
  }

  out.pole = true;
  out.E = cplx(std::numeric_limits<double>::infinity(), 0.0);
  return out;
}

/// Real-axis scan: sample E on [a, b] and bracket the phase flips. Under a
/// complex chart E is not real along the real axis, but across a simple root
/// (or pole) the phase jumps by ~pi, so brackets are detected by
/// Re(E_i conj(E_{i+1})) < 0 between same-chart samples and refined by
/// bisection of Re(E conj(E_ref)). A refined point is reported as a root when
/// |E| collapses there and as a pole candidate when it grows.
inline EvansReport scan_real(const SpectralProblem& sp, const Chart& chart, double a, double b,
                             int n = 200, const RiccatiOptions& opt = {}) {
  if (!(b > a)) throw std::invalid_argument("scan_real: need b > a");
  EvansReport rep;
  rep.chart = chart.name;
  rep.z0 = opt.z0;
  rep.seed = opt.seed;

  std::vector<double> xs(n + 1);
  std::vector<EvansValue> vals(n + 1);
  std::vector<bool> usable(n + 1, false);
  for (int i = 0; i <= n; ++i) {
    xs[i] = a + (b - a) * double(i) / n;
    try {
      vals[i] = evaluate(sp, chart, cplx(xs[i], 0.0), opt);
      usable[i] = !vals[i].pole && is_finite(vals[i].E);
    } catch (const std::exception&) {
      vals[i].lambda = xs[i];
      vals[i].pole = true;
    }
    rep.samples.push_back(vals[i]);
    if (vals[i].pole) rep.poles.push_back(vals[i].lambda);
  }

  for (int i = 0; i < n; ++i) {
    if (!usable[i] || !usable[i + 1]) continue;
    if (vals[i].chart != vals[i + 1].chart) continue;
    cplx E0 = vals[i].E, E1 = vals[i + 1].E;
    if ((E0 * std::conj(E1)).real() >= 0.0) continue;

    const cplx Eref = E0;
    const std::string& bracket_chart = vals[i].chart;
    double lo = xs[i], hi = xs[i + 1];
    double flo = (E0 * std::conj(Eref)).real();
    cplx Emid = E0;
    double scale = std::max(std::abs(E0), std::abs(E1));
    for (int it = 0; it < 80 && hi - lo > 1e-13 * std::max(1.0, std::abs(lo)); ++it) {
      double mid = 0.5 * (lo + hi);
      EvansValue ev;
      try {
        ev = evaluate(sp, chart, cplx(mid, 0.0), opt);
      } catch (const std::exception&) {
        break;
      }
      if (ev.pole || !is_finite(ev.E) || ev.chart != bracket_chart) break;
      Emid = ev.E;
      double fm = (ev.E * std::conj(Eref)).real();
      if (flo * fm <= 0.0)
        hi = mid;
      else
        lo = mid, flo = fm;
    }
    double r = 0.5 * (lo + hi);
    if (std::abs(Emid) < 1e-4 * std::max(1.0, scale))
      rep.roots.push_back({cplx(r, 0.0), std::abs(Emid)});
    else
      rep.poles.push_back(cplx(r, 0.0));
  }
  return rep;
}

/// Winding number of E over a closed contour in a FIXED chart (no re-chart:
/// mixing charts would break phase continuity). Adaptive refinement bisects
/// segments with phase jumps >= pi/2, up to 2^16 samples; a blow-up or
/// near-zero sample on the contour raises OnContourError ("refine or perturb
/// contour").
inline EvansReport winding(const SpectralProblem& sp, const Chart& chart, const Contour& contour,
                           RiccatiOptions opt = {}) {
  opt.allow_rechart = false;
  EvansReport rep;
  rep.chart = chart.name;
  rep.z0 = opt.z0;
  rep.seed = opt.seed;

  auto sample = [&](cplx lam) -> cplx {
    EvansValue ev = evaluate(sp, chart, lam, opt);
    if (ev.pole || !is_finite(ev.E))
      throw OnContourError("winding: Riccati blow-up on the contour; perturb the contour");
    return ev.E;
  };

  std::vector<cplx> lams = contour.vertices;
  std::vector<cplx> Es(lams.size());
  for (size_t i = 0; i < lams.size(); ++i) Es[i] = sample(lams[i]);

  const double threshold = std::numbers::pi / 2.0;
  const size_t max_samples = size_t(1) << 16;
  bool refined = true;
  while (refined) {
    refined = false;
    for (size_t i = 0; i < lams.size(); ++i) {
      size_t j = (i + 1) % lams.size();
      if (std::abs(std::arg(Es[j] / Es[i])) < threshold) continue;
      if (lams.size() >= max_samples)
        throw InsufficientSamplingError("winding: refinement budget exhausted (feature on contour?)");
      cplx mid = 0.5 * (lams[i] + lams[j]);
      cplx Em = sample(mid);
      lams.insert(lams.begin() + i + 1, mid);
      Es.insert(Es.begin() + i + 1, Em);
      refined = true;
      break;
    }
  }

  for (size_t i = 0; i < lams.size(); ++i) rep.samples.push_back({lams[i], Es[i], false, chart.name});
  WindingResult w = winding_number(Es);
  rep.winding = w.winding;
  rep.winding_residual = w.residual;
  return rep;
}

/// Pole location inside a rectangle: seed a grid, collect blow-up / huge-|E|
/// candidates, cluster them, refine each cluster by secant iteration on 1/E
/// in the FIXED chart, and confirm with a small-circle winding of -1.
inline std::vector<cplx> locate_poles(const SpectralProblem& sp, const Chart& chart, cplx lo, cplx hi,
                                      int nx = 20, int ny = 20, RiccatiOptions opt = {}) {
  opt.allow_rechart = false;

  auto E_of = [&](cplx lam) -> cplx {
    EvansValue ev = evaluate(sp, chart, lam, opt);
    if (ev.pole) return cplx(std::numeric_limits<double>::infinity(), 0.0);
    return ev.E;
  };

  // Sample |E| on the grid; pole candidates are blow-ups and strict local
  // maxima of |E| that stand well above the grid median.
  std::vector<std::vector<double>> mag(nx + 1, std::vector<double>(ny + 1, -1.0));
  auto lam_at = [&](int ix, int iy) {
    return cplx(lo.real() + (hi.real() - lo.real()) * ix / double(nx),
                lo.imag() + (hi.imag() - lo.imag()) * iy / double(ny));
  };
  std::vector<cplx> cand;
  std::vector<double> finite_mags;
  for (int ix = 0; ix <= nx; ++ix)
    for (int iy = 0; iy <= ny; ++iy) {
      try {
        cplx E = E_of(lam_at(ix, iy));
        if (!is_finite(E)) {
          cand.push_back(lam_at(ix, iy));
        } else {
          mag[ix][iy] = std::abs(E);
          finite_mags.push_back(mag[ix][iy]);
        }
      } catch (const std::exception&) {
      }
    }
  if (finite_mags.empty()) return {};
  std::nth_element(finite_mags.begin(), finite_mags.begin() + finite_mags.size() / 2, finite_mags.end());
  double median = finite_mags[finite_mags.size() / 2];
  for (int ix = 0; ix <= nx; ++ix)
    for (int iy = 0; iy <= ny; ++iy) {
      double m = mag[ix][iy];
      if (m < std::max(5.0 * median, 1e-300)) continue;
      bool is_max = true;
      for (int dx = -1; dx <= 1 && is_max; ++dx)
        for (int dy = -1; dy <= 1 && is_max; ++dy) {
          int jx = ix + dx, jy = iy + dy;
          if ((dx == 0 && dy == 0) || jx < 0 || jx > nx || jy < 0 || jy > ny) continue;
          if (mag[jx][jy] > m) is_max = false;
        }
      if (is_max) cand.push_back(lam_at(ix, iy));
    }

  // Greedy clustering by proximity.
  double cell = std::max(hi.real() - lo.real(), hi.imag() - lo.imag()) / std::max(nx, ny);
  std::vector<cplx> centers;
  for (cplx c : cand) {
    bool merged = false;
    for (cplx& ctr : centers)
      if (std::abs(c - ctr) < 3.0 * cell) {
        ctr = 0.5 * (ctr + c);
        merged = true;
        break;
      }
    if (!merged) centers.push_back(c);
  }

  std::vector<cplx> poles;
  for (cplx ctr : centers) {
    // Secant iteration on f = 1/E from two offsets of the cluster center.
    cplx z0 = ctr + cplx(2.0 * cell, 0.0), z1 = ctr + cplx(0.0, 2.0 * cell);
    bool f_failed = false;
    auto f = [&](cplx z) -> cplx {
      try {
        cplx E = E_of(z);
        if (!is_finite(E)) return 0.0;
        return 1.0 / E;
      } catch (const std::exception&) {
        f_failed = true;
        return 0.0;
      }
    };
    cplx f0 = f(z0), f1 = f(z1);
    bool converged = false;
    for (int it = 0; it < 60; ++it) {
      cplx denom = f1 - f0;
      if (std::abs(denom) == 0.0) break;
      cplx z2 = z1 - f1 * (z1 - z0) / denom;
      if (!is_finite(z2)) break;
      z0 = z1;
      f0 = f1;
      z1 = z2;
      f1 = f(z1);
      if (f_failed) break;
      if (std::abs(z1 - z0) < 1e-8 * (1.0 + std::abs(z1))) {
        converged = true;
        break;
      }
    }
    if (!converged || f_failed) continue;
    // Confirm: winding of E around a small circle is negative for a pole.
    bool confirmed = false, any_winding = false;
    for (double r : {0.5 * cell, cell, 0.2 * cell}) {
      try {
        EvansReport wr = winding(sp, chart, circle_contour(z1, std::max(1e-4, r), 48), opt);
        any_winding = true;
        if (wr.winding && *wr.winding < 0) confirmed = true;
        break;
      } catch (const std::exception&) {
      }
    }
    // If every confirmation circle failed (blow-ups around the point) but the
    // secant drove 1/E to zero, keep the estimate.
    if (confirmed || (!any_winding && std::abs(f1) < 1e-6)) poles.push_back(z1);
  }
  return poles;
}

}  // namespace evanslab
