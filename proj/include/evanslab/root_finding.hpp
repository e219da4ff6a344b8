#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "evanslab/types.hpp"

namespace evanslab {

struct RealRootScan {
  std::vector<double> roots;
  std::vector<double> skipped;  // seed abscissae where f was non-finite (pole candidates)
};

/// Real roots of a complex-valued function of a real argument on [a, b].
/// Brackets sign changes of Re f where Im f is negligible, refines by
/// bisection plus a secant polish, keeps r only when |f(r)| < tol.
/// Non-finite seeds are skipped and recorded. An empty result is valid.
inline RealRootScan find_real_roots(const std::function<cplx(double)>& f, double a, double b,
                                    int n_seed = 400, double tol = 1e-9) {
  if (!(b > a)) throw std::invalid_argument("find_real_roots: need b > a");
  if (n_seed < 2) n_seed = 2;

  auto im_ok = [](cplx v) { return std::abs(v.imag()) <= 1e-6 * std::max(1.0, std::abs(v)); };

  RealRootScan out;
  std::vector<double> xs(n_seed + 1);
  std::vector<cplx> fs(n_seed + 1);
  std::vector<bool> ok(n_seed + 1);
  for (int i = 0; i <= n_seed; ++i) {
    xs[i] = a + (b - a) * double(i) / n_seed;
    cplx v = f(xs[i]);
    ok[i] = is_finite(v);
    fs[i] = v;
    if (!ok[i]) out.skipped.push_back(xs[i]);
  }

  for (int i = 0; i < n_seed; ++i) {
    if (!ok[i] || !ok[i + 1]) continue;
    if (!(im_ok(fs[i]) && im_ok(fs[i + 1]))) continue;
    double f0 = fs[i].real(), f1 = fs[i + 1].real();
    if (f0 == 0.0) {  // exact hit on a seed
      if (std::abs(fs[i]) < tol) out.roots.push_back(xs[i]);
      continue;
    }
    if (f0 * f1 >= 0.0) continue;

    double lo = xs[i], hi = xs[i + 1], flo = f0;
    for (int it = 0; it < 200 && hi - lo > 1e-16 * std::max(1.0, std::abs(lo)); ++it) {
      double mid = 0.5 * (lo + hi);
      cplx fm = f(mid);
      if (!is_finite(fm)) break;
      if (flo * fm.real() <= 0.0)
        hi = mid;
      else
        lo = mid, flo = fm.real();
    }
    double r = 0.5 * (lo + hi);
    if (std::abs(f(r)) < tol) out.roots.push_back(r);
  }
  return out;
}

}  // namespace evanslab
