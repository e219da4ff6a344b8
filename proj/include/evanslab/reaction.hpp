#pragma once

#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace evanslab {

/// Bivariate polynomial reaction term g(u,v) = sum a_ij u^i v^j, stored as a
/// monomial coefficient map so that g_u and g_v are exact. Named parameters
/// (c, D, gamma, delta, beta) are recorded for serialization.
class ReactionTerm {
public:
  using Exponents = std::pair<int, int>;  // (i, j) for u^i v^j

  std::map<Exponents, double> monomials;
  std::map<std::string, double> parameters;

  void add(int i, int j, double coeff) {
    if (coeff != 0.0) monomials[{i, j}] += coeff;
  }

  double g(double u, double v) const {
    double s = 0.0;
    for (const auto& [e, a] : monomials) s += a * ipow(u, e.first) * ipow(v, e.second);
    return s;
  }

  double gu(double u, double v) const {
    double s = 0.0;
    for (const auto& [e, a] : monomials)
      if (e.first > 0) s += a * e.first * ipow(u, e.first - 1) * ipow(v, e.second);
    return s;
  }

  double gv(double u, double v) const {
    double s = 0.0;
    for (const auto& [e, a] : monomials)
      if (e.second > 0) s += a * e.second * ipow(u, e.first) * ipow(v, e.second - 1);
    return s;
  }

  /// Coefficients of G(v) = g(-v, v) in ascending degree (the equal-diffusivity
  /// scalar reduction). Exact since g is polynomial.
  std::vector<double> scalar_reduction_coeffs() const {
    std::vector<double> c;
    for (const auto& [e, a] : monomials) {
      int d = e.first + e.second;
      if (int(c.size()) <= d) c.resize(d + 1, 0.0);
      c[d] += a * ((e.first % 2) ? -1.0 : 1.0);
    }
    return c;
  }

private:
  static double ipow(double x, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
  }
};

}  // namespace evanslab
