#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "evanslab/types.hpp"

namespace evanslab {

/// Dense univariate polynomial with complex coefficients, stored in ascending
/// degree. Trailing coefficients that are negligible against the largest one
/// are trimmed on construction.
class Polynomial {
public:
  explicit Polynomial(std::vector<cplx> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.push_back(0.0);
    trim();
  }

  static Polynomial from_roots(const std::vector<cplx>& roots, cplx leading = 1.0) {
    std::vector<cplx> a{leading};
    for (cplx r : roots) {
      std::vector<cplx> b(a.size() + 1, 0.0);
      for (size_t i = 0; i < a.size(); ++i) {
        b[i] += -r * a[i];
        b[i + 1] += a[i];
      }
      a = std::move(b);
    }
    return Polynomial(std::move(a));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<cplx>& coeffs() const { return c_; }

  cplx eval(cplx z) const {
    cplx s = 0.0;
    for (int i = degree(); i >= 0; --i) s = s * z + c_[i];
    return s;
  }

  cplx deriv(cplx z) const {
    cplx s = 0.0;
    for (int i = degree(); i >= 1; --i) s = s * z + double(i) * c_[i];
    return s;
  }

  double max_coeff_magnitude() const {
    double m = 0.0;
    for (cplx c : c_) m = std::max(m, std::abs(c));
    return m;
  }

private:
  void trim() {
    double m = max_coeff_magnitude();
    while (c_.size() > 1 && std::abs(c_.back()) <= 1e-13 * m) c_.pop_back();
  }

  std::vector<cplx> c_;
};

/// All deg(p) roots, via eigenvalues of the companion matrix with a Newton
/// polish. Multiple roots come back as clusters.
inline std::vector<cplx> polynomial_roots(const Polynomial& p) {
  const int n = p.degree();
  if (n < 1) throw std::invalid_argument("polynomial_roots: constant polynomial");

  const auto& c = p.coeffs();
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -c[i] / c[n];

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, /*computeEigenvectors=*/false);
  std::vector<cplx> roots(n);
  for (int i = 0; i < n; ++i) {
    cplx z = es.eigenvalues()(i);
    // Newton polish; bail out when the step stalls (multiple roots).
    for (int it = 0; it < 24; ++it) {
      cplx f = p.eval(z), df = p.deriv(z);
      if (std::abs(df) == 0.0) break;
      cplx step = f / df;
      if (!is_finite(step)) break;
      z -= step;
      if (std::abs(step) < 1e-12 * (1.0 + std::abs(z))) break;
    }
    roots[i] = z;
  }
  std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return roots;
}

/// Number of roots with positive real part. A root within `margin` of the
/// imaginary axis signals a Fredholm border and raises NearBorderError.
inline int count_roots_positive_real(const Polynomial& p, double margin = kNearBorderMargin) {
  int count = 0;
  for (cplx r : polynomial_roots(p)) {
    if (std::abs(r.real()) < margin)
      throw NearBorderError("count_roots_positive_real: root within margin of imaginary axis");
    if (r.real() > 0.0) ++count;
  }
  return count;
}

}  // namespace evanslab
