#pragma once

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "evanslab/catalog.hpp"
#include "evanslab/polynomial.hpp"
#include "evanslab/reaction.hpp"
#include "evanslab/types.hpp"
#include "evanslab/wave_profile.hpp"

namespace evanslab {

/// Which first-order formulation the linearization uses.
///  - General4:          D > 0, state (p, q, p', D q')       (4x4)
///  - DegenerateMoving3: D = 0, c != 0, state (p, q, p')     (3x3)
/// The doubly degenerate case D = 0, c = 0 is not an ODE system; it reduces
/// to a quadratic operator pencil (see pencil_problem in the closed-form
/// Evans module).
enum class SystemVariant { General4, DegenerateMoving3 };

/// A similarity chart A |-> T A T^{-1} used to move Riccati coordinates away
/// from the standard affine patch.
struct Chart {
  Eigen::MatrixXcd T, Tinv;
  std::string name;

  Eigen::MatrixXcd apply(const Eigen::MatrixXcd& A) const { return T * A * Tinv; }
};

inline Chart identity_chart(int n) {
  Chart ch;
  ch.T = Eigen::MatrixXcd::Identity(n, n);
  ch.Tinv = ch.T;
  ch.name = "identity" + std::to_string(n);
  return ch;
}

/// 3x3 chart for the degenerate moving frame: T = [[i,0,1],[0,-i,0],[0,0,1]].
inline Chart t3_chart() {
  Chart ch;
  const cplx i(0.0, 1.0);
  ch.T = Eigen::MatrixXcd::Zero(3, 3);
  ch.T << i, 0, 1, 0, -i, 0, 0, 0, 1;
  ch.Tinv = ch.T.inverse();
  ch.name = "t3";
  return ch;
}

/// 4x4 pulse chart: T = [[i,0,1,0],[0,1,0,1],[0,0,-i,0],[0,0,0,1]].
inline Chart t4_pulse_chart() {
  Chart ch;
  const cplx i(0.0, 1.0);
  ch.T = Eigen::MatrixXcd::Zero(4, 4);
  ch.T << i, 0, 1, 0, 0, 1, 0, 1, 0, 0, -i, 0, 0, 0, 0, 1;
  ch.Tinv = ch.T.inverse();
  ch.name = "t4_pulse";
  return ch;
}

/// 4x4 front chart: T = [[i,0,1,0],[0,-i,0,1],[0,0,1,0],[0,0,0,1]].
inline Chart t4_front_chart() {
  Chart ch;
  const cplx i(0.0, 1.0);
  ch.T = Eigen::MatrixXcd::Zero(4, 4);
  ch.T << i, 0, 1, 0, 0, -i, 0, 1, 0, 0, 1, 0, 0, 0, 0, 1;
  ch.Tinv = ch.T.inverse();
  ch.name = "t4_front";
  return ch;
}

/// Haar-ish random unitary chart (QR of a seeded complex Gaussian matrix),
/// used as the retry chart after a Riccati blow-up.
inline Chart random_unitary_chart(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd G(n, n);
  for (int r = 0; r < n; ++r)
    for (int col = 0; col < n; ++col) G(r, col) = cplx(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(G);
  Chart ch;
  ch.T = qr.householderQ();
  ch.Tinv = ch.T.adjoint();
  ch.name = "random_unitary" + std::to_string(n) + "#" + std::to_string(seed);
  return ch;
}

inline Eigen::MatrixXcd apply_chart(const Chart& ch, const Eigen::MatrixXcd& A) { return ch.apply(A); }

/// Characteristic polynomial in the spatial eigenvalue nu at a far-field
/// state, ascending coefficients:
///   D nu^4 + c(D+1) nu^3 + [c^2 - (gv - D gu) - lambda(D+1)] nu^2
///     - c[gv - gu + 2 lambda] nu + lambda[lambda + gv - gu].
/// For D = 0 the quartic degenerates to the cubic obtained by dropping the
/// leading term.
inline Polynomial characteristic_polynomial(cplx lambda, double gu, double gv, double c, double D) {
  std::vector<cplx> a(5);
  a[0] = lambda * (lambda + gv - gu);
  a[1] = -c * (cplx(gv - gu) + 2.0 * lambda);
  a[2] = cplx(c * c - (gv - D * gu)) - lambda * (D + 1.0);
  a[3] = c * (D + 1.0);
  a[4] = D;
  return Polynomial(std::move(a));
}

/// Spatial eigenvalues at a far-field state, sorted by real part.
inline std::vector<cplx> asymptotic_roots(cplx lambda, double gu, double gv, double c, double D) {
  return polynomial_roots(characteristic_polynomial(lambda, gu, gv, c, D));
}

/// Stable/unstable eigenspaces of a far-field coefficient matrix. Eigenvalues
/// within `margin` of the imaginary axis raise NearBorderError (the spectral
/// parameter sits on a Fredholm border); a repeated eigenvalue whose
/// eigenvectors are numerically parallel raises DefectiveMatrixError. The
/// returned bases are orthonormalized (thin QR).
struct Subspaces {
  Eigen::MatrixXcd unstable, stable;       // columns span the subspaces
  std::vector<cplx> nu_unstable, nu_stable;
};

inline Subspaces far_subspaces(const Eigen::MatrixXcd& Afar, double margin = kNearBorderMargin) {
  const int n = static_cast<int>(Afar.rows());
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(Afar);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("far_subspaces: eigensolver failed");

  const auto& evals = es.eigenvalues();
  const auto& evecs = es.eigenvectors();

  // Defectiveness check: clustered eigenvalues with nearly parallel vectors.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(evals(i) - evals(j)) < 1e-8 * (1.0 + std::abs(evals(i)))) {
        double overlap = std::abs(evecs.col(i).dot(evecs.col(j)));
        if (overlap > 1.0 - 1e-8)
          throw DefectiveMatrixError("far_subspaces: repeated eigenvalue without full eigenvector set");
      }

  std::vector<int> iu, is;
  for (int i = 0; i < n; ++i) {
    if (std::abs(evals(i).real()) < margin)
      throw NearBorderError("far_subspaces: spatial eigenvalue on the imaginary axis (Fredholm border)");
    (evals(i).real() > 0.0 ? iu : is).push_back(i);
  }

  auto gather = [&](const std::vector<int>& idx, std::vector<cplx>& nus) {
    Eigen::MatrixXcd B(n, static_cast<int>(idx.size()));
    for (size_t k = 0; k < idx.size(); ++k) {
      B.col(static_cast<int>(k)) = evecs.col(idx[k]);
      nus.push_back(evals(idx[k]));
    }
    if (B.cols() == 0) return B;
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(B);
    Eigen::MatrixXcd Q = qr.householderQ() * Eigen::MatrixXcd::Identity(n, B.cols());
    return Q;
  };

  Subspaces s;
  s.unstable = gather(iu, s.nu_unstable);
  s.stable = gather(is, s.nu_stable);
  return s;
}

/// First-order spectral problem W' = A(z; lambda) W along a wave.
class SpectralProblem {
public:
  SystemVariant variant = SystemVariant::General4;
  int dim = 4;
  double c = 0.0, D = 1.0;
  ReactionTerm reaction;
  WaveProfile profile;
  FarFieldData far;

  static SpectralProblem build(const ReactionTerm& rt, const WaveProfile& wp) {
    SpectralProblem sp;
    sp.c = wp.c;
    sp.D = wp.D;
    sp.reaction = rt;
    sp.profile = wp;
    sp.far = far_field(rt, wp);
    if (wp.D > 0.0) {
      sp.variant = SystemVariant::General4;
      sp.dim = 4;
    } else if (wp.c != 0.0) {
      sp.variant = SystemVariant::DegenerateMoving3;
      sp.dim = 3;
    } else {
      throw std::invalid_argument(
          "SpectralProblem: D = 0, c = 0 is an operator pencil, not an ODE system; "
          "use the pencil reduction");
    }
    return sp;
  }

  /// Coefficient matrix at (z, lambda), built from the exact partials of g
  /// along the wave.
  Eigen::MatrixXcd A(double z, cplx lambda) const {
    return assemble(reaction.gu(profile.u_at(z), profile.v_at(z)),
                    reaction.gv(profile.u_at(z), profile.v_at(z)), lambda);
  }

  /// Far-field coefficient matrix; side >= 0 means z -> +inf.
  Eigen::MatrixXcd A_far(int side, cplx lambda) const {
    return assemble(far.gu(side), far.gv(side), lambda);
  }

  /// Characteristic polynomial at a far-field state.
  Polynomial char_poly_far(int side, cplx lambda) const {
    return characteristic_polynomial(lambda, far.gu(side), far.gv(side), c, D);
  }

private:
  Eigen::MatrixXcd assemble(double gu, double gv, cplx lambda) const {
    if (variant == SystemVariant::General4) {
      Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(4, 4);
      A(0, 0) = -c;
      A(0, 2) = 1.0;
      A(1, 1) = -c / D;
      A(1, 3) = 1.0 / D;
      A(2, 0) = lambda - gu;
      A(2, 1) = -gv;
      A(3, 0) = gu;
      A(3, 1) = lambda + gv;
      return A;
    }
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(3, 3);
    A(0, 0) = -c;
    A(0, 2) = 1.0;
    A(1, 0) = gu / c;
    A(1, 1) = (lambda + gv) / c;
    A(2, 0) = lambda - gu;
    A(2, 1) = -gv;
    return A;
  }
};

}  // namespace evanslab
