#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "evanslab/riccati_evans.hpp"

using namespace evanslab;

TEST_CASE("invariant subspaces are fixed points of the Riccati flows") {
  std::mt19937 rng(21);
  std::normal_distribution<double> G(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 3 + trial % 2;
    // Random diagonalizable M = V diag V^{-1}.
    Eigen::MatrixXcd V(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) V(r, c) = cplx(G(rng), G(rng));
    Eigen::VectorXcd d(n);
    for (int i = 0; i < n; ++i) d(i) = cplx(G(rng), G(rng));
    Eigen::MatrixXcd M = V * d.asDiagonal() * V.inverse();

    // Plane through the first k eigenvectors: W = Y X^{-1} is stationary.
    int k = n - 1;
    Eigen::MatrixXcd basis = V.leftCols(k);
    Eigen::MatrixXcd X = basis.topRows(k), Y = basis.bottomRows(n - k);
    Eigen::MatrixXcd W = Y * X.inverse();
    CHECK(plane_flow_field(M, W, k).norm() < 1e-8 * std::max(1.0, W.norm() * M.norm()));

    // Line through one eigenvector: x = v_i / v_0 is stationary.
    Eigen::VectorXcd v = V.col(0);
    if (std::abs(v(0)) < 0.2) continue;
    Eigen::VectorXcd x(n - 1);
    for (int i = 1; i < n; ++i) x(i - 1) = v(i) / v(0);
    CHECK(line_flow_field(M, x).norm() < 1e-8 * std::max(1.0, x.norm() * M.norm()));
  }
}

TEST_CASE("default charts by formulation and shape") {
  CHECK(default_chart(SpectralProblem::build(catalog(5).reaction, catalog(5).profile)).name == "t3");
  CHECK(default_chart(SpectralProblem::build(catalog(1).reaction, catalog(1).profile)).name ==
        "t4_pulse");
  CHECK(default_chart(SpectralProblem::build(catalog(2).reaction, catalog(2).profile)).name ==
        "t4_front");
}

TEST_CASE("example 7 at D=1 recovers the closed-form eigenvalue 5") {
  CatalogEntry e = catalog(7, {{"D", 1.0}});
  SpectralProblem sp = SpectralProblem::build(e.reaction, e.profile);
  Chart ch = default_chart(sp);

  EvansValue at5 = evaluate(sp, ch, cplx(5.0, 0.0));
  EvansValue at3 = evaluate(sp, ch, cplx(3.0, 0.0));
  REQUIRE_FALSE(at5.pole);
  REQUIRE_FALSE(at3.pole);
  CHECK(std::abs(at5.E) < 1e-6 * std::abs(at3.E));

  // Chart independence of the root: a handful of random unitary charts.
  for (unsigned seed : {101u, 102u, 103u}) {
    Chart rc = random_unitary_chart(4, seed);
    EvansValue r5 = evaluate(sp, rc, cplx(5.0, 0.0));
    EvansValue r3 = evaluate(sp, rc, cplx(3.0, 0.0));
    if (r5.pole || r3.pole) continue;
    CHECK(std::abs(r5.E) < 1e-6 * std::abs(r3.E));
  }
}

TEST_CASE("real-axis scan finds the example 7 (D=1) eigenvalue") {
  CatalogEntry e = catalog(7, {{"D", 1.0}});
  SpectralProblem sp = SpectralProblem::build(e.reaction, e.profile);
  EvansReport rep = scan_real(sp, default_chart(sp), 0.5, 10.0, 60);
  REQUIRE(rep.roots.size() == 1);
  CHECK(rep.roots[0].lambda.real() == Catch::Approx(5.0).margin(1e-6));
  CHECK(rep.samples.size() >= 61);
}

TEST_CASE("real-axis scan finds the example 8 (D=0.5) front instability") {
  CatalogEntry e = catalog(8, {{"D", 0.5}});
  SpectralProblem sp = SpectralProblem::build(e.reaction, e.profile);
  EvansReport rep = scan_real(sp, default_chart(sp), 0.05, 4.0, 60);
  REQUIRE(rep.roots.size() == 1);
  CHECK(rep.roots[0].lambda.real() == Catch::Approx(0.400965).margin(1e-4));
}

TEST_CASE("translation eigenvalue sits at the origin") {
  for (double D : {0.5, 1.5}) {
    CatalogEntry e = catalog(8, {{"D", D}});
    SpectralProblem sp = SpectralProblem::build(e.reaction, e.profile);
    EvansValue near0 = evaluate(sp, default_chart(sp), cplx(1e-7, 0.0));
    EvansValue ref = evaluate(sp, default_chart(sp), cplx(1.0, 0.0));
    REQUIRE_FALSE(near0.pole);
    INFO("D " << D);
    CHECK(std::abs(near0.E) < 1e-4 * std::max(1.0, std::abs(ref.E)));
  }
}

TEST_CASE("example 6 front: zero winding over the half-plane contour") {
  CatalogEntry e = catalog(6);  // delta = 1, gamma = 0.75
  SpectralProblem sp = SpectralProblem::build(e.reaction, e.profile);
  double R = 20.0 * std::max(1.0, sp.c * sp.c);
  EvansReport rep = winding(sp, default_chart(sp), right_half_plane_contour(1e-2, R, 256));
  REQUIRE(rep.winding.has_value());
  CHECK(*rep.winding == 0);
  CHECK(rep.winding_residual < 0.05);

  EvansReport scan = scan_real(sp, default_chart(sp), 0.05, 20.0, 60);
  CHECK(scan.roots.empty());
}

TEST_CASE("example 8 at D=1.5: winding -2 and the conjugate pole pair") {
  CatalogEntry e = catalog(8, {{"D", 1.5}});
  SpectralProblem sp = SpectralProblem::build(e.reaction, e.profile);
  Chart ch = default_chart(sp);

  EvansReport rep = winding(sp, ch, right_half_plane_contour(1e-2, 120.0, 256));
  REQUIRE(rep.winding.has_value());
  CHECK(*rep.winding == -2);

  auto poles = locate_poles(sp, ch, cplx(0.02, 0.05), cplx(4.0, 3.0), 12, 12);
  REQUIRE(poles.size() == 1);
  CHECK(std::abs(poles[0] - cplx(0.0921, 1.4482)) < 0.05);

  // Winding + conjugate pole pair: no right-half-plane eigenvalues.
  CHECK(*rep.winding + 2 * int(poles.size()) == 0);
}

TEST_CASE("conjugate symmetry of E under a real chart") {
  CatalogEntry e = catalog(5, {{"c", 1.0}});
  SpectralProblem sp = SpectralProblem::build(e.reaction, e.profile);
  Chart id = identity_chart(3);
  RiccatiOptions opt;
  opt.allow_rechart = false;
  std::mt19937 rng(22);
  std::uniform_real_distribution<double> Ur(0.5, 8.0), Ui(0.2, 3.0);
  int successes = 0;
  for (int trial = 0; trial < 20 && successes < 10; ++trial) {
    cplx lam(Ur(rng), Ui(rng));
    try {
      EvansValue up = evaluate(sp, id, lam, opt);
      EvansValue down = evaluate(sp, id, std::conj(lam), opt);
      if (up.pole || down.pole) continue;
      CHECK(std::abs(down.E - std::conj(up.E)) < 1e-6 * std::max(1.0, std::abs(up.E)));
      ++successes;
    } catch (const std::exception&) {
    }
  }
  CHECK(successes >= 10);
}

TEST_CASE("scan reports chart and seed provenance") {
  CatalogEntry e = catalog(7, {{"D", 1.0}});
  SpectralProblem sp = SpectralProblem::build(e.reaction, e.profile);
  RiccatiOptions opt;
  opt.seed = 777;
  EvansReport rep = scan_real(sp, default_chart(sp), 4.0, 6.0, 10, opt);
  CHECK(rep.chart == "t4_pulse");
  CHECK(rep.seed == 777);
  for (const auto& s : rep.samples) CHECK_FALSE(s.chart.empty());
}

TEST_CASE("scan_real argument validation") {
  CatalogEntry e = catalog(7, {{"D", 1.0}});
  SpectralProblem sp = SpectralProblem::build(e.reaction, e.profile);
  CHECK_THROWS_AS(scan_real(sp, default_chart(sp), 2.0, 1.0), std::invalid_argument);
}
