#pragma once

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "evanslab/csv.hpp"
#include "evanslab/evans_closed_form.hpp"
#include "evanslab/root_finding.hpp"
#include "evanslab/serialize.hpp"
#include "evanslab/threading.hpp"

namespace evanslab::cli {

/// A fully resolved job. The front end (or a test) fills this in; `run`
/// executes it and writes artifacts.
struct JobConfig {
  std::string task;  // catalog | profile-check | essential | evans-scan | winding | summary-tables
  int example = 0;
  std::map<std::string, double> params;  // D, c, gamma, delta, L (profile), beta

  double scan_lo = 0.05, scan_hi = 10.0;
  int scan_n = 120;
  double contour_outer = 0.0;  // 0: auto (20 * max(1, |g|, c^2))
  double contour_inner = 1e-2;
  double L = 30.0, z0 = 0.0;
  unsigned seed = 20260824;
  int threads = 0;
  bool fail_on_unstable = false;
  std::string out;  // artifact path ("" = stdout)
};

inline nlohmann::json default_config_json() {
  JobConfig d;
  return {{"schema", kSchemaVersion},
          {"task", "catalog"},
          {"example", d.example},
          {"grid", {{"lo", d.scan_lo}, {"hi", d.scan_hi}, {"n", d.scan_n}}},
          {"contour", {{"outer", "auto: 20*max(1,|g|,c^2)"}, {"inner", d.contour_inner}}},
          {"L", d.L},
          {"z0", d.z0},
          {"seed", d.seed},
          {"threads", d.threads},
          {"fail_on_unstable", d.fail_on_unstable}};
}

namespace detail {

inline void emit(const JobConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text << '\n';
  } else {
    std::ofstream f(cfg.out);
    if (!f) throw std::runtime_error("cannot open output file: " + cfg.out);
    f << text << '\n';
  }
}

inline double auto_outer_radius(const SpectralProblem& sp) {
  return 20.0 * std::max({1.0, std::abs(sp.far.gu(+1)), std::abs(sp.far.gv(+1)),
                          std::abs(sp.far.gu(-1)), std::abs(sp.far.gv(-1)), sp.c * sp.c});
}

inline RiccatiOptions riccati_options(const JobConfig& cfg) {
  RiccatiOptions opt;
  opt.L = cfg.L;
  opt.z0 = cfg.z0;
  opt.seed = cfg.seed;
  return opt;
}

/// Instability verdict for one catalog wave: a positive real Riccati-Evans
/// root, or (for waves whose real scan is clean) a positive count of
/// right-half-plane eigenvalues from winding + located poles.
struct Verdict {
  bool unstable = false;
  std::string evidence;
};

inline Verdict classify(int example, const std::map<std::string, double>& params,
                        const JobConfig& cfg) {
  CatalogEntry e = catalog(example, params);
  Verdict v;
  if (e.profile.kind == ProfileKind::PiecewiseConstant) {
    // D = c = 0 pencil: real spectrum; scan the positive axis.
    PencilProblem pp = PencilProblem::from_profile(e.reaction, e.profile);
    auto scan = find_real_roots([&](double x) { return piecewise_evans(pp, cplx(x, 0.0)); }, 0.01, 25.0);
    v.unstable = !scan.roots.empty();
    v.evidence = v.unstable ? "pencil real root" : "no pencil roots in (0, 25]";
    return v;
  }
  SpectralProblem sp = SpectralProblem::build(e.reaction, e.profile);
  Chart ch = default_chart(sp);
  RiccatiOptions opt = riccati_options(cfg);
  EvansReport scan = scan_real(sp, ch, 0.05, 10.0, 100, opt);
  if (!scan.roots.empty()) {
    std::ostringstream os;
    os << "real eigenvalue at " << scan.roots.front().lambda.real();
    v.unstable = true;
    v.evidence = os.str();
    return v;
  }
  // No real roots: count right-half-plane eigenvalues by the argument
  // principle, correcting the winding by the located poles.
  double R = cfg.contour_outer > 0.0 ? cfg.contour_outer : auto_outer_radius(sp);
  EvansReport w = winding(sp, ch, right_half_plane_contour(cfg.contour_inner, R, 512), opt);
  auto poles_upper = locate_poles(sp, ch, cplx(2.0 * cfg.contour_inner, 0.05), cplx(6.0, 3.0), 14, 14, opt);
  int n_poles = 2 * static_cast<int>(poles_upper.size());  // conjugate pairs
  int n_roots = *w.winding + n_poles;
  std::ostringstream os;
  os << "winding " << *w.winding << " + " << n_poles << " poles -> " << n_roots << " roots";
  v.unstable = n_roots > 0;
  v.evidence = os.str();
  return v;
}

}  // namespace detail

/// Execute a job. Returns the process exit status: 0 success, 1 invalid
/// config / runtime failure (diagnostic on stderr), 2 instability detected
/// under --fail-on-unstable.
inline int run(const JobConfig& cfg) {
  using nlohmann::json;
  try {
    if (cfg.task == "catalog") {
      json j;
      j["schema"] = kSchemaVersion;
      json items = json::array();
      for (int id = 1; id <= 10; ++id) {
        CatalogEntry e = catalog(id);
        items.push_back({{"example", id},
                         {"shape", e.profile.shape() == WaveShape::Pulse ? "pulse" : "front"},
                         {"kind", e.profile.kind == ProfileKind::ClosedForm ? "closed-form" : "piecewise"},
                         {"c", e.profile.c},
                         {"D", e.profile.D},
                         {"parameters", e.reaction.parameters}});
      }
      j["examples"] = items;
      detail::emit(cfg, j.dump(2));
      return 0;
    }

    if (cfg.task == "profile-check") {
      CatalogEntry e = catalog(cfg.example, cfg.params);
      json j;
      j["schema"] = kSchemaVersion;
      j["example"] = cfg.example;
      if (e.profile.kind == ProfileKind::ClosedForm) {
        std::vector<double> grid;
        for (int i = 0; i <= 200; ++i) grid.push_back(-10.0 + 0.1 * i);
        double r = residual(e.reaction, e.profile, grid);
        j["residual"] = r;
        j["ok"] = r < 1e-6;
      } else {
        bool ok = validate_piecewise(e.reaction, e.profile);
        j["piecewise_valid"] = ok;
        j["ok"] = ok;
      }
      detail::emit(cfg, j.dump(2));
      return j["ok"].get<bool>() ? 0 : 1;
    }

    if (cfg.task == "essential") {
      CatalogEntry e = catalog(cfg.example, cfg.params);
      FarFieldData far = far_field(e.reaction, e.profile);
      double D = e.profile.D, c = e.profile.c;
      std::vector<BorderCurve> curves;
      for (int side : {+1, -1}) {
        double kmax = default_k_max(far.gu(side), far.gv(side), D);
        for (auto& bc : border_curves(far, D, c, side, kmax)) curves.push_back(std::move(bc));
      }
      std::ostringstream csv;
      write_border_csv(csv, curves);
      detail::emit(cfg, csv.str());
      if (cfg.fail_on_unstable) {
        for (int side : {+1, -1})
          if (border_stability(far, D, side).cls != BorderClass::Stable) return 2;
      }
      return 0;
    }

    if (cfg.task == "evans-scan") {
      CatalogEntry e = catalog(cfg.example, cfg.params);
      SpectralProblem sp = SpectralProblem::build(e.reaction, e.profile);
      EvansReport rep = scan_real(sp, default_chart(sp), cfg.scan_lo, cfg.scan_hi, cfg.scan_n,
                                  detail::riccati_options(cfg));
      detail::emit(cfg, to_json(rep).dump(2));
      if (cfg.fail_on_unstable)
        for (const auto& r : rep.roots)
          if (r.lambda.real() > 1e-6) return 2;
      return 0;
    }

    if (cfg.task == "winding") {
      CatalogEntry e = catalog(cfg.example, cfg.params);
      SpectralProblem sp = SpectralProblem::build(e.reaction, e.profile);
      double R = cfg.contour_outer > 0.0 ? cfg.contour_outer : detail::auto_outer_radius(sp);
      EvansReport rep = winding(sp, default_chart(sp), right_half_plane_contour(cfg.contour_inner, R, 512),
                                detail::riccati_options(cfg));
      detail::emit(cfg, to_json(rep).dump(2));
      if (cfg.fail_on_unstable && rep.winding && *rep.winding > 0) return 2;
      return 0;
    }

    if (cfg.task == "summary-tables") {
      // Representative catalog cases for each (D, c) class of Table 2.
      struct Row {
        const char* kase;
        const char* wave;
        int example;
        std::map<std::string, double> params;
      };
      std::vector<Row> rows = {
          {"D=0, c!=0", "pulse", 5, {}},
          {"D=0, c!=0", "front", 6, {}},
          {"D!=0,1, c=0", "pulse", 7, {{"D", 0.5}}},
          {"D!=0,1, c=0", "front", 8, {{"D", 1.5}}},
          {"D!=0,1, c!=0", "pulse", 9, {{"D", 0.5}, {"c", 1.5}}},
          {"D!=0,1, c!=0", "front", 10, {{"D", 0.3}, {"c", 0.3}}},
      };
      json items = json::array();
      bool any_unstable = false;
      for (const auto& row : rows) {
        detail::Verdict v = detail::classify(row.example, row.params, cfg);
        any_unstable = any_unstable || v.unstable;
        items.push_back({{"case", row.kase},
                         {"wave", row.wave},
                         {"example", row.example},
                         {"verdict", v.unstable ? "unstable" : "stable"},
                         {"evidence", v.evidence}});
      }
      json j{{"schema", kSchemaVersion}, {"rows", items}};
      detail::emit(cfg, j.dump(2));
      return cfg.fail_on_unstable && any_unstable ? 2 : 0;
    }

    std::cerr << "error: unknown task '" << cfg.task << "'\n";
    return 1;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 1;
  }
}

}  // namespace evanslab::cli
