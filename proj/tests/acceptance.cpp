// Acceptance suite: one PASS/FAIL line per criterion, followed by the
// failing items. Every closed form is asserted as published; where a
// published form does not hold the criterion stays red and the failing
// items say by how much.
//
//   acceptance                 run every criterion
//   acceptance --criterion N   run criterion N only

#include "hcx/catalog.hpp"
#include "hcx/errors.hpp"
#include "hcx/runner.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace hcx;

namespace {

class Checks {
public:
  /// |got - want| <= tol.
  void absolute(const std::string& label, double got, double want, double tol) {
    record(label, got, want, std::abs(got - want) <= tol, tol);
  }
  /// |got - want| <= tol * max(1, |want|).
  void relative(const std::string& label, double got, double want, double tol) {
    record(label, got, want, std::abs(got - want) <= tol * std::max(1.0, std::abs(want)), tol);
  }
  void at_most(const std::string& label, double got, double bound) {
    ++total_;
    if (!(got <= bound)) fail(label + " = " + fmt(got) + ", bound " + fmt(bound));
  }
  void at_least(const std::string& label, double got, double bound) {
    ++total_;
    if (!(got >= bound)) fail(label + " = " + fmt(got) + ", must be >= " + fmt(bound));
  }
  void truth(const std::string& label, bool got, bool want) {
    ++total_;
    if (got != want) fail(label + " = " + (got ? "true" : "false") + ", expected " + (want ? "true" : "false"));
  }
  void fail(const std::string& what) { failures_.push_back(what); }

  bool ok() const { return failures_.empty(); }
  int total() const { return total_; }
  const std::vector<std::string>& failures() const { return failures_; }

  static std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
  }

private:
  void record(const std::string& label, double got, double want, bool pass, double tol) {
    ++total_;
    if (!pass)
      fail(label + " = " + fmt(got) + ", expected " + fmt(want) + " (|diff| " + fmt(std::abs(got - want)) +
           ", tol " + fmt(tol) + ")");
  }
  int total_ = 0;
  std::vector<std::string> failures_;
};

std::string at(const Point& p) {
  std::ostringstream os;
  os << "(" << p[0] << ", " << p[1] << ", " << p[2] << ", " << p[3] << ")";
  return os.str();
}

std::string idx(int a) { return std::to_string(a); }

struct Evaluated {
  PointAnalysis pa;
  ClassVerdict verdict;
};

Evaluated evaluate(const Example& ex, const NamedStructure& st, const Point& p) {
  auto pa = analyze(ex.snapshot(p), st.h, ex.tolerances().zero);
  const auto v = classify(pa, st.h, ex.tolerances());
  return {std::move(pa), v};
}

double R(const Evaluated& e, int a, int b, int c, int d) { return e.pa.snap.riemann[a - 1][b - 1][c - 1][d - 1]; }

/// Riemann pins R_abcd given as 1-based digit strings.
void riemann_pins(Checks& c, const std::string& where, const Evaluated& e,
                  const std::vector<std::pair<std::string, double>>& pins, double tol) {
  for (const auto& [k, v] : pins)
    c.absolute(where + " R_" + k, R(e, k[0] - '0', k[1] - '0', k[2] - '0', k[3] - '0'), v, tol);
}

// ---------------------------------------------------------------------------

void criterion1(Checks& c) {
  const Example ex = build("engel_a");
  const auto& st = ex.structure("H");
  std::vector<Point> pts = ex.default_points();
  for (const auto& p : random_points(ex, 3, 1)) pts.push_back(p);
  const double tol = 1e-8;
  for (const auto& p : pts) {
    const auto e = evaluate(ex, st, p);
    const std::string w = "engel_a " + at(p);
    riemann_pins(c, w, e,
                 {{"1221", 0.75}, {"2332", 1}, {"1331", 0.25}, {"2142", -0.25}, {"2442", -0.25}, {"3143", -0.25},
                  {"3443", 0.25}},
                 tol);
    const auto& n = e.pa.report.norms;
    const auto& s = e.pa.report.scalars;
    c.absolute(w + " |F1|^2", n.F[0], 0, tol);
    c.absolute(w + " |N1|^2", n.N[0], 8, tol);
    c.absolute(w + " tau", s.tau, 0, tol);
    c.absolute(w + " tau*1", s.tau_star[0], -2, tol);
    c.absolute(w + " |N2|^2", n.N[1], 0, tol);
    c.absolute(w + " |N3|^2", n.N[2], -8, tol);
    c.absolute(w + " tau*2", s.tau_star[1], 0, tol);
    c.absolute(w + " tau*3", s.tau_star[2], 0, tol);
    c.absolute(w + " |F2|^2", n.F[1], 0, tol);
    c.absolute(w + " |F3|^2", n.F[2], 0, tol);
  }
}

void criterion2(Checks& c) {
  const Example ex = build("engel_b");
  const double tol = 1e-8;
  std::vector<Point> pts = ex.default_points();
  for (const auto& p : random_points(ex, 3, 2)) pts.push_back(p);
  for (const auto& name : {"H", "H_prime"})
    for (const auto& p : pts) {
      const auto e = evaluate(ex, ex.structure(name), p);
      const std::string w = std::string("engel_b/") + name + " " + at(p);
      const auto& n = e.pa.report.norms;
      const auto& s = e.pa.report.scalars;
      c.absolute(w + " |N1|^2", n.N[0], 0, tol);
      c.absolute(w + " |N2|^2", n.N[1], 8, tol);
      c.absolute(w + " |N3|^2", n.N[2], -8, tol);
      c.absolute(w + " tau", s.tau, 0, tol);
      for (int a = 0; a < 3; ++a) {
        c.absolute(w + " |F" + idx(a + 1) + "|^2", n.F[a], 0, tol);
        c.absolute(w + " tau*" + idx(a + 1), s.tau_star[a], 0, tol);
      }
    }
}

void criterion3(Checks& c) {
  const Example ex = build("semi_space");
  const auto& st = ex.structure("");
  const double tol = 1e-8;
  std::vector<Point> pts = ex.default_points();
  for (const auto& p : random_points(ex, 3, 3)) pts.push_back(p);
  std::vector<VerdictRecord> recs;
  for (const auto& p : pts) {
    const auto e = evaluate(ex, st, p);
    const std::string w = "semi_space " + at(p);
    const auto k = constant_curvature_check(e.pa.snap, tol);
    c.truth(w + " constant curvature detected", k.has_value(), true);
    if (k) c.absolute(w + " k", *k, -1, tol);
    c.at_most(w + " Einstein residual |rho - tau/4 g|", e.pa.report.einstein_residual, tol);
    const auto& n = e.pa.report.norms;
    const auto& s = e.pa.report.scalars;
    for (int a = 0; a < 3; ++a) c.absolute(w + " |N" + idx(a + 1) + "|^2", n.N[a], 0, tol);
    c.absolute(w + " |F1|^2", n.F[0], 8, tol);
    c.absolute(w + " |theta1|^2", n.theta[0], 4, tol);
    c.absolute(w + " |F2|^2", n.F[1], -16, tol);
    c.absolute(w + " |F3|^2", n.F[2], -16, tol);
    c.absolute(w + " |theta2|^2", n.theta[1], -16, tol);
    c.absolute(w + " |theta3|^2", n.theta[2], -16, tol);
    c.absolute(w + " tau", s.tau, -12, tol);
    c.absolute(w + " tau*1", s.tau_star[0], 4, tol);
    c.absolute(w + " tau*2", s.tau_star[1], 0, tol);
    c.absolute(w + " tau*3", s.tau_star[2], 0, tol);
    c.truth(w + " in W", e.verdict.in_W, true);
    for (int a = 0; a < 3; ++a)
      c.truth(w + " isotropic Kaehler J" + idx(a + 1), e.verdict.alpha[a].isotropic_kaehler, false);
  }
}

void criterion4(Checks& c) {
  const Example ex = build("quarter_space");
  const auto& st = ex.structure("");
  const double tol = 1e-8;
  std::vector<Point> pts = ex.default_points();
  for (const auto& p : random_points(ex, 3, 4)) pts.push_back(p);
  for (const auto& p : pts) {
    const auto e = evaluate(ex, st, p);
    const std::string w = "quarter_space " + at(p);
    riemann_pins(c, w, e, {{"1221", -1}, {"3443", 1}}, tol);
    const auto& s = e.pa.report.scalars;
    for (int a = 0; a < kDim; ++a) c.absolute(w + " rho_" + idx(a + 1) + idx(a + 1), s.ricci[a][a], -1, tol);
    c.absolute(w + " k(e1,e2)", sectional(e.pa.snap, 0, 1), -1, tol);
    c.absolute(w + " k(e3,e4)", sectional(e.pa.snap, 2, 3), 1, tol);
    c.absolute(w + " tau", s.tau, 0, tol);
    for (int a = 0; a < 3; ++a) c.absolute(w + " tau*" + idx(a + 1), s.tau_star[a], 0, tol);
    c.truth(w + " Kaehler J1", e.verdict.alpha[0].kaehler, true);
    const auto& n = e.pa.report.norms;
    for (int a = 1; a < 3; ++a) {
      c.absolute(w + " |N" + idx(a + 1) + "|^2", n.N[a], 0, tol);
      c.absolute(w + " |F" + idx(a + 1) + "|^2", n.F[a], 0, tol);
      c.absolute(w + " |theta" + idx(a + 1) + "|^2", n.theta[a], 0, tol);
      c.at_least(w + " max|N" + idx(a + 1) + "|", e.pa.report.max_N[a], 0.1);
    }
  }
}

/// Printed closed forms of `keys` from the catalog against computed values.
void printed_forms(Checks& c, const Example& ex, const NamedStructure& st, const Point& p, const Record& rec,
                   const FrameSnapshot& snap, const std::vector<std::string>& keys, double tol) {
  const auto printed = ex.expected(st, p, true);
  for (const auto& k : keys) {
    const auto it = printed.find(k);
    if (it == printed.end()) {
      c.fail(ex.id() + ": no printed closed form for " + k);
      continue;
    }
    c.relative(ex.id() + " " + at(p) + " " + k, lookup_invariant(rec, snap, k), it->second, tol);
  }
}

/// The runner's record for one (example, structure, point).
Record record_for(const Example& ex, const Point& p) {
  RunConfig cfg;
  cfg.points = {p};
  cfg.threads = 1;
  const RunResult r = run({ex}, cfg);
  if (r.records.empty()) throw ConsistencyError(ex.id() + ": no record at " + at(p));
  return r.records.front();
}

void criterion5(Checks& c) {
  const Example ex = build("cylinder_pseudo");
  const auto& st = ex.structure("");
  const std::vector<std::string> keys = {
      "norm_N.1",  "norm_N.2",  "norm_N.3",  "norm_F.1",  "norm_F.2",  "norm_F.3",  "norm_theta.1",
      "norm_theta.2", "norm_theta.3", "R.2332", "R.2442", "R.3443", "ricci.22", "ricci.33", "ricci.44",
      "tau",       "tau_star.1", "tau_star.2", "tau_star.3"};
  for (double u4 : {0.5, 1.0, 2.0}) {
    const Point p{0.3, 0.2, 0.5, u4};
    const Record rec = record_for(ex, p);
    printed_forms(c, ex, st, p, rec, ex.snapshot(p), keys, 1e-6);
  }
}

void criterion6(Checks& c) {
  const Example ex = build("cx_cylinder");
  const auto& st = ex.structure("");
  std::vector<Point> pts = ex.default_points();
  for (const auto& p : random_points(ex, 3, 6)) pts.push_back(p);
  std::vector<VerdictRecord> recs;
  for (const auto& p : pts) {
    const auto e = evaluate(ex, st, p);
    const std::string w = "cx_cylinder " + at(p);
    c.at_most(w + " max|R|", max_abs(e.pa.snap.riemann), 1e-8);
    for (int a = 0; a < 3; ++a) c.at_most(w + " max|F" + idx(a + 1) + "|", max_abs(e.pa.tensors.F[a]), 1e-8);
    c.truth(w + " pseudo-hyper-Kaehler", e.verdict.pseudo_hyper_kaehler, true);
    recs.push_back({ex.id(), st.name, e.verdict});
  }
  try {
    const auto rep = theorem_crosschecks(recs);
    c.at_least("theorem 1.4 hypothesis met", rep.exercised[3], 1);
  } catch (const TheoremViolation& e) {
    c.fail(e.what());
  }
}

void criterion7(Checks& c) {
  const Example ex = build("cx_cone");
  const auto& st = ex.structure("");
  const double tol = 1e-6;
  for (const auto& p : ex.default_points()) {
    const auto e = evaluate(ex, st, p);
    const std::string w = "cx_cone " + at(p);
    c.at_most(w + " max|R|", max_abs(e.pa.snap.riemann), 1e-6);
    for (int a = 0; a < 3; ++a) c.at_most(w + " max|N" + idx(a + 1) + "|", max_abs(e.pa.tensors.N[a]), tol);
    c.truth(w + " Kaehler J1", e.verdict.alpha[0].kaehler, true);
    const double r = p[0] * p[0] + p[2] * p[2], lam = p[0] / r, mu = p[2] / r;
    const double q = mu * mu - lam * lam;
    const auto& n = e.pa.report.norms;
    c.relative(w + " |F2|^2", n.F[1], 16 * q, tol);
    c.relative(w + " 2|theta2|^2", 2 * n.theta[1], 16 * q, tol);
    c.relative(w + " |F3|^2", n.F[2], 4 * q, tol);
    c.relative(w + " 2|theta3|^2", 2 * n.theta[2], 4 * q, tol);
  }
}

void criterion8(Checks& c) {
  const Example ex = build("cx_sphere");
  const auto& st = ex.structure("");
  const double tol = 1e-6;
  for (std::size_t k = 0; k < 2; ++k) {
    const Point p = ex.default_points().at(k);
    const auto e = evaluate(ex, st, p);
    const std::string w = "cx_sphere " + at(p);
    const double D = std::cos(p[0]) * std::cos(p[0]) + std::sinh(p[2]) * std::sinh(p[2]);
    const double nu_cf =
        (std::pow(std::sinh(2 * p[2]), 2) - std::pow(std::sin(2 * p[0]), 2)) / (4 * std::pow(D, 4));
    const double nus_cf = std::sin(2 * p[0]) * std::sinh(2 * p[2]) / (2 * std::pow(D, 4));
    const auto tr = totally_real_curvatures(e.pa.snap, st.h, tol);
    c.relative(w + " nu vs closed form", tr.nu, nu_cf, tol);
    c.relative(w + " nu*2 vs closed form", tr.nu_star2, nus_cf, tol);
    c.at_most(w + " spread over totally real sections", tr.spread, tol);
    c.at_most(w + " |rho - 2(nu g - nu*2 g2)|", tr.almost_einstein_residual, tol);
    const auto& s = e.pa.report.scalars;
    const auto& n = e.pa.report.norms;
    c.relative(w + " tau = 8 nu", s.tau, 8 * tr.nu, tol);
    c.relative(w + " tau*1", s.tau_star[0], 0, tol);
    c.relative(w + " tau*3", s.tau_star[2], 0, tol);
    c.relative(w + " tau*2 = 8 nu*2", s.tau_star[1], 8 * tr.nu_star2, tol);
    c.relative(w + " |N1|^2 = -32 nu", n.N[0], -32 * tr.nu, tol);
    c.relative(w + " |N3|^2 = -2 |nabla J3|^2", n.N[2], -2 * n.nablaJ[2], tol);
    c.relative(w + " |N3|^2 = -32 nu", n.N[2], -32 * tr.nu, tol);
  }
}

void criterion9(Checks& c) {
  const Example ex = build("lie_a");
  const auto e = evaluate(ex, ex.structure(""), ex.default_points()[0]);
  const double tol = 1e-10;
  const std::string w = "lie_a";
  riemann_pins(c, w, e, {{"1221", 1}, {"1331", 1}, {"2332", -1}}, tol);
  const auto& n = e.pa.report.norms;
  const auto& s = e.pa.report.scalars;
  c.absolute(w + " |N1|^2", n.N[0], -8, tol);
  c.absolute(w + " |N3|^2", n.N[2], -8, tol);
  c.absolute(w + " |nabla J1|^2", n.nablaJ[0], -4, tol);
  c.absolute(w + " |theta1|^2", n.theta[0], -1, tol);
  // The chain -|nabla J2|^2 = -2|theta2|^2 = -8.
  c.absolute(w + " |nabla J2|^2", n.nablaJ[1], 8, tol);
  c.absolute(w + " |theta2|^2", n.theta[1], 4, tol);
  c.absolute(w + " |nabla J3|^2", n.nablaJ[2], 12, tol);
  c.absolute(w + " |theta3|^2", n.theta[2], 1, tol);
  c.absolute(w + " tau", s.tau, 2, tol);
  c.absolute(w + " tau*1", s.tau_star[0], -2, tol);
  c.absolute(w + " tau*2", s.tau_star[1], 0, tol);
  c.absolute(w + " tau*3", s.tau_star[2], 0, tol);
  c.truth(w + " integrable J1", e.verdict.alpha[0].integrable, false);
  c.truth(w + " integrable J2", e.verdict.alpha[1].integrable, true);
  c.truth(w + " integrable J3", e.verdict.alpha[2].integrable, false);
}

void criterion10(Checks& c) {
  const Example ex = build("lie_b");
  const auto& st = ex.structure("");
  const auto e = evaluate(ex, st, ex.default_points()[0]);
  const double tol = 1e-10;
  const std::string w = "lie_b";
  c.at_most(w + " max|R|", max_abs(e.pa.snap.riemann), tol);
  c.truth(w + " Kaehler J1", e.verdict.alpha[0].kaehler, true);
  // F_beta(X, Y, Z) = -theta_beta(J_other X) g(Y, J_other Z), other = 3 for beta = 2 and 2 for beta = 3.
  double worst[2] = {0, 0};
  for (int beta = 2; beta <= 3; ++beta) {
    const Mat4& jo = st.h.J(beta == 2 ? 3 : 2);
    const Vec4& th = e.pa.tensors.theta[beta - 1];
    for (int a = 0; a < kDim; ++a)
      for (int b = 0; b < kDim; ++b)
        for (int d = 0; d < kDim; ++d) {
          double th_jx = 0.0;
          for (int q = 0; q < kDim; ++q) th_jx += jo[q][a] * th[q];
          const double rhs = -th_jx * inner(ex.eps(), unit(b), jo * unit(d));
          worst[beta - 2] = std::max(worst[beta - 2], std::abs(e.pa.tensors.F[beta - 1][a][b][d] - rhs));
        }
  }
  c.at_most(w + " F2 vs rank-one form", worst[0], tol);
  c.at_most(w + " F3 vs rank-one form", worst[1], tol);
  const auto& n = e.pa.report.norms;
  for (int b = 1; b < 3; ++b) {
    c.absolute(w + " |N" + idx(b + 1) + "|^2", n.N[b], -8, tol);
    c.absolute(w + " |nabla J" + idx(b + 1) + "|^2", n.nablaJ[b], 4, tol);
    c.absolute(w + " |F" + idx(b + 1) + "|^2", n.F[b], 4, tol);
    c.absolute(w + " |theta" + idx(b + 1) + "|^2", n.theta[b], 1, tol);
  }
}

void criterion11(Checks& c) {
  for (const auto& id : list()) {
    Example ex = [&] {
      try {
        return build(id);
      } catch (const ValidationError& e) {
        c.fail(std::string("frame orthonormality / structure validation: ") + e.what());
        throw;
      }
    }();
    c.truth(id + " validates", true, true);
    std::vector<Point> pts = ex.default_points();
    if (ex.kind() != Construction::Lie)
      for (const auto& p : random_points(ex, 5, 11)) pts.push_back(p);
    for (const auto& p : pts) {
      const std::string w = id + " " + at(p);
      const auto r = snapshot_residuals(ex.snapshot(p));
      c.at_most(w + " curvature symmetries", std::max({r.antisym_first, r.antisym_last, r.pair_symmetry}), 1e-9);
      c.at_most(w + " first Bianchi", r.bianchi, 1e-9);
      c.at_most(w + " nabla g", r.metricity, 1e-10);
      c.at_most(w + " torsion", r.torsion, 1e-10);
      if (ex.kind() == Construction::Chart) {
        const auto fd = fd_check(ex, p);
        c.at_most(w + " AD vs finite differences (gradient)", fd.grad, 1e-5);
        c.at_most(w + " AD vs finite differences (Hessian)", fd.hess, 1e-5);
      }
    }
  }
  // The published Engel cross term must be rejected by the orthonormality validator.
  std::string flipped = source("engel_a");
  flipped.replace(flipped.find("metric 2 3 = u1"), 15, "metric 2 3 = -u1");
  try {
    Example::compile(parse_manifold(flipped));
    c.fail("engel_a with -u1 cross term passed orthonormality validation");
  } catch (const ValidationError& e) {
    c.truth("engel_a with -u1 cross term rejected",
            std::string(e.what()).find("orthonormal") != std::string::npos, true);
  }
  // Theorem 1.1 on the semi-space.
  const Example semi = build("semi_space");
  std::vector<VerdictRecord> recs;
  for (const auto& p : semi.default_points())
    recs.push_back({semi.id(), "H", evaluate(semi, semi.structure(""), p).verdict});
  try {
    const auto rep = theorem_crosschecks(recs);
    c.at_least("theorem 1.1 hypothesis met on semi_space", rep.exercised[0], 1);
  } catch (const TheoremViolation& e) {
    c.fail(e.what());
  }
}

void criterion12(Checks& c) {
  VerifyOptions opt;
  opt.seed = 12;
  opt.format = OutputFormat::Records;
  std::ostringstream a, b;
  const auto sa = verify_all(opt, a);
  opt.threads = 3;
  const auto sb = verify_all(opt, b);
  c.truth("verify_all output byte-identical across runs", a.str() == b.str(), true);
  c.at_least("verify_all output size", static_cast<double>(a.str().size()), 1000);
  c.truth("verify_all exit codes agree", sa.exit_code == sb.exit_code, true);
}

struct Criterion {
  int number;
  const char* title;
  std::function<void(Checks&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "engel_a curvature table, norms and scalar curvatures", criterion1},
      {2, "engel_b norms and scalar curvatures for H and H'", criterion2},
      {3, "semi_space constant curvature, Einstein, norms, in W", criterion3},
      {4, "quarter_space curvature, Kaehler J1, isotropic Norden structures", criterion4},
      {5, "cylinder_pseudo closed forms in u4 at u4 = 0.5, 1, 2", criterion5},
      {6, "cx_cylinder flat and pseudo-hyper-Kaehler, theorem 1.4", criterion6},
      {7, "cx_cone flat, hypercomplex, Kaehler J1, norm closed forms", criterion7},
      {8, "cx_sphere totally real curvatures and their relations", criterion8},
      {9, "lie_a curvature, norms and integrability pattern", criterion9},
      {10, "lie_b flat, Kaehler J1, rank-one structural tensors", criterion10},
      {11, "property suites: AD, curvature identities, metricity, validation, theorem 1.1", criterion11},
      {12, "verify_all determinism", criterion12},
  };
  return all;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "Run a single criterion")->check(CLI::Range(1, 12));
  CLI11_PARSE(app, argc, argv);

  int failed = 0;
  for (const auto& cr : criteria()) {
    if (only != 0 && cr.number != only) continue;
    Checks c;
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.fail(std::string("error: ") + e.what());
    }
    std::cout << (c.ok() ? "PASS" : "FAIL") << " criterion " << cr.number << ": " << cr.title << " ("
              << c.total() - static_cast<int>(c.failures().size()) << "/" << c.total() << " checks)\n";
    for (const auto& f : c.failures()) std::cout << "    " << f << '\n';
    if (!c.ok()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
