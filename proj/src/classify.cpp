#include "hcx/classify.hpp"

#include "hcx/errors.hpp"

#include <algorithm>
#include <cmath>

namespace hcx {

namespace {

/// theta(J e_c)
double theta_j(const Vec4& theta, const Mat4& j, int c) {
  double s = 0.0;
  for (int d = 0; d < kDim; ++d) s += j[d][c] * theta[d];
  return s;
}

double delta(int a, int b) { return a == b ? 1.0 : 0.0; }

double f_scale(const Tensor3& f) { return std::max(1.0, max_abs(f)); }

/// F(e_a, e_b, J e_c)
double f_jz(const Tensor3& f, const Mat4& j, int a, int b, int c) {
  double s = 0.0;
  for (int d = 0; d < kDim; ++d) s += j[d][c] * f[a][b][d];
  return s;
}

} // namespace

double w4_residual(const StructuralTensors& t, const HTriple& h, const Signature& eps) {
  const Mat4& j = h.J(1);
  const Tensor3& f = t.F[0];
  const Vec4& th = t.theta[0];
  double worst = 0.0;
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b)
      for (int c = 0; c < kDim; ++c) {
        const double rhs = 0.5 * (eps[a] * delta(a, b) * th[c] - eps[a] * delta(a, c) * th[b] -
                                  eps[a] * j[a][b] * theta_j(th, j, c) + eps[a] * j[a][c] * theta_j(th, j, b));
        worst = std::max(worst, std::abs(f[a][b][c] - rhs));
      }
  return worst;
}

double w1_residual(const StructuralTensors& t, const HTriple& h, const Signature& eps, int alpha) {
  const Mat4& j = h.J(alpha);
  const Tensor3& f = t.F[alpha - 1];
  const Vec4& th = t.theta[alpha - 1];
  double worst = 0.0;
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b)
      for (int c = 0; c < kDim; ++c) {
        const double rhs = 0.25 * (eps[a] * delta(a, b) * th[c] + eps[a] * delta(a, c) * th[b] +
                                   eps[a] * j[a][b] * theta_j(th, j, c) + eps[a] * j[a][c] * theta_j(th, j, b));
        worst = std::max(worst, std::abs(f[a][b][c] - rhs));
      }
  return worst;
}

double cyclic_residual(const Tensor3& f) {
  double worst = 0.0;
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b)
      for (int c = 0; c < kDim; ++c) worst = std::max(worst, std::abs(f[a][b][c] + f[b][c][a] + f[c][a][b]));
  return worst;
}

double cyclic_j_residual(const Tensor3& f, const Mat4& j) {
  double worst = 0.0;
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b)
      for (int c = 0; c < kDim; ++c)
        worst = std::max(worst, std::abs(f_jz(f, j, a, b, c) + f_jz(f, j, b, c, a) + f_jz(f, j, c, a, b)));
  return worst;
}

bool is_kaehler(const StructuralTensors& t, int alpha, double tol) { return max_abs(t.F[alpha - 1]) <= tol; }

bool is_hermitian_W4(const StructuralTensors& t, const HTriple& h, const Signature& eps, double tol) {
  return w4_residual(t, h, eps) <= tol * f_scale(t.F[0]);
}

bool is_almost_kaehler(const StructuralTensors& t, double tol) {
  return cyclic_residual(t.F[0]) <= tol * f_scale(t.F[0]);
}

bool is_norden_W1(const StructuralTensors& t, const HTriple& h, const Signature& eps, int alpha, double tol) {
  return w1_residual(t, h, eps, alpha) <= tol * f_scale(t.F[alpha - 1]);
}

std::pair<bool, bool> norden_W2_W3(const StructuralTensors& t, const HTriple& h, int alpha, double tol) {
  const Tensor3& f = t.F[alpha - 1];
  const double scale = f_scale(f);
  return {cyclic_j_residual(f, h.J(alpha)) <= tol * scale, cyclic_residual(f) <= tol * scale};
}

bool is_integrable(const StructuralTensors& t, int alpha, double tol) { return max_abs(t.N[alpha - 1]) <= tol; }

bool is_hypercomplex(const StructuralTensors& t, double tol) {
  int zero = 0;
  for (int a = 1; a <= 3; ++a) zero += is_integrable(t, a, tol) ? 1 : 0;
  if (zero == 2) throw ConsistencyError("exactly two Nijenhuis tensors vanish");
  return zero == 3;
}

bool is_isotropic_kaehler(const SignedNorms& n, int alpha, double tol) {
  return std::abs(n.nablaJ[alpha - 1]) <= tol;
}

ClassVerdict classify(const PointAnalysis& pa, const HTriple& h, const Tolerances& tol) {
  const StructuralTensors& t = pa.tensors;
  const Signature& eps = pa.snap.eps;
  ClassVerdict v;
  for (int a = 1; a <= 3; ++a) {
    AlphaVerdict& av = v.alpha[a - 1];
    av.kaehler = is_kaehler(t, a, tol.zero);
    av.integrable = is_integrable(t, a, tol.zero);
    av.isotropic_kaehler = is_isotropic_kaehler(pa.report.norms, a, tol.zero);
    if (a == 1) {
      av.main_class_W = is_hermitian_W4(t, h, eps, tol.match);
      av.almost_kaehler = is_almost_kaehler(t, tol.match);
    } else {
      av.main_class_W = is_norden_W1(t, h, eps, a, tol.match);
      const auto [w2, w3] = norden_W2_W3(t, h, a, tol.match);
      av.norden_W2 = w2;
      av.norden_W3 = w3;
    }
  }
  v.in_W = std::all_of(v.alpha.begin(), v.alpha.end(), [](const AlphaVerdict& a) { return a.main_class_W; });
  v.pseudo_hyper_kaehler = std::all_of(v.alpha.begin(), v.alpha.end(), [](const AlphaVerdict& a) { return a.kaehler; });
  v.hypercomplex = is_hypercomplex(t, tol.zero);
  v.flat = pa.report.flat;
  return v;
}

ClassVerdict aggregate(const std::vector<ClassVerdict>& verdicts) {
  if (verdicts.empty()) return {};
  ClassVerdict out = verdicts.front();
  auto and_opt = [](std::optional<bool>& acc, const std::optional<bool>& x) {
    if (acc && x) *acc = *acc && *x;
  };
  for (std::size_t i = 1; i < verdicts.size(); ++i) {
    const ClassVerdict& v = verdicts[i];
    for (int a = 0; a < 3; ++a) {
      AlphaVerdict& o = out.alpha[a];
      const AlphaVerdict& x = v.alpha[a];
      o.kaehler = o.kaehler && x.kaehler;
      o.integrable = o.integrable && x.integrable;
      o.isotropic_kaehler = o.isotropic_kaehler && x.isotropic_kaehler;
      o.main_class_W = o.main_class_W && x.main_class_W;
      and_opt(o.almost_kaehler, x.almost_kaehler);
      and_opt(o.norden_W2, x.norden_W2);
      and_opt(o.norden_W3, x.norden_W3);
    }
    out.in_W = out.in_W && v.in_W;
    out.pseudo_hyper_kaehler = out.pseudo_hyper_kaehler && v.pseudo_hyper_kaehler;
    out.hypercomplex = out.hypercomplex && v.hypercomplex;
    out.flat = out.flat && v.flat;
  }
  return out;
}

TheoremReport theorem_crosschecks(const std::vector<VerdictRecord>& records) {
  TheoremReport rep;
  auto fail = [](const VerdictRecord& r, const std::string& thm, const std::string& why) {
    throw TheoremViolation("theorem " + thm + " violated by " + r.example + "/" + r.structure + ": " + why);
  };
  for (const auto& r : records) {
    const auto& al = r.verdict.alpha;
    int in_main = 0;
    for (const auto& a : al) in_main += a.main_class_W ? 1 : 0;
    if (in_main >= 2) {
      ++rep.exercised[0];
      if (in_main != 3) fail(r, "1.1", "two main classes hold but the third does not");
    }
    bool counted = false;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        if (a != b && al[a].kaehler && al[b].main_class_W) {
          if (!counted) ++rep.exercised[1];
          counted = true;
          if (!r.verdict.pseudo_hyper_kaehler)
            fail(r, "1.2", "K(J" + std::to_string(a + 1) + ") and W(J" + std::to_string(b + 1) +
                               ") hold but not every J is Kaehler");
        }
    const bool any_iso = std::any_of(al.begin(), al.end(), [](const AlphaVerdict& x) { return x.isotropic_kaehler; });
    if (r.verdict.in_W && any_iso) {
      ++rep.exercised[2];
      const bool all_iso = std::all_of(al.begin(), al.end(), [](const AlphaVerdict& x) { return x.isotropic_kaehler; });
      if (!all_iso) fail(r, "1.3", "in W with one isotropic Kaehler J but not all three");
    }
    if (r.verdict.pseudo_hyper_kaehler) {
      ++rep.exercised[3];
      if (!r.verdict.flat) fail(r, "1.4", "pseudo-hyper-Kaehler but not flat");
    }
  }
  for (int i = 0; i < 4; ++i)
    if (rep.exercised[i] == 0) rep.notes.push_back("theorem 1." + std::to_string(i + 1) + " holds vacuously");
  return rep;
}

} // namespace hcx
