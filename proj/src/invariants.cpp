#include "hcx/invariants.hpp"

#include "hcx/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hcx {

namespace {

Vec4 column(const Mat4& m, int a) {
  Vec4 v{};
  for (int i = 0; i < kDim; ++i) v[i] = m[i][a];
  return v;
}

/// [x, y] for constant frame combinations x, y.
Vec4 bracket(const Tensor3& c, const Vec4& x, const Vec4& y) {
  Vec4 r{};
  for (int a = 0; a < kDim; ++a) {
    if (x[a] == 0.0) continue;
    for (int b = 0; b < kDim; ++b) {
      if (y[b] == 0.0) continue;
      for (int d = 0; d < kDim; ++d) r[d] += x[a] * y[b] * c[a][b][d];
    }
  }
  return r;
}

/// (nabla_x J) y for frame-component vectors.
Vec4 apply_nabla(const Tensor3& nabla, const Vec4& x, const Vec4& y) {
  Vec4 r{};
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b) {
      const double w = x[a] * y[b];
      if (w == 0.0) continue;
      for (int d = 0; d < kDim; ++d) r[d] += w * nabla[a][b][d];
    }
  return r;
}

Vec4 add(const Vec4& a, const Vec4& b) {
  Vec4 r{};
  for (int i = 0; i < kDim; ++i) r[i] = a[i] + b[i];
  return r;
}

Vec4 sub(const Vec4& a, const Vec4& b) {
  Vec4 r{};
  for (int i = 0; i < kDim; ++i) r[i] = a[i] - b[i];
  return r;
}

} // namespace

Tensor3 nabla_J(const FrameSnapshot& snap, const Mat4& j) {
  const auto& G = snap.gamma;
  Tensor3 n{};
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b)
      for (int d = 0; d < kDim; ++d) {
        double v = 0.0;
        for (int c = 0; c < kDim; ++c) v += j[c][b] * G[a][c][d] - j[d][c] * G[a][b][c];
        n[a][b][d] = v;
      }
  return n;
}

Tensor3 f_tensor(const FrameSnapshot& snap, const Mat4& j) {
  const Tensor3 n = nabla_J(snap, j);
  Tensor3 f{};
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b)
      for (int c = 0; c < kDim; ++c) f[a][b][c] = snap.eps[c] * n[a][b][c];
  return f;
}

Tensor3 f_tensor_via_form(const FrameSnapshot& snap, const Mat4& j) {
  const Mat4 form = associated_form(j, snap.eps);
  const auto& G = snap.gamma;
  Tensor3 f{};
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b)
      for (int c = 0; c < kDim; ++c) {
        double v = 0.0;
        for (int d = 0; d < kDim; ++d) v -= G[a][b][d] * form[d][c] + G[a][c][d] * form[b][d];
        f[a][b][c] = v;
      }
  return f;
}

Tensor3 nijenhuis(const FrameSnapshot& snap, const Mat4& j) {
  const auto& c = snap.brackets;
  Tensor3 n{};
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b) {
      const Vec4 x = unit(a), y = unit(b);
      const Vec4 jx = column(j, a), jy = column(j, b);
      Vec4 v = bracket(c, x, y);
      v = add(v, j * bracket(c, x, jy));
      v = add(v, j * bracket(c, jx, y));
      v = sub(v, bracket(c, jx, jy));
      n[a][b] = v;
    }
  return n;
}

Tensor3 nijenhuis_via_nabla(const Tensor3& nabla, const Mat4& j) {
  Tensor3 n{};
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b) {
      const Vec4 x = unit(a), y = unit(b);
      const Vec4 jx = column(j, a), jy = column(j, b);
      Vec4 v = sub(j * apply_nabla(nabla, x, y), j * apply_nabla(nabla, y, x));
      v = sub(v, apply_nabla(nabla, jx, y));
      v = add(v, apply_nabla(nabla, jy, x));
      n[a][b] = v;
    }
  return n;
}

Vec4 lie_form(const Tensor3& f, const Signature& eps) {
  Vec4 t{};
  for (int c = 0; c < kDim; ++c)
    for (int a = 0; a < kDim; ++a) t[c] += eps[a] * f[a][a][c];
  return t;
}

StructuralTensors structural_tensors(const FrameSnapshot& snap, const HTriple& h, double route_tol) {
  StructuralTensors t;
  for (int al = 0; al < 3; ++al) {
    const Mat4& j = h.J(al + 1);
    t.nablaJ[al] = nabla_J(snap, j);
    t.F[al] = f_tensor(snap, j);
    t.N[al] = nijenhuis(snap, j);
    t.theta[al] = lie_form(t.F[al], snap.eps);
    t.form_route_residual = std::max(t.form_route_residual, max_abs_diff(t.F[al], f_tensor_via_form(snap, j)));
  }
  if (t.form_route_residual > route_tol) {
    std::ostringstream os;
    os << "F via nabla J and via the associated form differ by " << t.form_route_residual;
    throw ConsistencyError(os.str());
  }
  return t;
}

SignedNorms signed_norms(const StructuralTensors& t, const Signature& eps) {
  SignedNorms n;
  for (int al = 0; al < 3; ++al) {
    double nj = 0.0, f = 0.0, nn = 0.0, th = 0.0;
    for (int a = 0; a < kDim; ++a) {
      th += eps[a] * t.theta[al][a] * t.theta[al][a];
      for (int b = 0; b < kDim; ++b)
        for (int c = 0; c < kDim; ++c) {
          const double w = eps[a] * eps[b] * eps[c];
          nj += w * t.nablaJ[al][a][b][c] * t.nablaJ[al][a][b][c];
          f += w * t.F[al][a][b][c] * t.F[al][a][b][c];
          nn += w * t.N[al][a][b][c] * t.N[al][a][b][c];
        }
    }
    n.nablaJ[al] = nj;
    n.F[al] = f;
    n.N[al] = nn;
    n.theta[al] = th;
  }
  return n;
}

RicciScalars ricci_and_scalars(const FrameSnapshot& snap, const HTriple& h) {
  const auto& R = snap.riemann;
  const auto& eps = snap.eps;
  RicciScalars s;
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b)
      for (int c = 0; c < kDim; ++c) s.ricci[a][b] += eps[c] * R[c][a][b][c];
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b) s.tau += eps[a] * eps[b] * R[a][b][b][a];
  for (int al = 0; al < 3; ++al) {
    const Mat4& j = h.J(al + 1);
    double herm = 0.0, nord = 0.0;
    for (int a = 0; a < kDim; ++a)
      for (int b = 0; b < kDim; ++b) {
        const double w = eps[a] * eps[b];
        const Vec4 ea = unit(a), eb = unit(b);
        herm += w * contract(R, ea, column(j, a), eb, column(j, b));
        nord += w * contract(R, ea, eb, column(j, b), ea);
      }
    s.tau_star_hermitian[al] = 0.5 * herm;
    s.tau_star_norden[al] = nord;
    s.tau_star[al] = al == 0 ? s.tau_star_hermitian[al] : s.tau_star_norden[al];
  }
  return s;
}

double pi1(const Signature& eps, const Vec4& x, const Vec4& y, const Vec4& z, const Vec4& w) {
  return inner(eps, y, z) * inner(eps, x, w) - inner(eps, x, z) * inner(eps, y, w);
}

double sectional(const FrameSnapshot& snap, const Vec4& x, const Vec4& y) {
  const double den = pi1(snap.eps, x, y, y, x);
  if (std::abs(den) < 1e-12) throw DegenerateSection("section is degenerate: pi1(x,y,y,x) = 0");
  return contract(snap.riemann, x, y, y, x) / den;
}

double sectional(const FrameSnapshot& snap, int a, int b) { return sectional(snap, unit(a), unit(b)); }

Mat4 sectional_matrix(const FrameSnapshot& snap) {
  Mat4 k{};
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b)
      if (a != b) k[a][b] = sectional(snap, a, b);
  return k;
}

std::optional<double> constant_curvature_check(const FrameSnapshot& snap, double tol) {
  const double k = sectional(snap, 0, 1);
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b)
      for (int c = 0; c < kDim; ++c)
        for (int d = 0; d < kDim; ++d) {
          const double p = pi1(snap.eps, unit(a), unit(b), unit(c), unit(d));
          if (std::abs(snap.riemann[a][b][c][d] - k * p) > tol) return std::nullopt;
        }
  return k;
}

TotallyRealCurvatures totally_real_curvatures(const FrameSnapshot& snap, const HTriple& h, double spread_tol) {
  const Mat4& j2 = h.J(2);
  const auto& eps = snap.eps;
  TotallyRealCurvatures out;
  for (int a = 0; a < kDim; ++a)
    for (int b = a + 1; b < kDim; ++b) {
      const Vec4 x = unit(a), y = unit(b);
      const Vec4 jx = column(j2, a), jy = column(j2, b);
      const bool orthogonal = std::abs(inner(eps, x, jx)) < 1e-12 && std::abs(inner(eps, x, jy)) < 1e-12 &&
                              std::abs(inner(eps, y, jx)) < 1e-12 && std::abs(inner(eps, y, jy)) < 1e-12;
      const double den = pi1(eps, x, y, y, x);
      if (!orthogonal || std::abs(den) < 1e-12) continue;
      TotallyRealSection s;
      s.a = a;
      s.b = b;
      s.nu = contract(snap.riemann, x, y, y, x) / den;
      s.nu_star2 = contract(snap.riemann, x, y, y, jx) / den;
      out.sections.push_back(s);
    }
  if (out.sections.empty()) throw NoAdmissibleSection("no frame pair spans a nondegenerate totally real section");
  out.nu = out.sections.front().nu;
  out.nu_star2 = out.sections.front().nu_star2;
  for (const auto& s : out.sections)
    out.spread = std::max({out.spread, std::abs(s.nu - out.nu), std::abs(s.nu_star2 - out.nu_star2)});
  out.pointwise_constant = out.spread <= spread_tol;

  const Mat4 g = eps.metric();
  const Mat4 g2 = associated_form(j2, eps);
  const Mat4 rho = ricci_and_scalars(snap, h).ricci;
  out.almost_einstein_residual = max_abs_diff(rho, 2.0 * (out.nu * g - out.nu_star2 * g2));
  return out;
}

PointAnalysis analyze(const FrameSnapshot& snap, const HTriple& h, double tol_zero) {
  PointAnalysis pa;
  pa.snap = snap;
  pa.tensors = structural_tensors(snap, h);
  InvariantReport& r = pa.report;
  r.point = snap.point;
  r.norms = signed_norms(pa.tensors, snap.eps);
  for (int al = 0; al < 3; ++al) {
    r.max_F[al] = max_abs(pa.tensors.F[al]);
    r.max_N[al] = max_abs(pa.tensors.N[al]);
  }
  r.scalars = ricci_and_scalars(snap, h);
  r.sectional = sectional_matrix(snap);
  r.constant_curvature = constant_curvature_check(snap, tol_zero);
  try {
    const TotallyRealCurvatures tr = totally_real_curvatures(snap, h, tol_zero);
    if (tr.pointwise_constant) {
      r.nu = tr.nu;
      r.nu_star2 = tr.nu_star2;
    }
  } catch (const NoAdmissibleSection&) {
    // nu and nu*_2 stay undefined for this structure.
  }
  r.max_riemann = max_abs(snap.riemann);
  r.flat = r.max_riemann <= tol_zero;
  r.einstein_residual = max_abs_diff(r.scalars.ricci, (r.scalars.tau / 4.0) * snap.eps.metric());
  r.einstein = r.einstein_residual <= tol_zero;
  r.residuals = snapshot_residuals(snap);
  return pa;
}

} // namespace hcx
