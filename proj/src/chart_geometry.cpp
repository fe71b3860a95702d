#include "hcx/chart_geometry.hpp"

#include "hcx/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace hcx {

namespace {

std::string point_string(const Point& p) {
  std::ostringstream os;
  os.precision(17);
  os << '(' << p[0] << ", " << p[1] << ", " << p[2] << ", " << p[3] << ')';
  return os.str();
}

Mat4 frame_inverse(const Mat4& frame, const Point* p = nullptr) {
  auto inv = inverse(frame);
  if (!inv) {
    throw SingularFrame("frame matrix is not invertible" + (p ? " at " + point_string(*p) : std::string()));
  }
  return *inv;
}

// Induced metric with exact value and first derivatives; hess left zero.
JetMatrix pullback_first_order(const Embedding& emb, const Point& p) {
  const std::vector<Jet2> z = emb.map(p);
  if (z.size() != emb.ambient.size()) {
    throw ValidationError("embedding returned " + std::to_string(z.size()) + " components, ambient has " +
                          std::to_string(emb.ambient.size()));
  }
  JetMatrix g{};
  for (int i = 0; i < kDim; ++i) {
    for (int j = i; j < kDim; ++j) {
      Jet2 gij;
      for (std::size_t k = 0; k < z.size(); ++k) {
        const double eta = emb.ambient[k];
        const auto& zk = z[k];
        gij.value += eta * zk.grad[i] * zk.grad[j];
        for (int m = 0; m < kDim; ++m) gij.grad[m] += eta * (zk.hess[m][i] * zk.grad[j] + zk.grad[i] * zk.hess[m][j]);
      }
      g[i][j] = gij;
      g[j][i] = gij;
    }
  }
  return g;
}

} // namespace

Mat4 values(const JetMatrix& m) {
  Mat4 v{};
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) v[i][j] = m[i][j].value;
  return v;
}

JetMatrix pullback_metric(const Embedding& emb, const Point& p, double fd_step) {
  JetMatrix g = pullback_first_order(emb, p);
  // hess[m][n] of g_ij from differences of the exact d_m g_ij along u^n.
  std::array<JetMatrix, kDim> plus, minus;
  for (int n = 0; n < kDim; ++n) {
    Point q = p;
    q[n] += fd_step;
    plus[n] = pullback_first_order(emb, q);
    q[n] = p[n] - fd_step;
    minus[n] = pullback_first_order(emb, q);
  }
  for (int i = 0; i < kDim; ++i) {
    for (int j = i; j < kDim; ++j) {
      Mat4 h{};
      for (int m = 0; m < kDim; ++m)
        for (int n = 0; n < kDim; ++n)
          h[m][n] = (plus[n][i][j].grad[m] - minus[n][i][j].grad[m]) / (2.0 * fd_step);
      for (int m = 0; m < kDim; ++m)
        for (int n = m; n < kDim; ++n) {
          const double s = 0.5 * (h[m][n] + h[n][m]);
          g[i][j].hess[m][n] = s;
          g[i][j].hess[n][m] = s;
        }
      g[j][i] = g[i][j];
    }
  }
  return g;
}

ChartMetric induced_metric(Embedding emb, double fd_step) {
  int pos = 0, neg = 0;
  for (double a : emb.ambient) (a > 0 ? pos : neg) += 1;
  ChartMetric m;
  m.components = [emb = std::move(emb), fd_step](const Point& p) { return pullback_metric(emb, p, fd_step); };
  // Ambient signature bounds the induced one; catalog validation checks the
  // actual frame signature.
  m.positive = std::min(pos, 2);
  m.negative = std::min(neg, 2);
  return m;
}

Christoffel christoffel(const JetMatrix& g) {
  const Mat4 gv = values(g);
  const auto ginv_opt = inverse(gv);
  if (!ginv_opt) throw SingularMetric("metric value matrix is singular");
  const Mat4& ginv = *ginv_opt;

  // first[l][i][j] = d_i g_jl + d_j g_il - d_l g_ij
  Tensor3 first{};
  // dfirst[m][l][i][j] = d_m first[l][i][j]
  std::array<Tensor3, kDim> dfirst{};
  for (int l = 0; l < kDim; ++l)
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) {
        first[l][i][j] = g[j][l].grad[i] + g[i][l].grad[j] - g[i][j].grad[l];
        for (int m = 0; m < kDim; ++m)
          dfirst[m][l][i][j] = g[j][l].hess[m][i] + g[i][l].hess[m][j] - g[i][j].hess[m][l];
      }

  // d_m g^kl = -g^ka d_m g_ab g^bl
  std::array<Mat4, kDim> dginv{};
  for (int m = 0; m < kDim; ++m) {
    Mat4 dg{};
    for (int a = 0; a < kDim; ++a)
      for (int b = 0; b < kDim; ++b) dg[a][b] = g[a][b].grad[m];
    dginv[m] = -(ginv * dg * ginv);
  }

  Christoffel c;
  for (int k = 0; k < kDim; ++k)
    for (int i = 0; i < kDim; ++i)
      for (int j = i; j < kDim; ++j) {
        double v = 0.0;
        for (int l = 0; l < kDim; ++l) v += ginv[k][l] * first[l][i][j];
        c.value[k][i][j] = c.value[k][j][i] = 0.5 * v;
        for (int m = 0; m < kDim; ++m) {
          double d = 0.0;
          for (int l = 0; l < kDim; ++l) d += dginv[m][k][l] * first[l][i][j] + ginv[k][l] * dfirst[m][l][i][j];
          c.deriv[m][k][i][j] = c.deriv[m][k][j][i] = 0.5 * d;
        }
      }
  return c;
}

Christoffel christoffel(const ChartMetric& g, const Point& p) { return christoffel(g.components(p)); }

Tensor4 riemann_coord(const JetMatrix& g, const Christoffel& gamma) {
  const auto& G = gamma.value;
  const auto& dG = gamma.deriv;
  // up[l][i][j][k] = R^l_ijk, R(d_i, d_j) d_k = R^l_ijk d_l
  Tensor4 up{};
  for (int l = 0; l < kDim; ++l)
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j)
        for (int k = 0; k < kDim; ++k) {
          double v = dG[i][l][j][k] - dG[j][l][i][k];
          for (int m = 0; m < kDim; ++m) v += G[l][i][m] * G[m][j][k] - G[l][j][m] * G[m][i][k];
          up[l][i][j][k] = v;
        }
  Tensor4 low{};
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k)
        for (int l = 0; l < kDim; ++l) {
          double v = 0.0;
          for (int m = 0; m < kDim; ++m) v += g[l][m].value * up[m][i][j][k];
          low[i][j][k][l] = v;
        }
  return low;
}

Tensor4 riemann_coord(const ChartMetric& g, const Point& p) {
  const JetMatrix gj = g.components(p);
  return riemann_coord(gj, christoffel(gj));
}

Mat4 covariant_to_frame(const Mat4& t, const Mat4& frame) { return transpose(frame) * t * frame; }

Tensor4 covariant_to_frame(const Tensor4& t, const Mat4& E) {
  // One slot at a time: 4 * 4^5 multiply-adds instead of 4^8.
  Tensor4 a{}, b{};
  for (int p = 0; p < kDim; ++p)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k)
        for (int l = 0; l < kDim; ++l) {
          double v = 0.0;
          for (int i = 0; i < kDim; ++i) v += t[i][j][k][l] * E[i][p];
          a[p][j][k][l] = v;
        }
  for (int p = 0; p < kDim; ++p)
    for (int q = 0; q < kDim; ++q)
      for (int k = 0; k < kDim; ++k)
        for (int l = 0; l < kDim; ++l) {
          double v = 0.0;
          for (int j = 0; j < kDim; ++j) v += a[p][j][k][l] * E[j][q];
          b[p][q][k][l] = v;
        }
  for (int p = 0; p < kDim; ++p)
    for (int q = 0; q < kDim; ++q)
      for (int r = 0; r < kDim; ++r)
        for (int l = 0; l < kDim; ++l) {
          double v = 0.0;
          for (int k = 0; k < kDim; ++k) v += b[p][q][k][l] * E[k][r];
          a[p][q][r][l] = v;
        }
  for (int p = 0; p < kDim; ++p)
    for (int q = 0; q < kDim; ++q)
      for (int r = 0; r < kDim; ++r)
        for (int s = 0; s < kDim; ++s) {
          double v = 0.0;
          for (int l = 0; l < kDim; ++l) v += a[p][q][r][l] * E[l][s];
          b[p][q][r][s] = v;
        }
  return b;
}

Vec4 vector_to_frame(const Vec4& v, const Mat4& frame) { return frame_inverse(frame) * v; }

namespace {

Tensor3 brackets_from(const JetMatrix& E, const Mat4& Einv) {
  Tensor3 out{};
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b) {
      Vec4 coord{};
      for (int i = 0; i < kDim; ++i) {
        double v = 0.0;
        for (int j = 0; j < kDim; ++j) v += E[j][a].value * E[i][b].grad[j] - E[j][b].value * E[i][a].grad[j];
        coord[i] = v;
      }
      out[a][b] = Einv * coord;
    }
  return out;
}

} // namespace

Vec4 frame_bracket(const FrameField& frame, int a, int b, const Point& p) {
  const JetMatrix E = frame.coeffs(p);
  return brackets_from(E, frame_inverse(values(E), &p))[a][b];
}

double orthonormality_residual(const ChartMetric& g, const FrameField& frame, const Point& p) {
  const Mat4 gf = covariant_to_frame(values(g.components(p)), values(frame.coeffs(p)));
  return max_abs_diff(gf, frame.eps.metric());
}

FrameSnapshot snapshot(const ChartMetric& g, const FrameField& frame, const Point& p) {
  const JetMatrix gj = g.components(p);
  for (int i = 0; i < kDim; ++i)
    for (int j = i + 1; j < kDim; ++j)
      if (gj[i][j].value != gj[j][i].value) throw ValidationError("metric components are not symmetric");
  const Christoffel chr = christoffel(gj);
  const JetMatrix E = frame.coeffs(p);
  const Mat4 Ev = values(E);
  const Mat4 Einv = frame_inverse(Ev, &p);

  FrameSnapshot s;
  s.point = p;
  s.eps = frame.eps;
  // nabla_{e_a} e_b = E^i_a (d_i E^k_b + Gamma^k_ij E^j_b) d_k
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b) {
      Vec4 coord{};
      for (int k = 0; k < kDim; ++k) {
        double v = 0.0;
        for (int i = 0; i < kDim; ++i) {
          double inner_sum = E[k][b].grad[i];
          for (int j = 0; j < kDim; ++j) inner_sum += chr.value[k][i][j] * Ev[j][b];
          v += Ev[i][a] * inner_sum;
        }
        coord[k] = v;
      }
      s.gamma[a][b] = Einv * coord;
    }
  s.riemann = covariant_to_frame(riemann_coord(gj, chr), Ev);
  s.brackets = brackets_from(E, Einv);
  return s;
}

} // namespace hcx
