#include "hcx/homogeneous.hpp"

#include "hcx/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hcx {

namespace {

std::size_t check_square(const DynMatrix& m, const char* what) {
  const std::size_t n = m.size();
  if (n == 0) throw ValidationError(std::string(what) + " is empty");
  for (const auto& row : m)
    if (row.size() != n) throw ValidationError(std::string(what) + " is not square");
  return n;
}

double frob_dot(const DynMatrix& a, const DynMatrix& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) s += a[i][j] * b[i][j];
  return s;
}

} // namespace

DynMatrix commutator(const DynMatrix& a, const DynMatrix& b) {
  const std::size_t n = check_square(a, "matrix");
  if (check_square(b, "matrix") != n) throw ValidationError("commutator of matrices of different sizes");
  DynMatrix r(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j] - b[i][k] * a[k][j];
  return r;
}

StructureConstants structure_constants(const LieAlgebraBasis& basis, double closure_tol) {
  const std::size_t n = check_square(basis.generators[0], "generator X1");
  for (int a = 1; a < kDim; ++a)
    if (check_square(basis.generators[a], "generator") != n)
      throw ValidationError("generators have different sizes");

  // Normal equations of the Frobenius least-squares problem.
  Mat4 gram{};
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b) gram[a][b] = frob_dot(basis.generators[a], basis.generators[b]);
  const auto gram_inv = inverse(gram, 1e-12);
  if (!gram_inv) throw ValidationError("generators are linearly dependent");

  StructureConstants sc;
  for (int a = 0; a < kDim; ++a)
    for (int b = a + 1; b < kDim; ++b) {
      const DynMatrix br = commutator(basis.generators[a], basis.generators[b]);
      Vec4 rhs{};
      for (int d = 0; d < kDim; ++d) rhs[d] = frob_dot(basis.generators[d], br);
      const Vec4 coeff = *gram_inv * rhs;
      double residual = 0.0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          double v = br[i][j];
          for (int d = 0; d < kDim; ++d) v -= coeff[d] * basis.generators[d][i][j];
          residual = std::max(residual, std::abs(v));
        }
      if (residual > closure_tol) {
        throw NotClosed("[X" + std::to_string(a + 1) + ", X" + std::to_string(b + 1) +
                        "] leaves the generator span (residual " + std::to_string(residual) + ")");
      }
      for (int d = 0; d < kDim; ++d) {
        // Exact small integers stay exact.
        const double v = std::abs(coeff[d] - std::round(coeff[d])) < 1e-14 ? std::round(coeff[d]) : coeff[d];
        sc.c[a][b][d] = v;
        sc.c[b][a][d] = -v;
      }
    }
  return sc;
}

double jacobi_residual(const StructureConstants& sc) {
  const auto& c = sc.c;
  double worst = 0.0;
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b)
      for (int cc = 0; cc < kDim; ++cc)
        for (int f = 0; f < kDim; ++f) {
          double s = 0.0;
          for (int e = 0; e < kDim; ++e) s += c[a][b][e] * c[e][cc][f] + c[b][cc][e] * c[e][a][f] + c[cc][a][e] * c[e][b][f];
          worst = std::max(worst, std::abs(s));
        }
  return worst;
}

Tensor3 koszul_connection(const StructureConstants& sc, const Signature& eps) {
  // lowered[a][b][c] = g([X_a, X_b], X_c) = eps_c c^c_ab
  Tensor3 lowered{};
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b)
      for (int c = 0; c < kDim; ++c) lowered[a][b][c] = eps[c] * sc.c[a][b][c];
  Tensor3 gamma{};
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b)
      for (int c = 0; c < kDim; ++c) {
        const double low = 0.5 * (lowered[a][b][c] - lowered[b][c][a] + lowered[c][a][b]);
        gamma[a][b][c] = eps[c] * low;
      }
  return gamma;
}

Tensor4 curvature_homogeneous(const Tensor3& gamma, const StructureConstants& sc, const Signature& eps) {
  // R(X_a,X_b)X_c = nabla_a nabla_b X_c - nabla_b nabla_a X_c - nabla_[X_a,X_b] X_c
  Tensor4 r{};
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b)
      for (int c = 0; c < kDim; ++c)
        for (int d = 0; d < kDim; ++d) {
          double v = 0.0;
          for (int f = 0; f < kDim; ++f)
            v += gamma[b][c][f] * gamma[a][f][d] - gamma[a][c][f] * gamma[b][f][d] - sc.c[a][b][f] * gamma[f][c][d];
          r[a][b][c][d] = eps[d] * v;
        }
  return r;
}

FrameSnapshot homogeneous_snapshot(const LieAlgebraBasis& basis) {
  const StructureConstants sc = structure_constants(basis);
  FrameSnapshot s;
  s.eps = basis.eps;
  s.brackets = sc.c;
  s.gamma = koszul_connection(sc, basis.eps);
  s.riemann = curvature_homogeneous(s.gamma, sc, basis.eps);
  return s;
}

} // namespace hcx
