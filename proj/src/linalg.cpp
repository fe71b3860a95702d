#include "hcx/linalg.hpp"

#include "hcx/errors.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace hcx {

Signature::Signature(const Vec4& eps) : eps_(eps) {
  for (double e : eps_)
    if (e != 1.0 && e != -1.0) throw ValidationError("signature entries must be +1 or -1");
}

Signature Signature::parse(std::string_view text) {
  Vec4 eps{};
  int n = 0;
  for (char ch : text) {
    if (ch == ' ' || ch == ',' || ch == '\t' || ch == '(' || ch == ')') continue;
    if (n == kDim) throw ParseError("signature has more than four signs: '" + std::string(text) + "'");
    if (ch == '+')
      eps[n++] = 1.0;
    else if (ch == '-')
      eps[n++] = -1.0;
    else
      throw ParseError("unexpected character in signature: '" + std::string(text) + "'");
  }
  if (n != kDim) throw ParseError("signature needs four signs: '" + std::string(text) + "'");
  return Signature(eps);
}

Mat4 Signature::metric() const { return diag4(eps_); }

std::string Signature::to_string() const {
  std::string s;
  for (double e : eps_) s += e > 0 ? '+' : '-';
  return s;
}

Mat4 identity4() { return diag4({1.0, 1.0, 1.0, 1.0}); }

Mat4 diag4(const Vec4& d) {
  Mat4 m{};
  for (int i = 0; i < kDim; ++i) m[i][i] = d[i];
  return m;
}

Mat4 transpose(const Mat4& m) {
  Mat4 t{};
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) t[i][j] = m[j][i];
  return t;
}

Mat4 operator*(const Mat4& a, const Mat4& b) {
  Mat4 r{};
  for (int i = 0; i < kDim; ++i)
    for (int k = 0; k < kDim; ++k)
      for (int j = 0; j < kDim; ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

Vec4 operator*(const Mat4& m, const Vec4& v) {
  Vec4 r{};
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) r[i] += m[i][j] * v[j];
  return r;
}

Mat4 operator-(const Mat4& a) { return -1.0 * a; }

Mat4 operator+(const Mat4& a, const Mat4& b) {
  Mat4 r{};
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) r[i][j] = a[i][j] + b[i][j];
  return r;
}

Mat4 operator-(const Mat4& a, const Mat4& b) {
  Mat4 r{};
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) r[i][j] = a[i][j] - b[i][j];
  return r;
}

Mat4 operator*(double s, const Mat4& m) {
  Mat4 r{};
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) r[i][j] = s * m[i][j];
  return r;
}

std::optional<Mat4> inverse(const Mat4& m, double rel_tol) {
  Mat4 a = m;
  Mat4 inv = identity4();
  const double scale = max_abs(m);
  if (scale == 0.0) return std::nullopt;
  for (int col = 0; col < kDim; ++col) {
    int pivot = col;
    for (int r = col + 1; r < kDim; ++r)
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    if (std::abs(a[pivot][col]) <= rel_tol * scale) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const double p = a[col][col];
    for (int j = 0; j < kDim; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (int r = 0; r < kDim; ++r) {
      if (r == col) continue;
      const double f = a[r][col];
      if (f == 0.0) continue;
      for (int j = 0; j < kDim; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

double determinant(const Mat4& m) {
  Mat4 a = m;
  double det = 1.0;
  for (int col = 0; col < kDim; ++col) {
    int pivot = col;
    for (int r = col + 1; r < kDim; ++r)
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    if (a[pivot][col] == 0.0) return 0.0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (int r = col + 1; r < kDim; ++r) {
      const double f = a[r][col] / a[col][col];
      for (int j = col; j < kDim; ++j) a[r][j] -= f * a[col][j];
    }
  }
  return det;
}

double max_abs(const Vec4& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double max_abs(const Mat4& m) {
  double r = 0.0;
  for (const auto& row : m) r = std::max(r, max_abs(row));
  return r;
}

double max_abs(const Tensor3& t) {
  double r = 0.0;
  for (const auto& m : t) r = std::max(r, max_abs(m));
  return r;
}

double max_abs(const Tensor4& t) {
  double r = 0.0;
  for (const auto& m : t) r = std::max(r, max_abs(m));
  return r;
}

double max_abs_diff(const Mat4& a, const Mat4& b) { return max_abs(a - b); }

double max_abs_diff(const Tensor3& a, const Tensor3& b) {
  double r = 0.0;
  for (int i = 0; i < kDim; ++i) r = std::max(r, max_abs_diff(a[i], b[i]));
  return r;
}

double max_abs_diff(const Tensor4& a, const Tensor4& b) {
  double r = 0.0;
  for (int i = 0; i < kDim; ++i) r = std::max(r, max_abs_diff(a[i], b[i]));
  return r;
}

Vec4 unit(int a) {
  Vec4 v{};
  v[a] = 1.0;
  return v;
}

double inner(const Signature& eps, const Vec4& x, const Vec4& y) {
  double s = 0.0;
  for (int a = 0; a < kDim; ++a) s += eps[a] * x[a] * y[a];
  return s;
}

double contract(const Tensor4& t, const Vec4& x, const Vec4& y, const Vec4& z, const Vec4& w) {
  double s = 0.0;
  for (int a = 0; a < kDim; ++a) {
    if (x[a] == 0.0) continue;
    for (int b = 0; b < kDim; ++b) {
      if (y[b] == 0.0) continue;
      for (int c = 0; c < kDim; ++c) {
        if (z[c] == 0.0) continue;
        for (int d = 0; d < kDim; ++d) {
          if (w[d] == 0.0) continue;
          s += t[a][b][c][d] * x[a] * y[b] * z[c] * w[d];
        }
      }
    }
  }
  return s;
}

} // namespace hcx
