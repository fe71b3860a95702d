#include "hcx/hstructure.hpp"

#include "hcx/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hcx {

namespace {

constexpr double kExact = 1e-12;

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

} // namespace

HTriple HTriple::from_pair(const Mat4& j1, const Mat4& j2) {
  HTriple h({j1, j2, j1 * j2});
  const Mat4 minus_id = -identity4();
  for (int a = 1; a <= 3; ++a)
    if (max_abs_diff(h.J(a) * h.J(a), minus_id) > kExact)
      throw ValidationError("J" + std::to_string(a) + " does not square to -I");
  if (max_abs(j1 * j2 + j2 * j1) > kExact) throw ValidationError("J1 and J2 do not anticommute");
  return h;
}

double HTriple::quaternion_residual() const {
  const Mat4 minus_id = -identity4();
  double r = 0.0;
  for (int a = 1; a <= 3; ++a) r = std::max(r, max_abs_diff(J(a) * J(a), minus_id));
  r = std::max(r, max_abs(J(1) * J(2) + J(2) * J(1)));
  r = std::max(r, max_abs_diff(J(1) * J(2), J(3)));
  r = std::max(r, max_abs_diff(J(2) * J(3), J(1)));
  r = std::max(r, max_abs_diff(J(3) * J(1), J(2)));
  return r;
}

HTriple standard_h() {
  // Columns are images of e1..e4.
  return HTriple::from_pair(matrix_from_images("e2,-e1,-e4,e3"), matrix_from_images("e3,e4,-e1,-e2"));
}

Mat4 matrix_from_images(std::string_view images) {
  Mat4 m{};
  int col = 0;
  std::size_t start = 0;
  while (start <= images.size()) {
    auto end = images.find(',', start);
    if (end == std::string_view::npos) end = images.size();
    const std::string tok = trim(images.substr(start, end - start));
    if (col == kDim) throw ParseError("more than four images in '" + std::string(images) + "'");
    double sign = 1.0;
    std::size_t pos = 0;
    if (pos < tok.size() && (tok[pos] == '-' || tok[pos] == '+')) {
      sign = tok[pos] == '-' ? -1.0 : 1.0;
      ++pos;
    }
    if (tok.size() != pos + 2 || tok[pos] != 'e' || tok[pos + 1] < '1' || tok[pos + 1] > '4')
      throw ParseError("image must look like e1 or -e3, got '" + tok + "'");
    m[tok[pos + 1] - '1'][col] = sign;
    ++col;
    start = end + 1;
  }
  if (col != kDim) throw ParseError("need four images in '" + std::string(images) + "'");
  return m;
}

std::string images_string(const Mat4& j) {
  std::ostringstream os;
  for (int col = 0; col < kDim; ++col) {
    int row = -1;
    for (int r = 0; r < kDim; ++r) {
      if (j[r][col] == 0.0) continue;
      if (row >= 0 || std::abs(j[r][col]) != 1.0) throw ValidationError("column is not a signed unit vector");
      row = r;
    }
    if (row < 0) throw ValidationError("column is zero");
    if (col) os << ',';
    os << (j[row][col] < 0 ? "-" : "") << 'e' << row + 1;
  }
  return os.str();
}

bool CompatibilityReport::ok(double tol) const {
  return std::all_of(violation.begin(), violation.end(), [tol](double v) { return v <= tol; });
}

CompatibilityReport compatibility_residuals(const HTriple& h, const Signature& eps) {
  const Mat4 g = eps.metric();
  CompatibilityReport rep;
  for (int a = 1; a <= 3; ++a) {
    const Mat4 pulled = transpose(h.J(a)) * g * h.J(a);
    rep.violation[a - 1] = a == 1 ? max_abs_diff(pulled, g) : max_abs(pulled + g);
  }
  return rep;
}

CompatibilityReport verify_compatibility(const HTriple& h, const Signature& eps, double tol) {
  const CompatibilityReport rep = compatibility_residuals(h, eps);
  for (int a = 1; a <= 3; ++a) {
    const double v = rep.violation[a - 1];
    if (v > tol) {
      std::ostringstream os;
      os << "J" << a << " is not " << (a == 1 ? "Hermitian" : "skew-Hermitian") << " for signature "
         << eps.to_string() << " (violation " << v << ")";
      throw IncompatibleStructure(a, v, os.str());
    }
  }
  return rep;
}

Mat4 associated_form(const Mat4& j, const Signature& eps) {
  Mat4 f{};
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b) f[a][b] = eps[b] * j[b][a];
  return f;
}

StructureForms fundamental_forms(const HTriple& h, const Signature& eps) {
  StructureForms f;
  f.phi = associated_form(h.J(1), eps);
  f.g2 = associated_form(h.J(2), eps);
  f.g3 = associated_form(h.J(3), eps);
  f.symmetry_residual = std::max({max_abs(f.phi + transpose(f.phi)), max_abs_diff(f.g2, transpose(f.g2)),
                                  max_abs_diff(f.g3, transpose(f.g3))});
  return f;
}

} // namespace hcx
