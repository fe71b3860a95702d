#pragma once

// Almost hypercomplex triples H = (J1, J2, J3 = J1 J2) as constant matrices
// in an orthonormal frame, their compatibility with the metric (J1
// Hermitian, J2 and J3 skew-Hermitian) and the associated bilinear forms.

#include "hcx/linalg.hpp"

#include <array>
#include <string>
#include <string_view>

namespace hcx {

/// J e_a = sum_b m[b][a] e_b: column a holds the image of e_a.
class HTriple {
public:
  /// Completes the triple with J3 = J1 J2 and checks J_a^2 = -I and
  /// J1 J2 = -J2 J1 exactly (within 1e-12); throws ValidationError.
  static HTriple from_pair(const Mat4& j1, const Mat4& j2);

  /// 1-based alpha.
  const Mat4& J(int alpha) const { return j_.at(alpha - 1); }

  /// Largest violation of the quaternionic identities
  /// J_a^2 = -I, J1J2 = -J2J1 = J3, J2J3 = J1, J3J1 = J2.
  double quaternion_residual() const;

private:
  explicit HTriple(const std::array<Mat4, 3>& j) : j_(j) {}
  std::array<Mat4, 3> j_;
};

/// J1 x = (-y, x, v, -u), J2 x = (-u, -v, x, y), J3 x = (v, -u, y, -x)
/// on (x, y, u, v) components.
HTriple standard_h();

/// Matrix from images written as signed unit vectors, e.g. "e2,-e1,e4,-e3"
/// means J e1 = e2, J e2 = -e1, J e3 = e4, J e4 = -e3. Throws ParseError.
Mat4 matrix_from_images(std::string_view images);
/// Inverse of matrix_from_images; throws ValidationError when some column
/// is not a signed unit vector.
std::string images_string(const Mat4& j);

struct CompatibilityReport {
  /// max |J^T g J - g| for alpha = 1, max |J^T g J + g| for alpha = 2, 3.
  std::array<double, 3> violation{};
  bool ok(double tol = 1e-12) const;
};

CompatibilityReport compatibility_residuals(const HTriple& h, const Signature& eps);
/// Throws IncompatibleStructure naming the first alpha whose violation
/// exceeds `tol`.
CompatibilityReport verify_compatibility(const HTriple& h, const Signature& eps, double tol = 1e-12);

struct StructureForms {
  Mat4 phi{}; // Phi(e_a, e_b) = g(J1 e_a, e_b)
  Mat4 g2{};  // g(J2 e_a, e_b)
  Mat4 g3{};  // g(J3 e_a, e_b)
  /// Largest deviation from: phi antisymmetric, g2 and g3 symmetric.
  double symmetry_residual = 0.0;
};

/// form[a][b] = g(J e_a, e_b) = eps_b J[b][a].
Mat4 associated_form(const Mat4& j, const Signature& eps);

StructureForms fundamental_forms(const HTriple& h, const Signature& eps);

} // namespace hcx
