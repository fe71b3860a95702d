#pragma once

// Pointwise invariants of an almost hypercomplex pseudo-Hermitian structure,
// computed from a FrameSnapshot and an HTriple: covariant derivatives of the
// J's, the structural tensors F, the Nijenhuis tensors, Lie forms, signed
// norms, Ricci tensor and scalar curvatures, sectional curvatures and the
// totally real curvatures with respect to J2.

#include "hcx/frame_snapshot.hpp"
#include "hcx/hstructure.hpp"

#include <array>
#include <optional>
#include <vector>

namespace hcx {

/// Triple of per-alpha quantities, index alpha - 1.
template <class T>
using PerAlpha = std::array<T, 3>;

/// nabla[a][b][d] = d-th frame component of (nabla_{e_a} J) e_b.
Tensor3 nabla_J(const FrameSnapshot& snap, const Mat4& j);

/// F[a][b][c] = g((nabla_{e_a} J) e_b, e_c).
Tensor3 f_tensor(const FrameSnapshot& snap, const Mat4& j);
/// The same tensor as (nabla_{e_a} g_J)(e_b, e_c), g_J = g(J., .).
Tensor3 f_tensor_via_form(const FrameSnapshot& snap, const Mat4& j);

/// N[a][b][d] = d-th frame component of
/// N(e_a, e_b) = [e_a,e_b] + J[e_a,Je_b] + J[Je_a,e_b] - [Je_a,Je_b],
/// expanded through the bracket coefficients (J is frame-constant).
Tensor3 nijenhuis(const FrameSnapshot& snap, const Mat4& j);
/// Torsion-free rewrite N(x,y) = J(nabla_x J)y - J(nabla_y J)x
/// - (nabla_{Jx} J)y + (nabla_{Jy} J)x; an independent route for testing.
Tensor3 nijenhuis_via_nabla(const Tensor3& nabla, const Mat4& j);

/// theta(e_c) = sum_a eps_a F(e_a, e_a, e_c).
Vec4 lie_form(const Tensor3& f, const Signature& eps);

struct StructuralTensors {
  PerAlpha<Tensor3> nablaJ{};
  PerAlpha<Tensor3> F{};
  PerAlpha<Tensor3> N{};
  PerAlpha<Vec4> theta{};
  /// max |F - F via the associated form| over alpha.
  double form_route_residual = 0.0;
};

/// Throws ConsistencyError when the two F routes differ by more than
/// `route_tol`.
StructuralTensors structural_tensors(const FrameSnapshot& snap, const HTriple& h, double route_tol = 1e-10);

struct SignedNorms {
  PerAlpha<double> nablaJ{}; // sum eps_a eps_b g(nabla_a J e_b, nabla_a J e_b)
  PerAlpha<double> F{};      // sum eps_a eps_b eps_c F_abc^2
  PerAlpha<double> N{};      // sum eps_a eps_b g(N_ab, N_ab)
  PerAlpha<double> theta{};  // sum eps_a theta_a^2
};

SignedNorms signed_norms(const StructuralTensors& t, const Signature& eps);

struct RicciScalars {
  Mat4 ricci{}; // rho_ab = sum_c eps_c R(e_c, e_a, e_b, e_c)
  double tau = 0.0;
  /// tau*_1 by the Hermitian formula, tau*_2 and tau*_3 by the Norden one.
  PerAlpha<double> tau_star{};
  /// 1/2 sum eps_a eps_b R(e_a, J e_a, e_b, J e_b) for every alpha.
  PerAlpha<double> tau_star_hermitian{};
  /// sum eps_a eps_b R(e_a, e_b, J e_b, e_a) for every alpha.
  PerAlpha<double> tau_star_norden{};
};

RicciScalars ricci_and_scalars(const FrameSnapshot& snap, const HTriple& h);

/// pi1(x,y,z,w) = g(y,z) g(x,w) - g(x,z) g(y,w).
double pi1(const Signature& eps, const Vec4& x, const Vec4& y, const Vec4& z, const Vec4& w);

/// k(x, y) = R(x,y,y,x) / pi1(x,y,y,x); throws DegenerateSection when
/// |pi1(x,y,y,x)| < 1e-12.
double sectional(const FrameSnapshot& snap, const Vec4& x, const Vec4& y);
/// 0-based frame indices.
double sectional(const FrameSnapshot& snap, int a, int b);
/// k(e_a, e_b) for a != b, 0 on the diagonal.
Mat4 sectional_matrix(const FrameSnapshot& snap);

/// k when R = k pi1 holds componentwise within `tol`, otherwise empty.
std::optional<double> constant_curvature_check(const FrameSnapshot& snap, double tol = 1e-9);

struct TotallyRealSection {
  int a = 0;
  int b = 0; // 0-based frame indices
  double nu = 0.0;
  double nu_star2 = 0.0;
};

struct TotallyRealCurvatures {
  std::vector<TotallyRealSection> sections;
  double nu = 0.0;       // value on the first admissible section
  double nu_star2 = 0.0;
  double spread = 0.0;   // max deviation of any section from the first
  bool pointwise_constant = false;
  /// max |rho - 2(nu g - nu*_2 g2)|; meaningful when pointwise_constant.
  double almost_einstein_residual = 0.0;
};

/// Enumerates frame pairs spanning a nondegenerate plane orthogonal to its
/// J2-image. Throws NoAdmissibleSection when there is none.
TotallyRealCurvatures totally_real_curvatures(const FrameSnapshot& snap, const HTriple& h,
                                              double spread_tol = 1e-8);

struct InvariantReport {
  Point point{};
  SignedNorms norms;
  PerAlpha<double> max_F{};
  PerAlpha<double> max_N{};
  RicciScalars scalars;
  Mat4 sectional{};
  std::optional<double> constant_curvature;
  std::optional<double> nu;
  std::optional<double> nu_star2;
  double max_riemann = 0.0;
  double einstein_residual = 0.0; // max |rho - (tau/4) g|
  bool flat = false;
  bool einstein = false;
  SnapshotResiduals residuals;
};

struct PointAnalysis {
  FrameSnapshot snap;
  StructuralTensors tensors;
  InvariantReport report;
};

/// Everything at one point. `tol_zero` decides flatness, the Einstein
/// condition and constant curvature.
PointAnalysis analyze(const FrameSnapshot& snap, const HTriple& h, double tol_zero = 1e-8);

} // namespace hcx
