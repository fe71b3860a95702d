#pragma once

// Lie-algebra backend for left-invariant metrics: structure constants from
// matrix generators, the Levi-Civita connection by the Koszul formula, and
// the (constant) curvature in the invariant frame. No coordinates involved.

#include "hcx/frame_snapshot.hpp"
#include "hcx/linalg.hpp"

#include <array>
#include <vector>

namespace hcx {

/// Square matrix of any size, row-major rows.
using DynMatrix = std::vector<std::vector<double>>;

struct LieAlgebraBasis {
  std::array<DynMatrix, kDim> generators;
  /// g(X_a, X_b) = eps_a delta_ab.
  Signature eps{Vec4{1.0, 1.0, -1.0, -1.0}};
};

struct StructureConstants {
  /// c[a][b][d] = c^d_ab, i.e. [X_a, X_b] = sum_d c^d_ab X_d.
  Tensor3 c{};
};

DynMatrix commutator(const DynMatrix& a, const DynMatrix& b);

/// Least-squares coordinates of every commutator in the generator span.
/// Throws ValidationError for malformed or linearly dependent generators and
/// NotClosed when a projection residual exceeds `closure_tol`.
StructureConstants structure_constants(const LieAlgebraBasis& basis, double closure_tol = 1e-10);

/// Largest entry of the cyclic sum c^e_ab c^f_ec + c^e_bc c^f_ea + c^e_ca c^f_eb.
double jacobi_residual(const StructureConstants& sc);

/// Gamma^c_ab with nabla_{X_a} X_b = sum_c Gamma^c_ab X_c from
/// 2 g(nabla_a X_b, X_c) = g([X_a,X_b],X_c) - g([X_b,X_c],X_a) + g([X_c,X_a],X_b).
Tensor3 koszul_connection(const StructureConstants& sc, const Signature& eps);

/// R_abcd = g(R(X_a, X_b) X_c, X_d) for constant Gamma, where the derivative
/// terms of the chart formula drop out and the bracket term remains.
Tensor4 curvature_homogeneous(const Tensor3& gamma, const StructureConstants& sc, const Signature& eps);

/// Snapshot with brackets = structure constants; the point is irrelevant.
FrameSnapshot homogeneous_snapshot(const LieAlgebraBasis& basis);

} // namespace hcx
