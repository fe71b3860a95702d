#pragma once

// Coordinate-chart backend. A metric is given by jet-valued component
// functions (directly, or pulled back through an embedding) and an orthonormal
// frame by jet-valued coefficient functions; from these we build Christoffel
// symbols, the curvature tensor and frame brackets, and express everything in
// frame components.

#include "hcx/frame_snapshot.hpp"
#include "hcx/jet.hpp"
#include "hcx/linalg.hpp"

#include <functional>
#include <vector>

namespace hcx {

using JetMatrix = std::array<std::array<Jet2, kDim>, kDim>;

/// g_ij(u) as jets; must be symmetric.
struct ChartMetric {
  std::function<JetMatrix(const Point&)> components;
  int positive = 2;
  int negative = 2;
};

/// coeffs(u)[i][a] = E^i_a, so that e_a = sum_i E^i_a d_i.
struct FrameField {
  std::function<JetMatrix(const Point&)> coeffs;
  Signature eps{Vec4{1.0, 1.0, -1.0, -1.0}};
};

/// Z(u) into a flat ambient space with diagonal metric `ambient` (entries +-1).
struct Embedding {
  std::function<std::vector<Jet2>(const Point&)> map;
  std::vector<double> ambient;
};

Mat4 values(const JetMatrix& m);

/// Induced metric g_ij = sum_K ambient_K d_iZ^K d_jZ^K. Value and first
/// derivatives are exact; second derivatives need third derivatives of Z, so
/// they are central differences of the exact first derivatives at
/// `fd_step`, symmetrized.
JetMatrix pullback_metric(const Embedding& emb, const Point& p, double fd_step = 1e-5);

/// ChartMetric backed by pullback_metric.
ChartMetric induced_metric(Embedding emb, double fd_step = 1e-5);

struct Christoffel {
  Tensor3 value{};                  // value[k][i][j] = Gamma^k_ij
  std::array<Tensor3, kDim> deriv{}; // deriv[m][k][i][j] = d_m Gamma^k_ij
};

/// Throws SingularMetric if the value matrix is not invertible.
Christoffel christoffel(const JetMatrix& g);
Christoffel christoffel(const ChartMetric& g, const Point& p);

/// R_ijkl = g(R(d_i, d_j) d_k, d_l).
Tensor4 riemann_coord(const JetMatrix& g, const Christoffel& gamma);
Tensor4 riemann_coord(const ChartMetric& g, const Point& p);

/// Covariant slots contract with E^i_a; contravariant ones with E^-1.
Mat4 covariant_to_frame(const Mat4& t, const Mat4& frame);
Tensor4 covariant_to_frame(const Tensor4& t, const Mat4& frame);
/// Throws SingularFrame.
Vec4 vector_to_frame(const Vec4& v, const Mat4& frame);

/// Frame coefficients of [e_a, e_b] (0-based a, b). Throws SingularFrame.
Vec4 frame_bracket(const FrameField& frame, int a, int b, const Point& p);

/// max |g(e_a, e_b) - eps_a delta_ab| at p.
double orthonormality_residual(const ChartMetric& g, const FrameField& frame, const Point& p);

/// Frame connection from the coordinate connection and dE (chain rule),
/// frame curvature, and frame brackets at p.
FrameSnapshot snapshot(const ChartMetric& g, const FrameField& frame, const Point& p);

} // namespace hcx
