#pragma once

#include "hcx/linalg.hpp"

namespace hcx {

/// Everything geometric at one point, in components of an orthonormal frame
/// {e_a}. Produced by the chart backend and by the Lie-algebra backend; all
/// downstream invariants consume this type only.
struct FrameSnapshot {
  Point point{};
  Signature eps{Vec4{1.0, 1.0, -1.0, -1.0}};
  /// gamma[a][b][c] = Gamma^c_ab, i.e. nabla_{e_a} e_b = sum_c Gamma^c_ab e_c.
  Tensor3 gamma{};
  /// riemann[a][b][c][d] = g(R(e_a, e_b) e_c, e_d) with
  /// R(x, y) = [nabla_x, nabla_y] - nabla_[x,y].
  Tensor4 riemann{};
  /// brackets[a][b][c] = c^c_ab, i.e. [e_a, e_b] = sum_c c^c_ab e_c.
  Tensor3 brackets{};
};

/// Worst-case violations of the identities every Levi-Civita snapshot obeys.
struct SnapshotResiduals {
  double antisym_first = 0.0; // R_abcd + R_bacd
  double antisym_last = 0.0;  // R_abcd + R_abdc
  double pair_symmetry = 0.0; // R_abcd - R_cdab
  double bianchi = 0.0;       // R_abcd + R_bcad + R_cabd
  double metricity = 0.0;     // eps_c Gamma^c_ab + eps_b Gamma^b_ac
  double torsion = 0.0;       // Gamma^c_ab - Gamma^c_ba - c^c_ab
  double bracket_antisym = 0.0;
};

SnapshotResiduals snapshot_residuals(const FrameSnapshot& snap);

} // namespace hcx
