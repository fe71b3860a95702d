#include "hcx/frame_snapshot.hpp"

#include <algorithm>
#include <cmath>

namespace hcx {

SnapshotResiduals snapshot_residuals(const FrameSnapshot& s) {
  SnapshotResiduals r;
  const auto& R = s.riemann;
  auto bump = [](double& slot, double v) { slot = std::max(slot, std::abs(v)); };
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b)
      for (int c = 0; c < kDim; ++c) {
        for (int d = 0; d < kDim; ++d) {
          bump(r.antisym_first, R[a][b][c][d] + R[b][a][c][d]);
          bump(r.antisym_last, R[a][b][c][d] + R[a][b][d][c]);
          bump(r.pair_symmetry, R[a][b][c][d] - R[c][d][a][b]);
          bump(r.bianchi, R[a][b][c][d] + R[b][c][a][d] + R[c][a][b][d]);
        }
        bump(r.metricity, s.eps[c] * s.gamma[a][b][c] + s.eps[b] * s.gamma[a][c][b]);
        bump(r.torsion, s.gamma[a][b][c] - s.gamma[b][a][c] - s.brackets[a][b][c]);
        bump(r.bracket_antisym, s.brackets[a][b][c] + s.brackets[b][a][c]);
      }
  return r;
}

} // namespace hcx
