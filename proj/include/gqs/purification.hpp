#pragma once

#include <vector>

#include "gqs/state.hpp"
#include "gqs/symmetry.hpp"
#include "gqs/types.hpp"

namespace gqs {

/// The balanced beamsplitter mixing modes {1..n} with modes {n+1..2n}:
/// (u, v) -> ((u + v)/sqrt(2), (u - v)/sqrt(2)) on complex amplitudes, as a real
/// 4n x 4n matrix. Orthogonal, symplectic, and an involution.
Mat beamsplitter_symplectic(int n);

struct PurificationResult {
  GaussianState pure_state;   // 2n modes, extreme covariance
  Mat factor_l1;              // extreme_decompose factors of the input S
  Mat factor_l2;
  GaussianSymmetry symmetry;  // 2n modes; maps the 2n-mode vacuum to pure_state
  double marginal_residual = 0.0;  // round-trip error of the marginal over modes 1..n
};

/// Doubling purification: the pure 2n-mode state whose marginal over modes 1..n
/// is the input. Realized as the symmetry
///   (1, (alpha; 0), B0 * [Gamma-side] blkdiag(L1^{-1}, L2^{-1}))
/// applied to the 2n-mode vacuum, with alpha = (m + i l)/sqrt(2) and B0 the
/// balanced beamsplitter.
PurificationResult purify(const GaussianState& state);

/// Restriction to the kept modes (1-based, distinct): the rows/columns {p_i, q_i}
/// of S and the matching mean entries. This is the state whose chf is the parent
/// chf restricted to alpha supported on the kept modes.
GaussianState marginal(const GaussianState& state, const std::vector<int>& keep);

}  // namespace gqs
