#pragma once

#include <string>
#include <utility>

#include "gqs/types.hpp"

namespace gqs {

struct MembershipReport {
  bool member = false;
  double min_eig_complex = 0.0;    // smallest eigenvalue of the Hermitian 2S - iJ
  Vec sympl_spectrum;              // filled when S is strictly positive definite
  double det_value = 0.0;
  double det_bound = 0.0;          // 4^{-n}
  bool extreme = false;            // member with every d_j = 1/2 within tol_pure
  double symmetry_residual = 0.0;  // |S - S^T|_max; reported, never symmetrized away
};

/// Admissibility of S as a covariance matrix: S symmetric within tol and
/// 2S - iJ >= 0 (smallest eigenvalue >= -tol_psd). When S is strictly PD the
/// report also carries the symplectic spectrum, whose min d_j >= 1/2 test is the
/// equivalent spectral characterization of the same set.
MembershipReport kn_membership(const MatView& s, double tol = tol_sym);

/// Thrown where an operation needs a member of the covariance set and the input
/// is not one; carries the full report.
class membership_error : public domain_error {
 public:
  membership_error(const std::string& what, MembershipReport report);
  const MembershipReport& report() const { return report_; }

 private:
  MembershipReport report_;
};

/// Splits diagonal D >= I into (D1, D2) with D = (D1 + D2)/2 = (D1^{-1} + D2^{-1})/2:
/// per entry x = 1 + 2(d^2 - 1) + 2d sqrt(d^2 - 1), d1 = 2d/(1 + x), d2 = d1 x.
/// Entries within tol below 1 are clamped to 1; smaller entries are rejected.
std::pair<Vec, Vec> split_diagonal(const VecView& d, double tol = tol_sym);

struct ExtremeDecomposition {
  Mat l;  // symplectic
  Mat m;  // symplectic
  double residual = 0.0;  // |(L^T L + M^T M)/4 - S|_max / max(1, |S|_max)
};

/// S = (L^T L + M^T M)/4 with both factors symplectic: from Williamson
/// S = N^T diag(d, d) N, split 2d into (D1, D2) and set
/// L = diag(D1^{1/2}, D1^{-1/2}) N, M = diag(D2^{1/2}, D2^{-1/2}) N.
/// Extreme inputs yield L = M up to the splitting tolerance.
ExtremeDecomposition extreme_decompose(const MatView& s, double tol = tol_sym);

struct ExtremeCheck {
  bool extreme = false;
  double excess = 0.0;  // max_j |d_j - 1/2|
  Mat witness;          // when extreme: symplectic L with L^T L = 2S within ~excess
};

/// Extreme points of the covariance set are exactly the S = L^T L/2 with L
/// symplectic, i.e. members whose symplectic eigenvalues all equal 1/2 within tol.
ExtremeCheck is_extreme(const MatView& s, double tol = tol_pure);

}  // namespace gqs
