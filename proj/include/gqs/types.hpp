#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>

namespace gqs {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using Complex = std::complex<double>;

// Read-only views that bind matrices, blocks, and evaluated expressions alike.
using MatView = Eigen::Ref<const Mat>;
using VecView = Eigen::Ref<const Vec>;
using CVecView = Eigen::Ref<const CVec>;

// Default tolerances, absolute in the max norm unless stated otherwise.
inline constexpr double tol_sym = 1e-9;    // symplectic / symmetry residuals
inline constexpr double tol_recon = 1e-8;  // reconstruction residuals
inline constexpr double tol_pure = 1e-7;   // |d_j - 1/2| pure-mode classification
inline constexpr double tol_psd = 1e-9;    // PSD slack for 2S - iJ
inline constexpr double pd_floor = 1e-12;  // strict PD gate: min eig > pd_floor * max(1, |A|_max)

/// A structurally well-formed input that the mathematics rejects (non-member
/// covariance, indefinite matrix, non-symplectic map, ...). The CLI maps this
/// to exit code 2; malformed structure maps std::invalid_argument to exit 1.
class domain_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gqs
