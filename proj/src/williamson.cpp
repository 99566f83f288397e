#include "gqs/williamson.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Eigenvalues>

#include "gqs/symplectic.hpp"

namespace gqs {

namespace {

// A^{1/2} for symmetric positive definite input; rejects anything else.
Mat spd_sqrt(const MatView& a, double tol, double* max_abs_out) {
  if (a.rows() == 0 || a.rows() != a.cols() || a.rows() % 2 != 0)
    throw std::invalid_argument("expected a square matrix of even dimension");
  const double asym = (a - a.transpose()).cwiseAbs().maxCoeff();
  if (asym > tol)
    throw domain_error("matrix is not symmetric (residual " + std::to_string(asym) + ")");
  const Mat sym = 0.5 * (a + a.transpose());
  const double scale = std::max(1.0, sym.cwiseAbs().maxCoeff());
  Eigen::SelfAdjointEigenSolver<Mat> es(sym);
  if (es.info() != Eigen::Success)
    throw domain_error("symmetric eigensolve did not converge");
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig <= pd_floor * scale)
    throw domain_error("matrix is not strictly positive definite (min eigenvalue " +
                       std::to_string(min_eig) + ")");
  if (max_abs_out) *max_abs_out = sym.cwiseAbs().maxCoeff();
  return es.eigenvectors() * es.eigenvalues().cwiseSqrt().asDiagonal() *
         es.eigenvectors().transpose();
}

}  // namespace

WilliamsonDecomposition williamson_decompose(const MatView& a, double tol) {
  double amax = 0.0;
  const Mat ah = spd_sqrt(a, tol, &amax);
  const int two_n = static_cast<int>(a.rows());
  const int n = two_n / 2;
  const Mat b = ah * omega_matrix(n) * ah;

  CMat h = Complex(0.0, 1.0) * b.cast<Complex>();
  h = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<CMat> es(h);
  if (es.info() != Eigen::Success)
    throw domain_error("williamson_decompose: Hermitian eigensolve did not converge");

  // Positive half of the spectrum, descending. For the unit eigenvector v of iB
  // at d > 0, f = sqrt(2) Re v and g = sqrt(2) Im v satisfy Bf = d g, Bg = -d f,
  // and [f | g] columns are orthonormal automatically (the conjugate vectors
  // live at -d), degenerate d included.
  Vec d(n);
  Mat gamma(two_n, two_n);
  for (int k = 0; k < n; ++k) {
    const int idx = two_n - 1 - k;
    d(k) = es.eigenvalues()(idx);
    const CVec v = es.eigenvectors().col(idx);
    gamma.col(k) = std::sqrt(2.0) * v.real();
    gamma.col(n + k) = std::sqrt(2.0) * v.imag();
  }
  if (!(d.minCoeff() > 0.0))
    throw domain_error("williamson_decompose: spectrum is not strictly positive");

  Vec dh_inv(two_n);
  dh_inv << d.cwiseSqrt().cwiseInverse(), d.cwiseSqrt().cwiseInverse();
  const Mat lmat = ah * gamma * dh_inv.asDiagonal();
  Vec dd(two_n);
  dd << d, d;
  const auto rel_residual = [&](const Mat& mm) {
    return (mm.transpose() * dd.asDiagonal() * mm - a).cwiseAbs().maxCoeff() / amax;
  };

  WilliamsonDecomposition out;
  out.d = std::move(d);
  Mat m1 = lmat.transpose();
  const double r1 = rel_residual(m1);
  if (r1 <= tol_recon) {
    out.m = std::move(m1);
    out.residual = r1;
    return out;
  }
  Mat m2 = lmat.inverse().transpose();
  const double r2 = rel_residual(m2);
  if (r2 <= tol_recon) {
    out.m = std::move(m2);
    out.residual = r2;
    return out;
  }
  throw domain_error("williamson_decompose: reconstruction failed in both orientations (" +
                     std::to_string(r1) + ", " + std::to_string(r2) + ")");
}

Vec symplectic_spectrum(const MatView& a, double tol) {
  const Mat ah = spd_sqrt(a, tol, nullptr);
  const int n = static_cast<int>(a.rows()) / 2;
  const Mat b = ah * omega_matrix(n) * ah;
  Eigen::EigenSolver<Mat> es(b);
  if (es.info() != Eigen::Success)
    throw domain_error("symplectic_spectrum: eigensolve did not converge");
  std::vector<double> pos;
  pos.reserve(n);
  for (int i = 0; i < 2 * n; ++i) {
    const double im = es.eigenvalues()(i).imag();
    if (im > 0.0) pos.push_back(im);
  }
  if (static_cast<int>(pos.size()) != n)
    throw domain_error("symplectic_spectrum: eigenvalues did not pair up");
  std::sort(pos.begin(), pos.end(), std::greater<double>());
  return Eigen::Map<const Vec>(pos.data(), n);
}

}  // namespace gqs
