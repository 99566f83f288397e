#include "gqs/fock.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

#include "gqs/covariance.hpp"

namespace gqs::fock {

namespace {

void require_cutoff(int cutoff) {
  if (cutoff < 1 || cutoff > 100)
    throw std::invalid_argument("fock: cutoff must lie in [1, 100]");
}

// exp(G) for anti-Hermitian G through the Hermitian eigendecomposition of iG:
// the exact exponential of the truncated generator, unitary to rounding.
CMat expm_antihermitian(const CMat& g) {
  CMat h = Complex(0.0, 1.0) * g;
  h = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<CMat> es(h);
  if (es.info() != Eigen::Success)
    throw domain_error("fock: eigensolve did not converge");
  CVec phases(es.eigenvalues().size());
  for (Eigen::Index i = 0; i < phases.size(); ++i)
    phases(i) = std::exp(Complex(0.0, -es.eigenvalues()(i)));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

FockOperator ladder(int cutoff) {
  require_cutoff(cutoff);
  CMat a = CMat::Zero(cutoff + 1, cutoff + 1);
  for (int k = 1; k <= cutoff; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  return {cutoff, 1, std::move(a)};
}

CVec coherent_vec(Complex z, int cutoff) {
  require_cutoff(cutoff);
  CVec e(cutoff + 1);
  e(0) = Complex(1.0, 0.0);
  for (int k = 1; k <= cutoff; ++k) e(k) = e(k - 1) * z / std::sqrt(static_cast<double>(k));
  return e;
}

FockOperator displacement_op(Complex alpha, int cutoff) {
  const FockOperator a = ladder(cutoff);
  const CMat g = alpha * a.m.adjoint() - std::conj(alpha) * a.m;
  return {cutoff, 1, expm_antihermitian(g)};
}

FockOperator rotation_op(double theta, int cutoff) {
  const FockOperator a = ladder(cutoff);
  const CMat g = Complex(0.0, -theta) * (a.m.adjoint() * a.m);
  return {cutoff, 1, expm_antihermitian(g)};
}

FockOperator squeeze_op(double r, double phi, int cutoff) {
  const FockOperator a = ladder(cutoff);
  const Complex zeta = r * std::exp(Complex(0.0, phi));
  const CMat a2 = a.m * a.m;
  const CMat g = 0.5 * (std::conj(zeta) * a2 - zeta * a2.adjoint());
  FockOperator out{cutoff, 1, expm_antihermitian(g)};
  out.range_flag = std::abs(r) > 0.6;
  return out;
}

FockOperator thermal_rho(double s, int cutoff) {
  require_cutoff(cutoff);
  if (!(s > 0.0)) throw std::invalid_argument("thermal_rho: s must be positive");
  CMat rho = CMat::Zero(cutoff + 1, cutoff + 1);
  const double w = 1.0 - std::exp(-s);
  for (int k = 0; k <= cutoff; ++k) rho(k, k) = w * std::exp(-s * k);
  return {cutoff, 1, std::move(rho)};
}

FockOperator vacuum_rho(int cutoff, int modes) {
  require_cutoff(cutoff);
  if (modes != 1 && modes != 2)
    throw std::invalid_argument("vacuum_rho: one or two modes only");
  const int dim = modes == 1 ? cutoff + 1 : (cutoff + 1) * (cutoff + 1);
  CMat rho = CMat::Zero(dim, dim);
  rho(0, 0) = Complex(1.0, 0.0);
  return {cutoff, modes, std::move(rho)};
}

FockOperator tensor(const FockOperator& a, const FockOperator& b) {
  if (a.modes != 1 || b.modes != 1 || a.cutoff != b.cutoff)
    throw std::invalid_argument("tensor: expects two single-mode operators at one cutoff");
  FockOperator out{a.cutoff, 2, Eigen::kroneckerProduct(a.m, b.m)};
  out.range_flag = a.range_flag || b.range_flag;
  return out;
}

FockOperator beamsplitter_op(int cutoff) {
  require_cutoff(cutoff);
  const int d = cutoff + 1;
  // C = P+ - P-; Gamma(C) = exp(i pi dGamma(P-)). dGamma(P-) commutes with the
  // total number operator, so each fixed-total block is exponentiated on its own.
  Mat c(2, 2);
  c << 1.0, 1.0, 1.0, -1.0;
  c /= std::sqrt(2.0);
  Eigen::SelfAdjointEigenSolver<Mat> es(c);
  const Vec vminus = es.eigenvalues()(0) < 0.0 ? es.eigenvectors().col(0)
                                               : es.eigenvectors().col(1);
  const Mat k = M_PI * (vminus * vminus.transpose());

  CMat full = CMat::Zero(d * d, d * d);
  for (int t = 0; t <= 2 * cutoff; ++t) {
    const int lo = std::max(0, t - cutoff);
    const int hi = std::min(t, cutoff);
    const int bs = hi - lo + 1;
    Mat hb = Mat::Zero(bs, bs);
    for (int i = 0; i < bs; ++i) {
      const int k1 = lo + i;
      const int k2 = t - k1;
      hb(i, i) = k(0, 0) * k1 + k(1, 1) * k2;
      if (i + 1 < bs) {
        // a1^dag a2 : (k1, k2) -> (k1 + 1, k2 - 1)
        const double amp = k(0, 1) * std::sqrt(static_cast<double>((k1 + 1) * k2));
        hb(i + 1, i) = amp;
        hb(i, i + 1) = amp;
      }
    }
    Eigen::SelfAdjointEigenSolver<Mat> bes(hb);
    CVec phases(bs);
    for (int i = 0; i < bs; ++i) phases(i) = std::exp(Complex(0.0, bes.eigenvalues()(i)));
    const CMat ub = bes.eigenvectors().cast<Complex>() * phases.asDiagonal() *
                    bes.eigenvectors().transpose().cast<Complex>();
    for (int i = 0; i < bs; ++i)
      for (int jj = 0; jj < bs; ++jj) {
        const int r = (lo + i) * d + (t - lo - i);
        const int cc = (lo + jj) * d + (t - lo - jj);
        full(r, cc) = ub(i, jj);
      }
  }
  return {cutoff, 2, std::move(full)};
}

FockOperator purified_thermal_rho(double d, int cutoff) {
  require_cutoff(cutoff);
  if (!(d > 0.5)) throw std::invalid_argument("purified_thermal_rho: d must exceed 1/2");
  const auto [d1, d2] = split_diagonal(Vec::Constant(1, 2.0 * d), 1e-6);
  const double r1 = 0.5 * std::log(d1(0));
  const double r2 = 0.5 * std::log(d2(0));
  const FockOperator sq = tensor(squeeze_op(r1, 0.0, cutoff), squeeze_op(r2, 0.0, cutoff));
  const FockOperator bs = beamsplitter_op(cutoff);
  CVec e00 = CVec::Zero((cutoff + 1) * (cutoff + 1));
  e00(0) = Complex(1.0, 0.0);
  const CVec psi = bs.m * (sq.m * e00);
  FockOperator out{cutoff, 2, psi * psi.adjoint()};
  out.range_flag = sq.range_flag;
  return out;
}

OracleChf oracle_chf(const FockOperator& rho, const CVecView& alpha) {
  if (alpha.size() != rho.modes)
    throw std::invalid_argument("oracle_chf: alpha length must match the mode count");
  CMat disp;
  if (rho.modes == 1) {
    disp = displacement_op(alpha(0), rho.cutoff).m;
  } else {
    disp = Eigen::kroneckerProduct(displacement_op(alpha(0), rho.cutoff).m,
                                   displacement_op(alpha(1), rho.cutoff).m);
  }
  OracleChf out;
  out.value = (rho.m * disp).trace();
  out.trace = rho.m.trace().real();
  out.trace_ok = std::abs(out.trace - 1.0) <= 1e-3;
  return out;
}

FockOperator partial_trace(const FockOperator& rho, int keep) {
  if (rho.modes != 2)
    throw std::invalid_argument("partial_trace: expects a two-mode operator");
  if (keep != 1 && keep != 2)
    throw std::invalid_argument("partial_trace: keep must be 1 or 2");
  const int d = rho.cutoff + 1;
  CMat red = CMat::Zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Complex acc(0.0, 0.0);
      for (int k = 0; k < d; ++k)
        acc += keep == 1 ? rho.m(i * d + k, j * d + k) : rho.m(k * d + i, k * d + j);
      red(i, j) = acc;
    }
  FockOperator out{rho.cutoff, 1, std::move(red)};
  out.range_flag = rho.range_flag;
  return out;
}

CMat qft_kernel_unitary(int n) {
  if (n < 1)
    throw std::invalid_argument("qft_kernel_unitary: mode count must be positive");
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CMat u = CMat::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    u(i, i) = Complex(-inv_sqrt2, 0.0);
    u(i, n + i) = Complex(inv_sqrt2, 0.0);
    u(n + i, i) = Complex(0.0, inv_sqrt2);
    u(n + i, n + i) = Complex(0.0, inv_sqrt2);
  }
  return u;
}

}  // namespace gqs::fock
