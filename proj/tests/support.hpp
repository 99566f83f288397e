#pragma once

// Shared generators and oracle-side helpers for the test suites.

#include <cmath>
#include <complex>
#include <random>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "gqs/covariance.hpp"
#include "gqs/fock.hpp"
#include "gqs/state.hpp"
#include "gqs/symmetry.hpp"
#include "gqs/symplectic.hpp"

namespace support {

using namespace gqs;

inline Mat random_orthogonal(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Mat g(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) g(r, c) = gauss(rng);
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < dim; ++i)
    if (r(i, i) < 0.0) q.col(i) *= -1.0;
  return q;
}

// Eigenvalues log-uniform in [10^lo, 10^hi]; condition number at most 10^(hi-lo).
inline Mat random_spd(int dim, double lo, double hi, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(lo, hi);
  Vec ev(dim);
  for (int i = 0; i < dim; ++i) ev(i) = std::pow(10.0, unif(rng));
  const Mat q = random_orthogonal(dim, rng);
  Mat s = q * ev.asDiagonal() * q.transpose();
  return 0.5 * (s + s.transpose());
}

inline Mat member_with_spectrum(const Vec& d, std::mt19937_64& rng, double spread = 0.35) {
  const int n = static_cast<int>(d.size());
  const Mat l = random_symplectic(n, rng(), spread);
  Vec dd(2 * n);
  dd << d, d;
  Mat s = l.transpose() * dd.asDiagonal() * l;
  return 0.5 * (s + s.transpose());
}

inline Mat random_member(int n, std::mt19937_64& rng, double dmin = 0.55, double dmax = 2.5,
                         double spread = 0.35) {
  std::uniform_real_distribution<double> unif(dmin, dmax);
  Vec d(n);
  for (int i = 0; i < n; ++i) d(i) = unif(rng);
  return member_with_spectrum(d, rng, spread);
}

inline Mat random_extreme(int n, std::mt19937_64& rng, double spread = 0.35) {
  const Mat l = random_symplectic(n, rng(), spread);
  Mat s = 0.5 * l.transpose() * l;
  return 0.5 * (s + s.transpose());
}

inline GaussianState random_state(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 0.7);
  Vec l(n), m(n);
  for (int i = 0; i < n; ++i) {
    l(i) = gauss(rng);
    m(i) = gauss(rng);
  }
  return new_state(l, m, random_member(n, rng));
}

inline GaussianSymmetry random_symmetry(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(-3.14159, 3.14159);
  std::normal_distribution<double> gauss(0.0, 0.5);
  CVec alpha(n);
  for (int i = 0; i < n; ++i) alpha(i) = Complex(gauss(rng), gauss(rng));
  const Complex phase = std::exp(Complex(0.0, angle(rng)));
  return make_symmetry(phase, alpha, random_symplectic(n, rng(), 0.4));
}

// The symplectic matrix of the tilde action of squeeze_op(r, phi):
// alpha' = alpha cosh r - conj(alpha) e^{i phi} sinh r.
inline Mat squeeze_symplectic(double r, double phi) {
  const double c = std::cosh(r), s = std::sinh(r);
  Mat l(2, 2);
  l << c - s * std::cos(phi), -s * std::sin(phi),
       -s * std::sin(phi), c + s * std::cos(phi);
  return l;
}

// The tilde action of rotation_op(theta): alpha' = e^{-i theta} alpha.
inline Mat rotation_symplectic(double theta) {
  Mat l(2, 2);
  l << std::cos(theta), std::sin(theta), -std::sin(theta), std::cos(theta);
  return l;
}

// Means and covariance of an oracle density matrix, extracted by central
// finite differences of log oracle_chf. Accuracy ~1e-5 at h = 1e-3.
inline void oracle_moments(const fock::FockOperator& rho, Vec& l_out, Vec& m_out,
                           Mat& s_out, double h = 1e-3) {
  const int n = rho.modes;
  const auto f = [&](const Vec& u) {
    CVec a(n);
    for (int i = 0; i < n; ++i) a(i) = Complex(u(i), u(n + i));
    return std::log(fock::oracle_chf(rho, a).value);
  };
  const Complex f0 = f(Vec::Zero(2 * n));
  Vec u = Vec::Zero(2 * n);

  l_out.resize(n);
  m_out.resize(n);
  s_out.resize(2 * n, 2 * n);
  const double rt2 = std::sqrt(2.0);
  for (int a = 0; a < 2 * n; ++a) {
    u(a) = h;
    const Complex fp = f(u);
    u(a) = -h;
    const Complex fm = f(u);
    u(a) = 0.0;
    const Complex da = (fp - fm) / (2.0 * h);
    if (a < n)
      l_out(a) = -da.imag() / rt2;
    else
      m_out(a - n) = da.imag() / rt2;
    s_out(a, a) = -((fp + fm - 2.0 * f0) / (h * h)).real() / 2.0;
  }
  for (int a = 0; a < 2 * n; ++a) {
    for (int b = a + 1; b < 2 * n; ++b) {
      u(a) = h;
      u(b) = h;
      const Complex fpp = f(u);
      u(b) = -h;
      const Complex fpm = f(u);
      u(a) = -h;
      const Complex fmm = f(u);
      u(b) = h;
      const Complex fmp = f(u);
      u(a) = u(b) = 0.0;
      const Complex fab = (fpp + fmm - fpm - fmp) / (4.0 * h * h);
      s_out(a, b) = s_out(b, a) = -fab.real() / 2.0;
    }
  }
}

}  // namespace support
