#include "gqs/symmetry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "gqs/covariance.hpp"
#include "gqs/symplectic.hpp"

namespace gqs {

GaussianSymmetry make_symmetry(Complex phase, const CVecView& alpha, const MatView& l,
                               double tol) {
  const auto check = is_symplectic(l, tol);
  if (!check.ok)
    throw domain_error("make_symmetry: L is not symplectic (residual " +
                       std::to_string(check.residual) + ")");
  if (2 * alpha.size() != l.rows())
    throw std::invalid_argument("make_symmetry: alpha length does not match L");
  const double mod = std::abs(phase);
  if (std::abs(mod - 1.0) > 1e-12)
    throw domain_error("make_symmetry: phase is not unimodular (|phase| = " +
                       std::to_string(mod) + ")");
  return {phase / mod, alpha, l};
}

GaussianSymmetry identity_symmetry(int n) {
  if (n < 1) throw std::invalid_argument("identity_symmetry: mode count must be positive");
  return {Complex(1.0, 0.0), CVec::Zero(n), Mat::Identity(2 * n, 2 * n)};
}

CVec tilde_action(const MatView& l, const CVecView& alpha) {
  if (2 * alpha.size() != l.rows() || l.rows() != l.cols())
    throw std::invalid_argument("tilde_action: dimension mismatch");
  const int n = static_cast<int>(alpha.size());
  Vec v(2 * n);
  v << alpha.real(), alpha.imag();
  const Vec w = l * v;
  return w.head(n) + Complex(0.0, 1.0) * w.tail(n).cast<Complex>();
}

GaussianSymmetry compose(const GaussianSymmetry& g1, const GaussianSymmetry& g2) {
  if (g1.modes() != g2.modes())
    throw std::invalid_argument("compose: mode count mismatch");
  const CVec shifted = tilde_action(g1.l, g2.alpha);
  const double cocycle = (g1.alpha.adjoint() * shifted).value().imag();
  Complex phase = g1.phase * g2.phase * std::exp(Complex(0.0, -cocycle));
  phase /= std::abs(phase);
  return {phase, g1.alpha + shifted, g1.l * g2.l};
}

GaussianSymmetry inverse(const GaussianSymmetry& g) {
  const Mat linv = symplectic_inverse(g.l);
  return {std::conj(g.phase), -tilde_action(linv, g.alpha), linv};
}

GaussianState act_on_state(const GaussianSymmetry& g, const GaussianState& state) {
  if (g.modes() != state.modes())
    throw std::invalid_argument("act_on_state: mode count mismatch");
  const int n = state.modes();
  const Mat linv = symplectic_inverse(g.l);
  Mat s2 = linv.transpose() * state.s * linv;
  s2 = 0.5 * (s2 + s2.transpose());
  Vec v(2 * n);
  v << state.l, -state.m;
  const Vec w = linv.transpose() * v;
  const Vec l2 = w.head(n) + std::sqrt(2.0) * g.alpha.imag().matrix();
  const Vec m2 = -w.tail(n) + std::sqrt(2.0) * g.alpha.real().matrix();
  return new_state(l2, m2, s2);
}

Mat symplectic_inverse(const MatView& l) {
  if (l.rows() == 0 || l.rows() != l.cols() || l.rows() % 2 != 0)
    throw std::invalid_argument("symplectic_inverse: expected a square matrix of even dimension");
  const int n = static_cast<int>(l.rows()) / 2;
  const Mat j = omega_matrix(n);
  return -j * l.transpose() * j;
}

Mat real_rep(const CMat& u) {
  if (u.rows() == 0 || u.rows() != u.cols())
    throw std::invalid_argument("real_rep: expected a square matrix");
  const int n = static_cast<int>(u.rows());
  Mat o(2 * n, 2 * n);
  o.topLeftCorner(n, n) = u.real();
  o.topRightCorner(n, n) = -u.imag();
  o.bottomLeftCorner(n, n) = u.imag();
  o.bottomRightCorner(n, n) = u.real();
  return o;
}

CMat complex_rep(const MatView& o, double tol) {
  if (o.rows() == 0 || o.rows() != o.cols() || o.rows() % 2 != 0)
    throw std::invalid_argument("complex_rep: expected a square matrix of even dimension");
  const int n = static_cast<int>(o.rows()) / 2;
  const Mat j = omega_matrix(n);
  const double commute = (o * j - j * o).cwiseAbs().maxCoeff();
  if (commute > tol)
    throw domain_error("complex_rep: input does not commute with J (residual " +
                       std::to_string(commute) + ")");
  return o.topLeftCorner(n, n).cast<Complex>() +
         Complex(0.0, 1.0) * o.bottomLeftCorner(n, n).cast<Complex>();
}

}  // namespace gqs
