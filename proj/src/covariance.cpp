#include "gqs/covariance.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Eigenvalues>

#include "gqs/symplectic.hpp"
#include "gqs/williamson.hpp"

namespace gqs {

membership_error::membership_error(const std::string& what, MembershipReport report)
    : domain_error(what), report_(std::move(report)) {}

MembershipReport kn_membership(const MatView& s, double tol) {
  if (s.rows() == 0 || s.rows() != s.cols() || s.rows() % 2 != 0)
    throw std::invalid_argument("kn_membership: expected a square matrix of even dimension");
  const int n = static_cast<int>(s.rows()) / 2;

  MembershipReport rep;
  rep.det_bound = std::pow(4.0, -n);
  rep.det_value = s.determinant();
  rep.symmetry_residual = (s - s.transpose()).cwiseAbs().maxCoeff();
  const bool symmetric = rep.symmetry_residual <= tol;

  const Mat j = omega_matrix(n);
  CMat h = 2.0 * s.cast<Complex>() - Complex(0.0, 1.0) * j.cast<Complex>();
  h = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<CMat> es(h, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw domain_error("kn_membership: Hermitian eigensolve did not converge");
  rep.min_eig_complex = es.eigenvalues().minCoeff();
  rep.member = symmetric && rep.min_eig_complex >= -tol_psd;

  if (symmetric) {
    const Mat sym = 0.5 * (s + s.transpose());
    Eigen::SelfAdjointEigenSolver<Mat> ses(sym, Eigen::EigenvaluesOnly);
    const double scale = std::max(1.0, sym.cwiseAbs().maxCoeff());
    if (ses.info() == Eigen::Success && ses.eigenvalues().minCoeff() > pd_floor * scale) {
      rep.sympl_spectrum = symplectic_spectrum(s, tol);
      rep.extreme = rep.member &&
                    (rep.sympl_spectrum.array() - 0.5).abs().maxCoeff() <= tol_pure;
    }
  }
  return rep;
}

std::pair<Vec, Vec> split_diagonal(const VecView& d, double tol) {
  if (d.size() == 0) throw std::invalid_argument("split_diagonal: empty diagonal");
  Vec d1(d.size()), d2(d.size());
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    double v = d(i);
    if (v < 1.0 - tol)
      throw domain_error("split_diagonal: entry " + std::to_string(v) +
                         " violates D >= I");
    if (v < 1.0) v = 1.0;
    // x solves x^2 - (4d^2 - 2)x + 1 = 0; this root form has no cancellation
    // for d >= 1, and d2 = d1 x keeps both averaging identities at relative
    // rounding error.
    const double w = v * v - 1.0;
    const double x = 1.0 + 2.0 * w + 2.0 * v * std::sqrt(w);
    d1(i) = 2.0 * v / (1.0 + x);
    d2(i) = d1(i) * x;
  }
  return {std::move(d1), std::move(d2)};
}

ExtremeDecomposition extreme_decompose(const MatView& s, double tol) {
  MembershipReport rep = kn_membership(s, tol);
  if (!rep.member)
    throw membership_error("extreme_decompose: input is not an admissible covariance matrix",
                           std::move(rep));
  const auto wd = williamson_decompose(s, tol);
  const int n = static_cast<int>(wd.d.size());
  // Membership leaves 2d >= 1 up to ~tol_psd noise; the clamp window is wide
  // enough for that and still far from any honest violation.
  const auto [d1, d2] = split_diagonal(2.0 * wd.d, 1e-6);

  Vec scale_l(2 * n), scale_m(2 * n);
  scale_l << d1.cwiseSqrt(), d1.cwiseSqrt().cwiseInverse();
  scale_m << d2.cwiseSqrt(), d2.cwiseSqrt().cwiseInverse();

  ExtremeDecomposition out;
  out.l = scale_l.asDiagonal() * wd.m;
  out.m = scale_m.asDiagonal() * wd.m;
  out.residual = (0.25 * (out.l.transpose() * out.l + out.m.transpose() * out.m) - s)
                     .cwiseAbs()
                     .maxCoeff() /
                 std::max(1.0, s.cwiseAbs().maxCoeff());
  return out;
}

ExtremeCheck is_extreme(const MatView& s, double tol) {
  MembershipReport rep = kn_membership(s, tol_sym);
  if (!rep.member)
    throw membership_error("is_extreme: input is not an admissible covariance matrix",
                           std::move(rep));
  ExtremeCheck out;
  if (rep.sympl_spectrum.size() == 0) {
    // Member but numerically singular: boundary noise; nowhere near d = 1/2.
    out.excess = std::numeric_limits<double>::infinity();
    return out;
  }
  out.excess = (rep.sympl_spectrum.array() - 0.5).abs().maxCoeff();
  out.extreme = out.excess <= tol;
  if (out.extreme) out.witness = williamson_decompose(2.0 * s, tol_sym).m;
  return out;
}

}  // namespace gqs
