#include "gqs/symplectic.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

namespace gqs {

namespace {

void require_even_square(const MatView& m, const char* who) {
  if (m.rows() == 0 || m.rows() != m.cols() || m.rows() % 2 != 0)
    throw std::invalid_argument(std::string(who) +
                                ": expected a square matrix of even dimension");
}

}  // namespace

Mat omega_matrix(int n) {
  if (n < 1) throw std::invalid_argument("omega_matrix: mode count must be positive");
  Mat j = Mat::Zero(2 * n, 2 * n);
  j.topRightCorner(n, n) = -Mat::Identity(n, n);
  j.bottomLeftCorner(n, n) = Mat::Identity(n, n);
  return j;
}

SymplecticCheck is_symplectic(const MatView& l, double tol) {
  require_even_square(l, "is_symplectic");
  const int n = static_cast<int>(l.rows()) / 2;
  const Mat j = omega_matrix(n);
  const double residual = (l.transpose() * j * l - j).cwiseAbs().maxCoeff();
  return {residual <= tol, residual};
}

Mat random_symplectic(int n, std::uint64_t seed, double spread) {
  if (n < 1) throw std::invalid_argument("random_symplectic: mode count must be positive");
  if (!(spread > 0.0))
    throw std::invalid_argument("random_symplectic: spread must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-spread, spread);
  Mat h(2 * n, 2 * n);
  for (int r = 0; r < 2 * n; ++r) {
    h(r, r) = unif(rng);
    for (int c = r + 1; c < 2 * n; ++c) h(r, c) = h(c, r) = unif(rng);
  }
  return (omega_matrix(n) * h).exp();
}

EulerDecomposition euler_decompose(const MatView& m, double tol) {
  const auto check = is_symplectic(m, tol);
  if (!check.ok)
    throw domain_error("euler_decompose: input is not symplectic (residual " +
                       std::to_string(check.residual) + ")");
  const int two_n = static_cast<int>(m.rows());
  const int n = two_n / 2;
  const Mat j = omega_matrix(n);

  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Mat& w = svd.matrixV();
  const Vec& sigma = svd.singularValues();  // descending

  Mat u = Mat::Zero(two_n, n);
  Mat ju = Mat::Zero(two_n, n);
  Vec d(n);
  std::vector<bool> used(two_n, false);
  for (int slot = 0; slot < n; ++slot) {
    int pick = -1;
    Vec pick_vec;
    double pick_norm = 0.0;
    for (int c = 0; c < two_n; ++c) {
      if (used[c]) continue;
      Vec cand = w.col(c);
      for (int pass = 0; pass < 2; ++pass)
        for (int k = 0; k < slot; ++k)
          cand -= u.col(k).dot(cand) * u.col(k) + ju.col(k).dot(cand) * ju.col(k);
      const double nm = cand.norm();
      if (nm > 0.5) {
        pick = c;
        pick_vec = cand / nm;
        pick_norm = nm;
        break;
      }
      if (nm > pick_norm) {
        pick = c;
        pick_vec = cand;
        pick_norm = nm;
      }
    }
    if (pick < 0 || pick_norm < 1e-6)
      throw domain_error("euler_decompose: failed to assemble a symplectic basis");
    pick_vec /= pick_vec.norm();
    u.col(slot) = pick_vec;
    ju.col(slot) = j * pick_vec;
    d(slot) = sigma(pick);
    used[pick] = true;
  }

  // Canonical order: d descending (stable over the selection order).
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) { return d(a) > d(b); });
  Mat o(two_n, two_n);
  Vec d_sorted(n);
  for (int k = 0; k < n; ++k) {
    d_sorted(k) = d(perm[k]);
    o.col(k) = u.col(perm[k]);
    o.col(n + k) = ju.col(perm[k]);
  }
  for (int k = 0; k < n; ++k) {
    if (d_sorted(k) < 1.0 - 1e-9)
      throw domain_error("euler_decompose: canonical diagonal fell below 1");
    d_sorted(k) = std::max(d_sorted(k), 1.0);
  }

  EulerDecomposition out;
  out.d = d_sorted;
  out.v2 = o.transpose();
  Vec lam_inv(two_n), lam(two_n);
  lam_inv << d_sorted.cwiseInverse(), d_sorted;
  lam << d_sorted, d_sorted.cwiseInverse();
  out.v1 = m * o * lam_inv.asDiagonal();
  out.residual = (out.v1 * lam.asDiagonal() * out.v2 - m).cwiseAbs().maxCoeff() /
                 std::max(1.0, m.cwiseAbs().maxCoeff());
  return out;
}

}  // namespace gqs
