#include "gqs/purification.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

#include "gqs/covariance.hpp"
#include "gqs/symplectic.hpp"

namespace gqs {

Mat beamsplitter_symplectic(int n) {
  if (n < 1)
    throw std::invalid_argument("beamsplitter_symplectic: mode count must be positive");
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Mat c(2 * n, 2 * n);
  c.topLeftCorner(n, n) = Mat::Identity(n, n);
  c.topRightCorner(n, n) = Mat::Identity(n, n);
  c.bottomLeftCorner(n, n) = Mat::Identity(n, n);
  c.bottomRightCorner(n, n) = -Mat::Identity(n, n);
  c *= inv_sqrt2;
  Mat b = Mat::Zero(4 * n, 4 * n);
  b.topLeftCorner(2 * n, 2 * n) = c;
  b.bottomRightCorner(2 * n, 2 * n) = c;
  return b;
}

namespace {

// Writes the one-factor symplectic x (n modes) into the 2n-mode matrix `into`,
// acting on modes offset..offset+n-1 (0-based), identity elsewhere assumed.
void embed_factor(Mat& into, const Mat& x, int offset) {
  const int n = static_cast<int>(x.rows()) / 2;
  const int total = static_cast<int>(into.rows()) / 2;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      into(offset + i, offset + j) = x(i, j);
      into(offset + i, total + offset + j) = x(i, n + j);
      into(total + offset + i, offset + j) = x(n + i, j);
      into(total + offset + i, total + offset + j) = x(n + i, n + j);
    }
}

}  // namespace

PurificationResult purify(const GaussianState& state) {
  const int n = state.modes();
  const auto ed = extreme_decompose(state.s);

  Mat lf = Mat::Zero(4 * n, 4 * n);
  embed_factor(lf, symplectic_inverse(ed.l), 0);
  embed_factor(lf, symplectic_inverse(ed.m), n);

  GaussianSymmetry g;
  g.phase = Complex(1.0, 0.0);
  g.alpha = CVec::Zero(2 * n);
  g.alpha.head(n) = (state.m.cast<Complex>() +
                     Complex(0.0, 1.0) * state.l.cast<Complex>()) /
                    std::sqrt(2.0);
  g.l = beamsplitter_symplectic(n) * lf;

  PurificationResult out;
  out.factor_l1 = ed.l;
  out.factor_l2 = ed.m;
  out.symmetry = g;
  out.pure_state = act_on_state(g, vacuum_state(2 * n));

  std::vector<int> keep(n);
  for (int i = 0; i < n; ++i) keep[i] = i + 1;
  const GaussianState back = marginal(out.pure_state, keep);
  out.marginal_residual = std::max({(back.s - state.s).cwiseAbs().maxCoeff(),
                                    (back.l - state.l).cwiseAbs().maxCoeff(),
                                    (back.m - state.m).cwiseAbs().maxCoeff()});
  return out;
}

GaussianState marginal(const GaussianState& state, const std::vector<int>& keep) {
  const int n = state.modes();
  if (keep.empty()) throw std::invalid_argument("marginal: keep set must be nonempty");
  std::set<int> unique(keep.begin(), keep.end());
  if (unique.size() != keep.size())
    throw std::invalid_argument("marginal: keep set has duplicates");
  for (const int k : keep)
    if (k < 1 || k > n)
      throw std::invalid_argument("marginal: mode index out of range");

  const int m = static_cast<int>(keep.size());
  std::vector<int> rows;
  rows.reserve(2 * m);
  for (const int k : keep) rows.push_back(k - 1);
  for (const int k : keep) rows.push_back(n + k - 1);

  Vec l2(m), m2(m);
  Mat s2(2 * m, 2 * m);
  for (int i = 0; i < m; ++i) {
    l2(i) = state.l(keep[i] - 1);
    m2(i) = state.m(keep[i] - 1);
  }
  for (int a = 0; a < 2 * m; ++a)
    for (int b = 0; b < 2 * m; ++b) s2(a, b) = state.s(rows[a], rows[b]);
  return new_state(l2, m2, s2);
}

}  // namespace gqs
