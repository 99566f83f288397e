#include "gqs/state.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gqs/covariance.hpp"
#include "gqs/symmetry.hpp"
#include "gqs/symplectic.hpp"
#include "gqs/williamson.hpp"

namespace gqs {

GaussianState new_state(const VecView& l, const VecView& m, const MatView& s, double tol) {
  if (l.size() == 0 || l.size() != m.size())
    throw std::invalid_argument("new_state: mean vectors must match and be nonempty");
  if (s.rows() != s.cols() || s.rows() != 2 * l.size())
    throw std::invalid_argument("new_state: S must be 2n x 2n matching the means");
  MembershipReport rep = kn_membership(s, tol);
  if (!rep.member)
    throw membership_error("new_state: S is not an admissible covariance matrix",
                           std::move(rep));
  return {l, m, s};
}

GaussianState vacuum_state(int n) {
  if (n < 1) throw std::invalid_argument("vacuum_state: mode count must be positive");
  return {Vec::Zero(n), Vec::Zero(n), 0.5 * Mat::Identity(2 * n, 2 * n)};
}

Complex chf(const GaussianState& state, const CVecView& alpha) {
  const int n = state.modes();
  if (alpha.size() != n) throw std::invalid_argument("chf: alpha length mismatch");
  Vec xy(2 * n);
  xy << alpha.real(), alpha.imag();
  const double quad = xy.dot(state.s * xy);
  const double lin =
      std::sqrt(2.0) * (state.l.dot(xy.head(n)) - state.m.dot(xy.tail(n)));
  return std::exp(Complex(-quad, -lin));
}

StateSpectrum state_spectrum(const GaussianState& state, int k) {
  if (k < 1) throw std::invalid_argument("state_spectrum: k must be positive");
  const Vec d = symplectic_spectrum(state.s);

  StateSpectrum out;
  std::vector<double> s_params;
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    if (std::abs(d(i) - 0.5) <= tol_pure) {
      ++out.pure_mode_count;
    } else {
      s_params.push_back(std::log((d(i) + 0.5) / (d(i) - 0.5)));
    }
  }
  out.s_params = Eigen::Map<const Vec>(s_params.data(),
                                       static_cast<Eigen::Index>(s_params.size()));
  const int thermal = static_cast<int>(s_params.size());

  if (thermal == 0) {
    out.top_eigenvalues.emplace_back(1.0, std::vector<int>{});
    return out;
  }

  double base = 1.0;
  for (const double sj : s_params) base *= 1.0 - std::exp(-sj);
  const auto value_of = [&](const std::vector<int>& occ) {
    double e = 0.0;
    for (int j = 0; j < thermal; ++j) e += s_params[j] * occ[j];
    return base * std::exp(-e);
  };

  // Best-first walk of the occupation lattice; on value ties the
  // lexicographically smaller multi-index wins.
  struct Node {
    double value;
    std::vector<int> occ;
  };
  const auto worse = [](const Node& a, const Node& b) {
    if (a.value != b.value) return a.value < b.value;
    return a.occ > b.occ;
  };
  std::priority_queue<Node, std::vector<Node>, decltype(worse)> frontier(worse);
  std::set<std::vector<int>> seen;
  std::vector<int> origin(thermal, 0);
  frontier.push({value_of(origin), origin});
  seen.insert(origin);
  while (!frontier.empty() && static_cast<int>(out.top_eigenvalues.size()) < k) {
    Node top = frontier.top();
    frontier.pop();
    out.top_eigenvalues.emplace_back(top.value, top.occ);
    for (int j = 0; j < thermal; ++j) {
      std::vector<int> next = top.occ;
      ++next[j];
      if (seen.insert(next).second) frontier.push({value_of(next), next});
    }
  }
  return out;
}

EntropyPurity entropy_purity(const GaussianState& state) {
  const Vec d = symplectic_spectrum(state.s);
  EntropyPurity out;
  out.entropy = 0.0;
  out.purity = 1.0;
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    out.purity /= 2.0 * d(i);
    if (d(i) > 0.5 + tol_pure)
      out.entropy += (d(i) + 0.5) * std::log(d(i) + 0.5) -
                     (d(i) - 0.5) * std::log(d(i) - 0.5);
  }
  return out;
}

PureWaveParams pure_wave_params(const GaussianState& state) {
  const auto check = is_extreme(state.s);
  if (!check.extreme)
    throw domain_error("pure_wave_params: state is not pure (max |d - 1/2| = " +
                       std::to_string(check.excess) + ")");
  const auto wd = williamson_decompose(2.0 * state.s);
  const auto eu = euler_decompose(wd.m);

  PureWaveParams out;
  out.alpha = (state.m.cast<Complex>() + Complex(0.0, 1.0) * state.l.cast<Complex>()) /
              std::sqrt(2.0);
  out.lambdas = eu.d.cwiseInverse();
  out.u = complex_rep(eu.v2.transpose());
  out.residual = (covariance_from_wave(out.u, out.lambdas) - state.s).cwiseAbs().maxCoeff() /
                 std::max(1.0, state.s.cwiseAbs().maxCoeff());
  if (out.residual > tol_recon)
    throw domain_error("pure_wave_params: covariance reconstruction failed (residual " +
                       std::to_string(out.residual) + ")");
  return out;
}

Mat covariance_from_wave(const CMat& u, const VecView& lambdas) {
  if (u.rows() != lambdas.size())
    throw std::invalid_argument("covariance_from_wave: dimension mismatch");
  const int n = static_cast<int>(lambdas.size());
  const Mat r = real_rep(u);
  Vec diag(2 * n);
  diag << lambdas.cwiseInverse().cwiseAbs2(), lambdas.cwiseAbs2();
  return 0.5 * r * diag.asDiagonal() * r.transpose();
}

}  // namespace gqs
