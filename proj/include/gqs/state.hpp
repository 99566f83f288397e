#pragma once

#include <utility>
#include <vector>

#include "gqs/types.hpp"

namespace gqs {

/// Gaussian state in the characteristic-function parameterization:
///   chf(x + iy) = exp{ -i sqrt(2)(l.x - m.y) - (x^T, y^T) S (x; y) }.
/// S doubles as the covariance matrix of the operator vector (p, -q); that sign
/// convention is pinned by the Fock oracle and no (p, q)-ordered covariance view
/// is exposed.
struct GaussianState {
  Vec l;  // mean momenta
  Vec m;  // mean positions
  Mat s;
  int modes() const { return static_cast<int>(l.size()); }
};

/// Validates dimensions and membership of S (throws membership_error otherwise).
GaussianState new_state(const VecView& l, const VecView& m, const MatView& s,
                        double tol = tol_sym);

/// (0, 0, I/2): the n-mode vacuum.
GaussianState vacuum_state(int n);

/// The characteristic function at alpha = x + iy.
Complex chf(const GaussianState& state, const CVecView& alpha);

struct StateSpectrum {
  // s_j = ln((d_j + 1/2)/(d_j - 1/2)) per thermal mode, aligned with the
  // descending-d order; pure modes (|d_j - 1/2| <= tol_pure) are skipped.
  Vec s_params;
  int pure_mode_count = 0;
  // Density-matrix eigenvalues, descending, each with its occupation
  // multi-index over the thermal modes (same order as s_params). Ties are
  // broken toward the lexicographically smaller multi-index.
  std::vector<std::pair<double, std::vector<int>>> top_eigenvalues;
};

/// Top-k point spectrum by best-first search over occupation multi-indices:
/// the eigenvalues are prod_j (1 - e^{-s_j}) * e^{-sum_j s_j k_j}. A state with
/// no thermal modes is pure and returns the single eigenvalue 1.
StateSpectrum state_spectrum(const GaussianState& state, int k);

struct EntropyPurity {
  double entropy = 0.0;  // von Neumann, in nats
  double purity = 1.0;
};

/// entropy = sum_j [(d_j + 1/2) ln(d_j + 1/2) - (d_j - 1/2) ln(d_j - 1/2)],
/// purity = prod_j 1/(2 d_j). Mean-independent.
EntropyPurity entropy_purity(const GaussianState& state);

struct PureWaveParams {
  CVec alpha;   // (m + i l)/sqrt(2)
  CMat u;       // complex unitary on the mode space
  Vec lambdas;  // per-mode Gaussian width parameters, in (0, 1]
  double residual = 0.0;  // covariance reconstruction residual (relative max norm)
};

/// Wave parameters of a pure state: the state is W(alpha) Gamma(U) applied to the
/// product of width-lambda Gaussian vectors. U and lambda come from the Euler
/// form of the Williamson M of 2S (lambda_j = 1/d_j, U the complex form of V2^T);
/// U is a representative, unique only up to the usual phase/degeneracy freedom,
/// and only the covariance reconstruction is contractual.
PureWaveParams pure_wave_params(const GaussianState& state);

/// Covariance of W(alpha) Gamma(U) |e_lambda>: R diag(lambda^{-2}, lambda^2) R^T / 2
/// with R the real form of U. Closes the pure_wave_params round trip.
Mat covariance_from_wave(const CMat& u, const VecView& lambdas);

}  // namespace gqs
