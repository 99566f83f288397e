#pragma once

#include "gqs/state.hpp"
#include "gqs/types.hpp"

namespace gqs {

/// Group element (phase, alpha, L) representing phase * W(alpha) Gamma(L). The
/// projective ambiguity of Gamma is normalized away: Gamma(L1)Gamma(L2) is taken
/// as Gamma(L1 L2) exactly, so only the Weyl cocycle contributes to composition.
struct GaussianSymmetry {
  Complex phase{1.0, 0.0};  // unit modulus
  CVec alpha;
  Mat l;  // symplectic
  int modes() const { return static_cast<int>(alpha.size()); }
};

/// Validated constructor: |phase| = 1 within 1e-12 (then renormalized exactly),
/// L symplectic within tol, alpha length matching L.
GaussianSymmetry make_symmetry(Complex phase, const CVecView& alpha, const MatView& l,
                               double tol = tol_sym);

GaussianSymmetry identity_symmetry(int n);

/// alpha' with (Re alpha'; Im alpha') = L (Re alpha; Im alpha).
CVec tilde_action(const MatView& l, const CVecView& alpha);

/// (phase1 phase2 e^{-i Im<alpha1|L1~ alpha2>}, alpha1 + L1~ alpha2, L1 L2).
/// The inner product is conjugate-linear in its first argument.
GaussianSymmetry compose(const GaussianSymmetry& g1, const GaussianSymmetry& g2);

/// Group inverse (conj(phase), -L~^{-1} alpha, L^{-1}); composing either way with
/// g gives (1, 0, I) exactly under the normalized phase convention.
GaussianSymmetry inverse(const GaussianSymmetry& g);

/// The state of U rho U^dagger for U = phase W(alpha) Gamma(L):
/// S -> (L^{-1})^T S L^{-1}, (l; -m) -> (L^{-1})^T (l; -m), then the Weyl shift
/// l += sqrt(2) Im alpha, m += sqrt(2) Re alpha. The phase drops out.
GaussianState act_on_state(const GaussianSymmetry& g, const GaussianState& state);

/// Exact symplectic inverse -J L^T J (no factorization, valid for symplectic L).
Mat symplectic_inverse(const MatView& l);

/// Real 2n x 2n form [[Re U, -Im U], [Im U, Re U]] of a complex n x n matrix
/// acting on (x; y) coordinates of z = x + iy; orthogonal symplectic iff U is
/// unitary.
Mat real_rep(const CMat& u);

/// Inverse of real_rep. Requires O to commute with J within tol (i.e. O is the
/// real form of a complex-linear map).
CMat complex_rep(const MatView& o, double tol = tol_sym);

}  // namespace gqs
