#pragma once

#include "gqs/types.hpp"

namespace gqs {

struct WilliamsonDecomposition {
  Mat m;  // symplectic; M^T diag(d, d) M reconstructs the input
  Vec d;  // symplectic spectrum, descending, strictly positive
  double residual = 0.0;  // |M^T diag(d, d) M - A|_max / |A|_max
};

/// Williamson normal form A = M^T diag(d, d) M of a symmetric positive definite A.
///
/// Constructive route through B = A^{1/2} J A^{1/2}: the skew matrix B is brought
/// to canonical form by a real orthogonal basis assembled from eigenvectors of
/// the Hermitian matrix iB (real and imaginary parts of the positive-eigenvalue
/// vectors, scaled by sqrt(2), are automatically orthonormal, degeneracies
/// included). Of the two transpose orientations of the resulting symplectic M,
/// the one that reconstructs A within tol_recon is kept.
WilliamsonDecomposition williamson_decompose(const MatView& a, double tol = tol_sym);

/// The d_j, descending: moduli of the purely imaginary eigenvalue pairs of
/// B = A^{1/2} J A^{1/2}, computed by a general (non-Hermitian) eigensolve so the
/// result is independent of the route taken in williamson_decompose. Invariant
/// under A -> L^T A L for symplectic L.
Vec symplectic_spectrum(const MatView& a, double tol = tol_sym);

}  // namespace gqs
