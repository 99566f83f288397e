#pragma once

#include <cstdint>

#include "gqs/types.hpp"

namespace gqs {

/// The symplectic form J = [[0, -I], [I, 0]] on n modes, basis (p_1..p_n, q_1..q_n).
/// Entries are exact; J^T = -J and J^2 = -I hold without rounding.
Mat omega_matrix(int n);

struct SymplecticCheck {
  bool ok = false;
  double residual = 0.0;  // |L^T J L - J|_max
};

/// Tests L^T J L = J in the max norm; the residual is reported either way.
SymplecticCheck is_symplectic(const MatView& l, double tol = tol_sym);

/// exp(J H) for H symmetric with i.i.d. uniform entries in [-spread, spread].
/// Symplectic in exact arithmetic, deterministic per seed.
Mat random_symplectic(int n, std::uint64_t seed, double spread);

struct EulerDecomposition {
  Mat v1;  // orthogonal symplectic
  Vec d;   // length n, descending, entries >= 1
  Mat v2;  // orthogonal symplectic
  double residual = 0.0;  // |V1 diag(d, d^{-1}) V2 - M|_max / max(1, |M|_max)
};

/// Euler form M = V1 diag(d, d^{-1}) V2 of a symplectic M.
///
/// The singular values of M pair as (d, 1/d); the right singular vectors for the
/// d >= 1 half are assembled into a symplectic basis by greedy selection in
/// descending singular-value order, orthogonalizing each candidate against the
/// planes span{u_k, J u_k} already chosen. Candidates that collapse belong to a
/// cluster of singular values near 1 whose J-partners were consumed earlier and
/// are skipped. Ties are resolved in solver order, then d is sorted descending.
EulerDecomposition euler_decompose(const MatView& m, double tol = tol_sym);

}  // namespace gqs
