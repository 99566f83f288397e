#pragma once

#include "gqs/types.hpp"

namespace gqs::fock {

/// Dense operator on the Fock space truncated at occupation `cutoff` per mode
/// (dimension (cutoff + 1)^modes, mode 1 is the first tensor factor).
struct FockOperator {
  int cutoff = 0;
  int modes = 1;
  CMat m;
  bool range_flag = false;  // a validated-accuracy bound was exceeded on construction
};

/// Annihilation operator, a|k> = sqrt(k)|k-1>.
FockOperator ladder(int cutoff);

/// Truncated exponential vector e(z): components z^k / sqrt(k!). Not normalized.
CVec coherent_vec(Complex z, int cutoff);

/// D(alpha) = exp(alpha a^dag - conj(alpha) a): the exact exponential of the
/// truncated generator, evaluated spectrally (unitary to machine precision).
FockOperator displacement_op(Complex alpha, int cutoff);

/// exp(-i theta a^dag a).
FockOperator rotation_op(double theta, int cutoff);

/// exp((conj(zeta) a^2 - zeta (a^dag)^2)/2) with zeta = r e^{i phi}. |r| > 0.6
/// sets range_flag: the matrix stays exactly unitary but its action drifts from
/// the untruncated operator faster than the validated bounds.
FockOperator squeeze_op(double r, double phi, int cutoff);

/// Thermal density matrix diag((1 - e^{-s}) e^{-sk}), s > 0. Deliberately not
/// renormalized after truncation; trace = 1 - e^{-s(cutoff + 1)}.
FockOperator thermal_rho(double s, int cutoff);

/// |0><0| on one or two modes.
FockOperator vacuum_rho(int cutoff, int modes = 1);

/// Tensor product of two single-mode operators (first argument = mode 1).
FockOperator tensor(const FockOperator& a, const FockOperator& b);

/// Balanced beamsplitter Gamma(C), C = [[1, 1], [1, -1]]/sqrt(2), on two modes:
/// exp(i pi dGamma(P-)) with P- the eigenprojector of C at -1. Conserves total
/// photon number, so it is exponentiated block-by-block and stays exactly
/// unitary at any cutoff.
FockOperator beamsplitter_op(int cutoff);

/// Two-mode pure density matrix purifying the thermal state of symplectic
/// eigenvalue d > 1/2: Gamma(C)(S(r1) x S(r2))|00> with r_i = ln(D_i)/2 from the
/// splitting of 2d (r2 = -r1 since D1 D2 = 1). range_flag is inherited from the
/// squeezes.
FockOperator purified_thermal_rho(double d, int cutoff);

struct OracleChf {
  Complex value{0.0, 0.0};
  double trace = 0.0;
  bool trace_ok = true;  // false when |trace - 1| > 1e-3 (cutoff too small)
};

/// Tr(rho D(alpha)), the displacement tensored per mode: independent ground
/// truth for chf.
OracleChf oracle_chf(const FockOperator& rho, const CVecView& alpha);

/// Index contraction over the discarded mode of a two-mode operator
/// (keep = 1 or 2, 1-based).
FockOperator partial_trace(const FockOperator& rho, int keep);

/// The 2n x 2n Fourier kernel unitary [[-I, I], [iI, iI]]/sqrt(2). Its cube is
/// the scalar (-1 - i)/sqrt(2), so the matrix has order 24: U^12 = -I, and the
/// eigenvalues e^{5 i pi/12}, e^{13 i pi/12} sit on the odd pi/12 grid.
CMat qft_kernel_unitary(int n);

}  // namespace gqs::fock
