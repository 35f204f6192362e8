/*
 * Copyright 2026 pfstate developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "pfstate/types.hpp"

namespace pfstate {

/// Value in scaled form v = phase * exp(log_abs); phase is unimodular or 0.
/// Keeps Pfaffians/determinants of large matrices representable.
struct LogScaled {
    double log_abs = 0.0;           // -inf encodes an exact zero
    cplx phase = cplx(1.0, 0.0);

    bool is_zero() const { return !(log_abs > -std::numeric_limits<double>::infinity()); }
    cplx value() const { return is_zero() ? cplx(0, 0) : phase * std::exp(log_abs); }
    static LogScaled zero() {
        return {-std::numeric_limits<double>::infinity(), cplx(0, 0)};
    }
    static LogScaled of(cplx v) {
        if (v == cplx(0, 0)) return zero();
        return {std::log(std::abs(v)), v / std::abs(v)};
    }
    LogScaled operator*(const LogScaled& o) const {
        if (is_zero() || o.is_zero()) return zero();
        return {log_abs + o.log_abs, phase * o.phase};
    }
};

/// Pfaffian of a complex skew-symmetric matrix by skew-symmetric elimination
/// with partial pivoting (Parlett-Reid). dim 0 -> 1, odd dim -> 0.
cplx pfaffian(const AntisymmetricMatrix& A);

/// Pfaffian in log-scaled form; same algorithm, overflow-free.
LogScaled log_pfaffian(const AntisymmetricMatrix& A);

/// Pfaffian of the principal submatrix keeping rows/columns in `keep`.
/// Empty set -> 1, odd |keep| -> 0.
cplx pfaffinho(const AntisymmetricMatrix& A, const IndexSet& keep);
LogScaled log_pfaffinho(const AntisymmetricMatrix& A, const IndexSet& keep);

/// Works on a raw matrix assumed skew-symmetric; shared by the wrappers above.
cplx pfaffian_raw(CMat A);
LogScaled log_pfaffian_raw(CMat A);

/// log|det| and phase of a square complex matrix via LU with partial pivoting.
LogScaled log_det(const CMat& m);

/// X = A B^{-1}, solved through an LU of B^T; throws Exc when B's reciprocal
/// condition estimate falls below rcond_min.
template <typename Exc, typename MatT>
MatT right_divide(const MatT& A, const MatT& B, const char* what, double rcond_min = 1e-12) {
    MatT Bt = B.transpose();
    Eigen::PartialPivLU<MatT> lu(Bt);
    if (!(lu.rcond() > rcond_min))
        throw Exc(std::string(what) + " is numerically singular");
    MatT At = A.transpose();
    return lu.solve(At).transpose();
}

// ---- skew-circulant spectral fast path -------------------------------------

/// Spectral form Rt = V * Sigma * V^T of an antisymmetric skew-circulant
/// matrix. `lambdas` holds one eigenvalue per 2x2 block of Sigma, pairing
/// Fourier modes (m, L-1-m); for odd L the final unpaired mode is zero and is
/// not stored. V depends only on L, not on the matrix entries.
struct SpectralForm {
    int L = 0;
    std::vector<cplx> lambdas;  // per conjugate-pair block
    CMat V;

    int num_blocks() const { return static_cast<int>(lambdas.size()); }
    CMat reconstruct() const;  // V * Sigma * V^T
};

/// Eigenvalues Lambda_m = sum_k c_k e^{-2pi i k (m+1/2)/L} of the skew-
/// circulant matrix with first row c, in natural order m = 0..L-1.
CVec skew_circulant_eigenvalues(const CVec& first_row);

/// Full skew-circulant matrix from its first row (sign-flipped wraparound).
CMat skew_circulant_matrix(const CVec& first_row);

/// Spectral form of the antisymmetric skew-circulant matrix with the given
/// first row. Requires c_0 = 0 and c_{L-k} = c_k (the antisymmetric closure);
/// rejects other rows with StructureError.
SpectralForm skew_circulant_spectrum(const CVec& first_row);

/// As above but with the block eigenvalues supplied directly (used by the
/// fast paths that compute them analytically).
SpectralForm spectral_form_from_lambdas(int L, const std::vector<cplx>& lambdas);

/// pf Rt_I = sum_J det V_{I,J} * pf Sigma_{J,J}; only block-aligned J
/// contribute, so the sum has C(L/2, |I|/2) terms.
cplx spectral_pfaffinho(const SpectralForm& s, const IndexSet& keep);

/// Amplitude of the all-plus sequence for a periodic state in spectral form:
/// (1/sqrt2) prod_{j=0}^{L-1} (1+|Lambda_j|^2)^{-1/4}.
double all_plus_amplitude(const SpectralForm& s);

/// log of the same quantity, and log of the norm prod (1+|Lambda_j|^2)^{1/4}.
double log_all_plus_amplitude(const SpectralForm& s);
double log_spectral_norm(const SpectralForm& s);

}  // namespace pfstate
