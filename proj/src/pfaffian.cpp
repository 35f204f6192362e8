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

#include "pfstate/pfaffian.hpp"

#include <cmath>

namespace pfstate {

namespace {
constexpr double kPivotFloor = 1e-300;  // below this the Pfaffian is declared 0

// Skew-symmetric elimination with partial pivoting. Accumulates the pivots
// through `acc`, which must provide mul(cplx) and flip_sign().
template <typename Acc>
void eliminate(CMat& A, Acc& acc) {
    const Eigen::Index n = A.rows();
    for (Eigen::Index k = 0; k + 1 < n; k += 2) {
        Eigen::Index kp;
        A.col(k).segment(k + 1, n - k - 1).cwiseAbs().maxCoeff(&kp);
        kp += k + 1;
        if (std::abs(A(kp, k)) < kPivotFloor) {
            acc.zero();
            return;
        }
        if (kp != k + 1) {
            A.row(k + 1).swap(A.row(kp));
            A.col(k + 1).swap(A.col(kp));
            acc.flip_sign();
        }
        acc.mul(A(k, k + 1));
        if (k + 2 < n) {
            const Eigen::Index m = n - k - 2;
            CVec tau = A.row(k).segment(k + 2, m) / A(k, k + 1);
            CVec col = A.col(k + 1).segment(k + 2, m);
            A.bottomRightCorner(m, m).noalias() += tau * col.transpose();
            A.bottomRightCorner(m, m).noalias() -= col * tau.transpose();
        }
    }
}

struct PlainAcc {
    cplx val{1.0, 0.0};
    bool zeroed = false;
    void mul(cplx p) { val *= p; }
    void flip_sign() { val = -val; }
    void zero() { zeroed = true; }
};

struct LogAcc {
    LogScaled val{0.0, cplx(1.0, 0.0)};
    bool zeroed = false;
    void mul(cplx p) {
        val.log_abs += std::log(std::abs(p));
        val.phase *= p / std::abs(p);
    }
    void flip_sign() { val.phase = -val.phase; }
    void zero() { zeroed = true; }
};
}  // namespace

cplx pfaffian_raw(CMat A) {
    const Eigen::Index n = A.rows();
    if (n == 0) return cplx(1.0, 0.0);
    if (n % 2 == 1) return cplx(0.0, 0.0);
    PlainAcc acc;
    eliminate(A, acc);
    return acc.zeroed ? cplx(0.0, 0.0) : acc.val;
}

LogScaled log_pfaffian_raw(CMat A) {
    const Eigen::Index n = A.rows();
    if (n == 0) return LogScaled{};
    if (n % 2 == 1) return LogScaled::zero();
    LogAcc acc;
    eliminate(A, acc);
    return acc.zeroed ? LogScaled::zero() : acc.val;
}

cplx pfaffian(const AntisymmetricMatrix& A) { return pfaffian_raw(A.mat()); }
LogScaled log_pfaffian(const AntisymmetricMatrix& A) { return log_pfaffian_raw(A.mat()); }

namespace {
CMat extract(const CMat& m, const IndexSet& keep) {
    const int k = keep.size();
    CMat sub(k, k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) sub(a, b) = m(keep[a], keep[b]);
    return sub;
}
}  // namespace

cplx pfaffinho(const AntisymmetricMatrix& A, const IndexSet& keep) {
    if (keep.empty()) return cplx(1.0, 0.0);
    if (keep.size() % 2 == 1) return cplx(0.0, 0.0);
    if (keep[keep.size() - 1] >= A.dim()) throw StructureError("pfaffinho: index out of range");
    return pfaffian_raw(extract(A.mat(), keep));
}

LogScaled log_pfaffinho(const AntisymmetricMatrix& A, const IndexSet& keep) {
    if (keep.empty()) return LogScaled{};
    if (keep.size() % 2 == 1) return LogScaled::zero();
    if (keep[keep.size() - 1] >= A.dim()) throw StructureError("pfaffinho: index out of range");
    return log_pfaffian_raw(extract(A.mat(), keep));
}

LogScaled log_det(const CMat& m) {
    if (m.rows() == 0) return LogScaled{};
    Eigen::PartialPivLU<CMat> lu(m);
    LogScaled out;
    out.phase = cplx(lu.permutationP().determinant(), 0.0);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        cplx u = lu.matrixLU()(i, i);
        if (u == cplx(0, 0)) return LogScaled::zero();
        out.log_abs += std::log(std::abs(u));
        out.phase *= u / std::abs(u);
    }
    return out;
}

// ---- skew-circulant spectral path ------------------------------------------

CMat skew_circulant_matrix(const CVec& first_row) {
    const int L = static_cast<int>(first_row.size());
    CMat m(L, L);
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j) {
            int k = j - i;
            m(i, j) = k >= 0 ? first_row(k) : -first_row(L + k);
        }
    return m;
}

CVec skew_circulant_eigenvalues(const CVec& first_row) {
    const int L = static_cast<int>(first_row.size());
    CVec lam(L);
    for (int m = 0; m < L; ++m) {
        cplx s(0, 0);
        for (int k = 0; k < L; ++k)
            s += first_row(k) * std::polar(1.0, -2.0 * M_PI * k * (m + 0.5) / L);
        lam(m) = s;
    }
    return lam;
}

namespace {
std::vector<int> pair_order(int L) {
    std::vector<int> order;
    int lo = 0, hi = L - 1;
    while (lo < hi) {
        order.push_back(lo++);
        order.push_back(hi--);
    }
    if (lo == hi) order.push_back(lo);
    return order;
}

// V = e^{-i pi/4} U K^dag with U the half-integer Fourier columns in paired
// order and K blockdiag of J = (1/sqrt2)[[1, i],[i, 1]] (final 1 for odd L).
CMat build_V(int L) {
    const std::vector<int> order = pair_order(L);
    CMat U(L, L);
    for (int col = 0; col < L; ++col) {
        int m = order[col];
        for (int j = 0; j < L; ++j)
            U(j, col) = std::polar(1.0 / std::sqrt(double(L)), -2.0 * M_PI * (m + 0.5) * j / L);
    }
    CMat Kd = CMat::Zero(L, L);  // K^dag
    const double r = 1.0 / std::sqrt(2.0);
    for (int b = 0; 2 * b + 1 < L; ++b) {
        Kd(2 * b, 2 * b) = r;
        Kd(2 * b, 2 * b + 1) = cplx(0, -r);
        Kd(2 * b + 1, 2 * b) = cplx(0, -r);
        Kd(2 * b + 1, 2 * b + 1) = r;
    }
    if (L % 2 == 1) Kd(L - 1, L - 1) = 1.0;
    return std::polar(1.0, -M_PI / 4.0) * (U * Kd);
}
}  // namespace

SpectralForm spectral_form_from_lambdas(int L, const std::vector<cplx>& lambdas) {
    if (static_cast<int>(lambdas.size()) != L / 2)
        throw StructureError("spectral form needs L/2 block eigenvalues");
    SpectralForm s;
    s.L = L;
    s.lambdas = lambdas;
    s.V = build_V(L);
    return s;
}

SpectralForm skew_circulant_spectrum(const CVec& first_row) {
    const int L = static_cast<int>(first_row.size());
    if (L < 1) throw StructureError("empty first row");
    double scale = std::max(1.0, first_row.cwiseAbs().maxCoeff());
    if (std::abs(first_row(0)) > 1e-12 * scale)
        throw StructureError("skew-circulant antisymmetric input needs c_0 = 0");
    for (int k = 1; k < L; ++k)
        if (std::abs(first_row(k) - first_row(L - k)) > 1e-12 * scale)
            throw StructureError("first row violates the antisymmetric skew-circulant closure c_{L-k} = c_k");
    CVec lam = skew_circulant_eigenvalues(first_row);
    std::vector<cplx> blocks(L / 2);
    for (int b = 0; b < L / 2; ++b) blocks[b] = lam(b);  // pairs (b, L-1-b) carry (lam, -lam)
    return spectral_form_from_lambdas(L, blocks);
}

CMat SpectralForm::reconstruct() const {
    CMat Sigma = CMat::Zero(L, L);
    for (int b = 0; b < num_blocks(); ++b) {
        Sigma(2 * b, 2 * b + 1) = cplx(0, 1) * lambdas[b];
        Sigma(2 * b + 1, 2 * b) = -cplx(0, 1) * lambdas[b];
    }
    return V * Sigma * V.transpose();
}

cplx spectral_pfaffinho(const SpectralForm& s, const IndexSet& keep) {
    const int k = keep.size();
    if (k == 0) return cplx(1.0, 0.0);
    if (k % 2 == 1) return cplx(0.0, 0.0);
    const int nb = s.num_blocks();
    const int want = k / 2;
    // iterate over combinations of `want` blocks out of nb
    std::vector<int> comb(want);
    for (int i = 0; i < want; ++i) comb[i] = i;
    cplx total(0, 0);
    CMat sub(k, k);
    while (true) {
        cplx pf_sigma(1, 0);
        for (int i = 0; i < want; ++i) pf_sigma *= cplx(0, 1) * s.lambdas[comb[i]];
        for (int a = 0; a < k; ++a)
            for (int i = 0; i < want; ++i) {
                sub(a, 2 * i) = s.V(keep[a], 2 * comb[i]);
                sub(a, 2 * i + 1) = s.V(keep[a], 2 * comb[i] + 1);
            }
        total += sub.determinant() * pf_sigma;
        // next combination
        int pos = want - 1;
        while (pos >= 0 && comb[pos] == nb - want + pos) --pos;
        if (pos < 0) break;
        ++comb[pos];
        for (int i = pos + 1; i < want; ++i) comb[i] = comb[i - 1] + 1;
    }
    return total;
}

double log_spectral_norm(const SpectralForm& s) {
    double sum = 0.0;
    for (const cplx& l : s.lambdas) sum += std::log1p(std::norm(l));
    return 0.5 * sum;  // pairs share |lambda|; unpaired odd mode is zero
}

double all_plus_amplitude(const SpectralForm& s) {
    return std::exp(log_all_plus_amplitude(s));
}

double log_all_plus_amplitude(const SpectralForm& s) {
    return -0.5 * std::log(2.0) - log_spectral_norm(s);
}

}  // namespace pfstate
