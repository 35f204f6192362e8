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

#include "pfstate/oracle.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/Sparse>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

namespace pfstate::oracle {

namespace {
void check_size(int L, int limit, const char* what) {
    if (L > limit) throw SizeLimit(std::string(what) + ": L exceeds the dense-oracle limit");
}
}  // namespace

int bits_to_index(const BitString& b) {
    int idx = 0;
    for (int j = 0; j < b.size(); ++j) idx = (idx << 1) | b[j];
    return idx;
}

BitString index_to_bits(int idx, int L) {
    std::vector<uint8_t> bits(L);
    for (int j = 0; j < L; ++j) bits[j] = (idx >> (L - 1 - j)) & 1;
    return BitString(std::move(bits));
}

DenseState dense_from_gaussian(const GaussianState& state) {
    const int L = state.size();
    check_size(L, 14, "dense_from_gaussian");
    DenseState v{L, CVec(1 << L)};
    for (int idx = 0; idx < (1 << L); ++idx)
        v.amp(idx) = amplitude_z(state, index_to_bits(idx, L));
    return v;
}

Eigen::SparseMatrix<cplx> fermion_annihilation(int L, int l) {
    const int dim = 1 << L;
    std::vector<Eigen::Triplet<cplx>> trip;
    trip.reserve(dim / 2);
    for (int idx = 0; idx < dim; ++idx) {
        if (!((idx >> (L - 1 - l)) & 1)) continue;
        int count = 0;
        for (int j = 0; j < l; ++j) count += (idx >> (L - 1 - j)) & 1;
        int jdx = idx & ~(1 << (L - 1 - l));
        trip.emplace_back(jdx, idx, (count & 1) ? -1.0 : 1.0);
    }
    Eigen::SparseMatrix<cplx> c(dim, dim);
    c.setFromTriplets(trip.begin(), trip.end());
    return c;
}

DenseState dense_from_gaussian_fock(const GaussianState& state) {
    const int L = state.size();
    check_size(L, 8, "dense_from_gaussian_fock");
    const int dim = 1 << L;
    std::vector<Eigen::SparseMatrix<cplx>> a(L);
    for (int j = 0; j < L; ++j) {
        Eigen::SparseMatrix<cplx> c = fermion_annihilation(L, j);
        a[j] = state.base()[j] ? c : Eigen::SparseMatrix<cplx>(c.adjoint());
    }
    Eigen::SparseMatrix<cplx> quad(dim, dim);
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j) {
            cplx r = state.R()(i, j);
            if (r != cplx(0, 0)) quad += 0.5 * r * (a[i] * a[j]);
        }
    CVec v = CVec::Zero(dim);
    v(bits_to_index(state.base())) = 1.0;
    CVec acc = v;
    CVec term = v;
    for (int k = 1; k <= L / 2 + 1; ++k) {
        term = (quad * term) / double(k);
        acc += term;
    }
    return DenseState{L, acc * (state.phase() / state.norm())};
}

DenseState dense_from_generic(const GenericGaussianExponent& g) {
    const int L = g.size();
    check_size(L, 8, "dense_from_generic");
    const int dim = 1 << L;
    // (c^dag_1..c^dag_L, c_1..c_L) M (c_1..c_L, c^dag_1..c^dag_L)^T
    std::vector<CMat> ops(2 * L);
    for (int j = 0; j < L; ++j) {
        CMat c = CMat(fermion_annihilation(L, j));
        ops[j] = c.adjoint();
        ops[L + j] = c;
    }
    CMat quad = CMat::Zero(dim, dim);
    for (int i = 0; i < 2 * L; ++i)
        for (int j = 0; j < 2 * L; ++j) {
            cplx m = g.M(i, j);
            if (m != cplx(0, 0)) quad += 0.5 * m * (ops[i] * ops[(j + L) % (2 * L)]);
        }
    CVec v = CVec::Zero(dim);
    v(bits_to_index(g.base)) = 1.0;
    CVec out = quad.exp() * v;
    return DenseState{L, out / out.norm()};
}

namespace {
DenseState apply_site_matrix(const DenseState& v, const Eigen::Matrix2cd& W) {
    DenseState out{v.L, CVec(v.amp.size())};
    CVec cur = v.amp;
    for (int j = 0; j < v.L; ++j) {
        const int stride = 1 << (v.L - 1 - j);
        CVec nxt(cur.size());
        for (int base = 0; base < (1 << v.L); ++base) {
            if (base & stride) continue;
            cplx a0 = cur(base), a1 = cur(base | stride);
            nxt(base) = W(0, 0) * a0 + W(0, 1) * a1;
            nxt(base | stride) = W(1, 0) * a0 + W(1, 1) * a1;
        }
        cur.swap(nxt);
    }
    out.amp = cur;
    return out;
}

Eigen::Matrix2cd basis_bras(double phi, double alpha) {
    Eigen::Matrix2cd W;
    const double r = 1.0 / std::sqrt(2.0);
    W(0, 0) = r;
    W(0, 1) = r * std::polar(1.0, phi);
    W(1, 0) = -r * std::polar(1.0, -alpha);
    W(1, 1) = r * std::polar(1.0, phi - alpha);
    return W;
}
}  // namespace

DenseState rotate(const DenseState& v, double phi, double alpha) {
    check_size(v.L, 14, "rotate");
    return apply_site_matrix(v, basis_bras(phi, alpha));
}

DenseState unrotate(const DenseState& v, double phi, double alpha) {
    check_size(v.L, 14, "unrotate");
    Eigen::Matrix2cd W = basis_bras(phi, alpha);
    return apply_site_matrix(v, W.adjoint());
}

DenseState tfi_exact_ground_state(const TFIModel& model) {
    const int L = model.L;
    check_size(L, 12, "tfi_exact_ground_state");
    const int dim = 1 << L;
    RMat H = RMat::Zero(dim, dim);
    for (int idx = 0; idx < dim; ++idx) {
        int nz = 0;
        for (int j = 0; j < L; ++j) nz += (idx >> j) & 1;
        H(idx, idx) += -model.h / 2.0 * (2 * nz - L);
        const int nb = model.boundary == Boundary::periodic ? L : L - 1;
        for (int j = 0; j < nb; ++j) {
            int k = (j + 1) % L;
            int jdx = idx ^ (1 << (L - 1 - j)) ^ (1 << (L - 1 - k));
            H(jdx, idx) += -0.5;
        }
    }
    Eigen::SelfAdjointEigenSolver<RMat> es(H);
    if (es.eigenvalues()(1) - es.eigenvalues()(0) <= 1e-8)
        throw DegenerateGroundState("tfi_exact_ground_state: spectral gap below 1e-8");
    RVec gs = es.eigenvectors().col(0);
    // fixed global-phase convention: largest-modulus amplitude real positive
    Eigen::Index imax;
    gs.cwiseAbs().maxCoeff(&imax);
    if (gs(imax) < 0) gs = -gs;
    return DenseState{L, gs.cast<cplx>()};
}

double probability_z(const DenseState& v, const BitString& I) {
    return std::norm(v.amp(bits_to_index(I)));
}

double probability_phi(const DenseState& v, const SignSequence& S, double phi, double alpha) {
    DenseState r = rotate(v, phi, alpha);
    int idx = 0;
    for (int j = 0; j < S.size(); ++j) idx = (idx << 1) | S[j];
    return std::norm(r.amp(idx));
}

double overlap(const DenseState& a, const DenseState& b) {
    return std::abs(a.amp.dot(b.amp));
}

}  // namespace pfstate::oracle
