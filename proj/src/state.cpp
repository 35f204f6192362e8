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

#include "pfstate/state.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>

namespace pfstate {

GaussianState::GaussianState(AntisymmetricMatrix R, BitString base, cplx phase)
    : R_(std::move(R)), base_(std::move(base)), phase_(phase) {
    require_same_length(R_.dim(), base_.size(), "GaussianState");
    const CMat& m = R_.mat();
    CMat gram = CMat::Identity(m.rows(), m.cols()) + m.adjoint() * m;
    log_norm_ = 0.25 * log_det(gram).log_abs;
    norm_ = std::exp(log_norm_);
    if (std::abs(std::abs(phase_) - 1.0) > 1e-9)
        throw StructureError("GaussianState phase must be unimodular");
}

int sign_cfg(const BitString& C, const BitString& I) {
    const int L = require_same_length(C.size(), I.size(), "sign_cfg");
    int prefix = 0;
    int sign = 1;
    for (int i = 1; i < L; ++i) {
        prefix += C[i - 1];
        if (C[i] != I[i] && (prefix & 1)) sign = -sign;
    }
    return sign;
}

IndexSet symmetric_difference(const BitString& C, const BitString& I) {
    const int L = require_same_length(C.size(), I.size(), "symmetric_difference");
    std::vector<int> idx;
    for (int j = 0; j < L; ++j)
        if (C[j] != I[j]) idx.push_back(j);
    return IndexSet(std::move(idx));
}

cplx amplitude_z(const GaussianState& state, const BitString& I) {
    IndexSet diff = symmetric_difference(state.base(), I);
    if (diff.size() % 2 == 1) return cplx(0, 0);
    cplx pf = pfaffinho(state.R(), diff);
    return state.phase() * double(sign_cfg(state.base(), I)) * pf / state.norm();
}

LogScaled log_amplitude_z(const GaussianState& state, const BitString& I) {
    IndexSet diff = symmetric_difference(state.base(), I);
    if (diff.size() % 2 == 1) return LogScaled::zero();
    LogScaled pf = log_pfaffinho(state.R(), diff);
    if (pf.is_zero()) return pf;
    pf.log_abs -= state.log_norm();
    pf.phase *= state.phase() * double(sign_cfg(state.base(), I));
    return pf;
}

GaussianState rebase(const GaussianState& state, const BitString& Cprime) {
    const int L = require_same_length(state.size(), Cprime.size(), "rebase");
    const BitString& C = state.base();
    if (symmetric_difference(C, Cprime).size() % 2 == 1)
        throw ZeroAmplitudeBase("rebase: target configuration is in the opposite parity sector");

    const cplx pf_cc = pfaffinho(state.R(), symmetric_difference(C, Cprime));
    const int s_ccp = sign_cfg(C, Cprime);

    // r'_ij from the two-flip configurations I' of C'.
    CMat Rp = CMat::Zero(L, L);
    std::vector<double> mags;
    mags.reserve(L * (L - 1) / 2);
    for (int i = 0; i < L; ++i) {
        for (int j = i + 1; j < L; ++j) {
            BitString Ip = Cprime;
            Ip[i] ^= 1;
            Ip[j] ^= 1;
            cplx pf_ci = pfaffinho(state.R(), symmetric_difference(C, Ip));
            mags.push_back(std::abs(pf_ci));
            cplx val = double(s_ccp * sign_cfg(C, Ip) * sign_cfg(Cprime, Ip)) * pf_ci;
            Rp(i, j) = val;
            Rp(j, i) = -val;
        }
    }
    // scale-free zero-amplitude detection: |pf R_CC'| against the median
    // two-flip pfaffinho magnitude
    std::nth_element(mags.begin(), mags.begin() + mags.size() / 2, mags.end());
    double median = mags.empty() ? 0.0 : mags[mags.size() / 2];
    if (std::abs(pf_cc) <= 1e-12 * std::max(median, 1e-30))
        throw ZeroAmplitudeBase("rebase: target configuration has vanishing amplitude");
    Rp /= pf_cc;

    GaussianState rebased(AntisymmetricMatrix::symmetrize(Rp), Cprime);
    // amplitude-for-amplitude equality: the unphased rebased state equals the
    // parent up to amp_parent(C') * N_{R'}, which is unimodular.
    cplx amp_cc = state.phase() * double(s_ccp) * pf_cc / state.norm();
    cplx rho = amp_cc * rebased.norm();
    rho /= std::abs(rho);
    return GaussianState(rebased.R(), Cprime, rho);
}

GenericGaussianExponent::GenericGaussianExponent(CMat m, BitString C) : M(std::move(m)), base(std::move(C)) {
    const int L = base.size();
    if (M.rows() != 2 * L || M.cols() != 2 * L)
        throw StructureError("GenericGaussianExponent: M must be 2L x 2L");
    CMat J = CMat::Zero(2 * L, 2 * L);
    J.topRightCorner(L, L) = CMat::Identity(L, L);
    J.bottomLeftCorner(L, L) = CMat::Identity(L, L);
    CMat JM = J * M;
    double scale = std::max(1.0, JM.cwiseAbs().maxCoeff());
    if ((JM + JM.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
        throw StructureError("GenericGaussianExponent: J.M must be antisymmetric");
}

GaussianState from_generic(const GenericGaussianExponent& g) {
    const int L = g.size();
    // Pi_C exchanges c_j^dag <-> c_j on occupied sites (rows/cols j and L+j).
    CMat Mbar = g.M;
    for (int j = 0; j < L; ++j) {
        if (g.base[j]) {
            Mbar.row(j).swap(Mbar.row(L + j));
            Mbar.col(j).swap(Mbar.col(L + j));
        }
    }
    CMat T = Mbar.exp();
    CMat T12 = T.topRightCorner(L, L);
    CMat T22 = T.bottomRightCorner(L, L);
    Eigen::JacobiSVD<CMat> svd(T22);
    const auto& sv = svd.singularValues();
    if (sv(0) <= 0.0 || sv(sv.size() - 1) <= 0.0 || sv(0) / sv(sv.size() - 1) > 1e12)
        throw SingularBlock("from_generic: T_22 numerically singular (vanishing base amplitude)");
    CMat Rb = T12 * T22.inverse();
    return GaussianState(AntisymmetricMatrix::symmetrize(Rb), g.base);
}

}  // namespace pfstate
