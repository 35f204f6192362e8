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

#include "pfstate/basis.hpp"

#include <cmath>

namespace pfstate {

BitString domain_wall(const SignSequence& S) {
    const int L = S.size();
    if (L < 2) throw StructureError("domain_wall needs L >= 2");
    std::vector<uint8_t> w(L);
    for (int j = 0; j < L; ++j) w[j] = S[j] != S[(j + 1) % L] ? 1 : 0;
    return BitString(std::move(w));
}

BitString base_domain_config(const BitString& C) {
    BitString out = C;
    if (C.sum() % 2 == 1) out[C.size() - 1] ^= 1;
    return out;
}

int sequence_sign(const BitString& C, const SignSequence& S) {
    const int L = require_same_length(C.size(), S.size(), "sequence_sign");
    int count = 0;
    for (int j = 0; j < L; ++j)
        if (C[j] == 0 && S[j] == 1) ++count;
    return (count & 1) ? -1 : 1;
}

AntisymmetricMatrix phi_twist(const AntisymmetricMatrix& R, const BitString& C, double phi) {
    const int L = require_same_length(R.dim(), C.size(), "phi_twist");
    CMat out = R.mat();
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j)
            out(i, j) *= std::polar(1.0, 2.0 * phi * (1 - C[i] - C[j]));
    return AntisymmetricMatrix::symmetrize(out);
}

RMat shift_matrix(int L) {
    RMat P = RMat::Zero(L, L);
    P(0, L - 1) = 1.0;
    for (int j = 1; j < L; ++j) P(j, j - 1) = -1.0;
    return P;
}

DualMatrices dual_matrix(const AntisymmetricMatrix& R) {
    const int L = R.dim();
    if (L < 2) throw StructureError("dual_matrix needs L >= 2");
    const CMat I = CMat::Identity(L, L);
    DualMatrices d;
    d.P = shift_matrix(L);
    d.H = right_divide<SingularCayley>(CMat(R.mat() - I), CMat(R.mat() + I), "dual_matrix: (R + I)");
    CMat HP = d.H * d.P;
    CMat Rt = right_divide<SingularCayley>(CMat(I + HP), CMat(HP - I), "dual_matrix: (H P - I)");
    d.Rtilde = AntisymmetricMatrix::symmetrize(Rt);
    const CMat& m = d.Rtilde.mat();
    d.logNormTilde = 0.25 * log_det(CMat(I + m.adjoint() * m)).log_abs;
    d.normTilde = std::exp(d.logNormTilde);
    return d;
}

DualMatrices dual_matrix_phi(const GaussianState& state, double phi) {
    return dual_matrix(phi_twist(state.R(), state.base(), phi));
}

IndexSet wall_keep_set(const BitString& C, const SignSequence& S) {
    return symmetric_difference(base_domain_config(C), domain_wall(S));
}

namespace {
cplx alpha_factor(const SignSequence& S, const BasisSpec& basis, AlphaConvention conv) {
    double a = conv == AlphaConvention::minus_per_minus ? basis.alpha : -basis.alpha;
    return std::polar(1.0, -a * S.num_minus());
}
}  // namespace

cplx amplitude_phi_with_dual(const GaussianState& state, const DualMatrices& dual,
                             const SignSequence& S, const BasisSpec& basis, AlphaConvention conv) {
    require_same_length(state.size(), S.size(), "amplitude_phi");
    IndexSet keep = wall_keep_set(state.base(), S);
    if (keep.size() % 2 == 1) return cplx(0, 0);
    cplx pf = pfaffinho(dual.Rtilde, keep);
    double sgn = sequence_sign(state.base(), S);
    return state.phase() * sgn * pf * alpha_factor(S, basis, conv) /
           (std::sqrt(2.0) * dual.normTilde);
}

LogScaled log_amplitude_phi_with_dual(const GaussianState& state, const DualMatrices& dual,
                                      const SignSequence& S, const BasisSpec& basis,
                                      AlphaConvention conv) {
    require_same_length(state.size(), S.size(), "amplitude_phi");
    IndexSet keep = wall_keep_set(state.base(), S);
    if (keep.size() % 2 == 1) return LogScaled::zero();
    LogScaled pf = log_pfaffinho(dual.Rtilde, keep);
    if (pf.is_zero()) return pf;
    pf.log_abs -= 0.5 * std::log(2.0) + dual.logNormTilde;
    pf.phase *= state.phase() * double(sequence_sign(state.base(), S)) *
                alpha_factor(S, basis, conv);
    return pf;
}

cplx amplitude_phi(const GaussianState& state, const SignSequence& S, const BasisSpec& basis,
                   AlphaConvention conv) {
    DualMatrices dual = dual_matrix_phi(state, basis.phi);
    return amplitude_phi_with_dual(state, dual, S, basis, conv);
}

}  // namespace pfstate
