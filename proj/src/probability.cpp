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

#include "pfstate/probability.hpp"

#include <cmath>

namespace pfstate {

namespace {
void require_real_vacuum(const GaussianState& state, const char* what) {
    if (!state.R().is_real())
        throw NotRealMatrix(std::string(what) + ": R must be real");
    if (state.base().sum() != 0)
        throw StructureError(std::string(what) + ": determinant fast path needs the vacuum base");
}

double log_det_abs_real(const RMat& m) {
    Eigen::PartialPivLU<RMat> lu(m);
    double ld = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        double u = std::abs(lu.matrixLU()(i, i));
        if (u == 0.0) return -std::numeric_limits<double>::infinity();
        ld += std::log(u);
    }
    return ld;
}

RVec wall_sign_diag(const SignSequence& S) {
    BitString W = domain_wall(S);
    RVec d(W.size());
    for (int j = 0; j < W.size(); ++j) d(j) = W[j] ? -1.0 : 1.0;
    return d;
}
}  // namespace

double prob_z(const GaussianState& state, const BitString& I) {
    cplx a = amplitude_z(state, I);
    return std::norm(a);
}

double log_prob_z(const GaussianState& state, const BitString& I) {
    LogScaled a = log_amplitude_z(state, I);
    if (a.is_zero()) return -std::numeric_limits<double>::infinity();
    return 2.0 * a.log_abs;
}

double log_prob_z_real_G(const RMat& G, const BitString& I) {
    const int L = require_same_length(static_cast<int>(G.rows()), I.size(), "prob_z_real");
    RMat M(L, L);
    for (int i = 0; i < L; ++i) {
        double s = I[i] ? -1.0 : 1.0;
        M.row(i) = -0.5 * s * G.row(i);
        M(i, i) += 0.5;
    }
    return log_det_abs_real(M);
}

double prob_z_real(const GaussianState& state, const BitString& I) {
    require_real_vacuum(state, "prob_z_real");
    RMat G = correlations(state.R()).G.real();
    return std::exp(log_prob_z_real_G(G, I));
}

double prob_from_dual_matrix(const AntisymmetricMatrix& Rtilde, const IndexSet& keep) {
    const int L = Rtilde.dim();
    const CMat& m = Rtilde.mat();
    double logN2 = 0.5 * log_det(CMat(CMat::Identity(L, L) + m.adjoint() * m)).log_abs;
    // masked matrix: rows of Rtilde on kept sites, identity rows elsewhere
    CMat M = CMat::Identity(L, L);
    for (int j : keep) M.row(j) = m.row(j);
    LogScaled d = log_det(M);
    if (d.is_zero()) return 0.0;
    return std::exp(d.log_abs - std::log(2.0) - logN2);
}

double prob_phi_with_dual(const GaussianState& state, const DualMatrices& dual,
                          const SignSequence& S) {
    return std::exp(log_prob_phi_with_dual(state, dual, S));
}

double log_prob_phi_with_dual(const GaussianState& state, const DualMatrices& dual,
                              const SignSequence& S) {
    IndexSet keep = wall_keep_set(state.base(), S);
    const CMat& m = dual.Rtilde.mat();
    CMat M = CMat::Identity(m.rows(), m.cols());
    for (int j : keep) M.row(j) = m.row(j);
    LogScaled d = log_det(M);
    if (d.is_zero()) return -std::numeric_limits<double>::infinity();
    return d.log_abs - std::log(2.0) - 2.0 * dual.logNormTilde;
}

double prob_phi(const GaussianState& state, const SignSequence& S, double phi) {
    DualMatrices dual = dual_matrix_phi(state, phi);
    return prob_phi_with_dual(state, dual, S);
}

double log_prob_x_G(const RMat& G, const SignSequence& S) {
    const int L = require_same_length(static_cast<int>(G.rows()), S.size(), "prob_x");
    RVec d = wall_sign_diag(S);
    RMat GP = G * shift_matrix(L);
    RMat M = (RMat::Identity(L, L) - d.asDiagonal() * GP) * 0.5;
    double ld = log_det_abs_real(M);
    return ld - std::log(2.0);
}

double log_prob_y_G(const RMat& G, const SignSequence& S) {
    const int L = require_same_length(static_cast<int>(G.rows()), S.size(), "prob_y");
    RVec d = wall_sign_diag(S);
    RMat M = (shift_matrix(L) - G * d.asDiagonal()) * 0.5;
    double ld = log_det_abs_real(M);
    return ld - std::log(2.0);
}

double prob_x(const GaussianState& state, const SignSequence& S) {
    require_real_vacuum(state, "prob_x");
    RMat G = correlations(state.R()).G.real();
    return std::exp(log_prob_x_G(G, S));
}

double prob_y(const GaussianState& state, const SignSequence& S) {
    require_real_vacuum(state, "prob_y");
    RMat G = correlations(state.R()).G.real();
    return std::exp(log_prob_y_G(G, S));
}

AntisymmetricMatrix dual_cot_phi(const AntisymmetricMatrix& R, double phi) {
    if (std::abs(std::sin(phi)) < 1e-12)
        throw SingularCayley("dual_cot_phi requires sin(phi) != 0");
    const int L = R.dim();
    const CMat I = CMat::Identity(L, L);
    RMat P = shift_matrix(L);
    CMat H = right_divide<SingularCayley>(CMat(R.mat() - I), CMat(R.mat() + I), "dual_cot_phi: (R + I)");
    const cplx ict = cplx(0, 1.0 / std::tan(phi));
    CMat HP = H * P;
    CMat A = H - ict * HP + P - ict * I;
    CMat B = -H - ict * HP + P + ict * I;
    CMat Rt = right_divide<SingularCayley>(A, B, "dual_cot_phi: denominator");
    return AntisymmetricMatrix::symmetrize(Rt);
}

}  // namespace pfstate
