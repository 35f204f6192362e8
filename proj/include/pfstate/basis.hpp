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

#include "pfstate/state.hpp"

namespace pfstate {

/// Basis in the xy plane: single-site eigenstates of cos(phi) sigma^x +
/// sin(phi) sigma^y with a relative phase e^{-i alpha} attached to each '-'.
/// phi = 0 is sigma^x, phi = pi/2 is sigma^y (theta is fixed at pi/2).
struct BasisSpec {
    double phi = 0.0;
    double alpha = 0.0;
};

/// Convention for the alpha phase. The prose rule multiplies e^{-i alpha} per
/// '-' in the sequence; `per_plus` is the opposite sign choice (equivalent to
/// alpha -> -alpha), kept selectable because the two conventions cannot be
/// distinguished at the probability level.
enum class AlphaConvention { minus_per_minus, plus_per_minus };

/// Dual (domain-wall) data of a state at a given twist angle.
struct DualMatrices {
    CMat H;                     // Cayley transform (R^phi - I)(R^phi + I)^{-1}
    RMat P;                     // cyclic shift with sign-flipped wraparound
    AntisymmetricMatrix Rtilde;
    double normTilde = 1.0;     // N_{Rtilde} = det(I + Rt^dag Rt)^{1/4}
    double logNormTilde = 0.0;
};

/// Wall string of a sign sequence: bit j = 1 iff s_j != s_{j+1}, cyclically
/// (bond L-1 closes onto site 0). Always has an even number of walls.
BitString domain_wall(const SignSequence& S);

/// Base configuration in the wall frame: C itself when sum n_j is even,
/// otherwise C with the last bit complemented.
BitString base_domain_config(const BitString& C);

/// Sign relating the two sign sequences sharing one wall string:
/// prod_j (-1)^{(n_j - 1)(sbar_j - 1)/2}, i.e. -1 per site with n_j = 0, s_j = '-'.
int sequence_sign(const BitString& C, const SignSequence& S);

/// Element-wise twist r_ij -> r_ij e^{2 i phi (1 - n_i - n_j)}.
AntisymmetricMatrix phi_twist(const AntisymmetricMatrix& R, const BitString& C, double phi);

/// The shift matrix P: +1 at (0, L-1), -1 on the first subdiagonal.
RMat shift_matrix(int L);

/// Builds H = (R - I)(R + I)^{-1} and Rtilde = (I + H P)(H P - I)^{-1}.
/// Throws SingularCayley when either inverse is ill-conditioned.
DualMatrices dual_matrix(const AntisymmetricMatrix& R);

/// Amplitude of the sign sequence S in the (phi, pi/2, alpha) basis:
/// sequence_sign(C,S) * pf Rtilde^phi_{keep} * e^{-i alpha #minus} / (sqrt2 N),
/// keep being the symmetric difference of base_domain_config(C) and the wall
/// string of S. Matches the dense rotation oracle up to one overall phase
/// per (state, basis).
cplx amplitude_phi(const GaussianState& state, const SignSequence& S, const BasisSpec& basis,
                   AlphaConvention conv = AlphaConvention::minus_per_minus);

/// Same with a precomputed dual (amortizes the two inversions across many S).
cplx amplitude_phi_with_dual(const GaussianState& state, const DualMatrices& dual,
                             const SignSequence& S, const BasisSpec& basis,
                             AlphaConvention conv = AlphaConvention::minus_per_minus);

LogScaled log_amplitude_phi_with_dual(const GaussianState& state, const DualMatrices& dual,
                                      const SignSequence& S, const BasisSpec& basis,
                                      AlphaConvention conv = AlphaConvention::minus_per_minus);

/// Dual of the phi-twisted matrix (the one amplitude_phi uses internally).
DualMatrices dual_matrix_phi(const GaussianState& state, double phi);

/// Row/column set of the Rtilde submatrix for sequence S over base C.
IndexSet wall_keep_set(const BitString& C, const SignSequence& S);

}  // namespace pfstate
