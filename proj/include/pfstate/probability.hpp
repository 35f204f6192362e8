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

#include "pfstate/basis.hpp"
#include "pfstate/correlators.hpp"

namespace pfstate {

/// P(I) = |pf R_I(C)|^2 / N_R^2 in the computational basis.
double prob_z(const GaussianState& state, const BitString& I);
double log_prob_z(const GaussianState& state, const BitString& I);  // natural log; -inf for 0

/// Determinant fast path for real R and vacuum base:
/// P(I) = det[(I - I_I G)/2] with I_I = -1 where a fermion sits.
/// Throws NotRealMatrix for complex R. No matrix inversion beyond the
/// correlator build, and none at all when G is supplied.
double prob_z_real(const GaussianState& state, const BitString& I);
double log_prob_z_real_G(const RMat& G, const BitString& I);

/// P(S) in the (phi, pi/2, *) basis via the masked-determinant form; equals
/// |amplitude_phi|^2 and is independent of alpha.
double prob_phi(const GaussianState& state, const SignSequence& S, double phi);
double prob_phi_with_dual(const GaussianState& state, const DualMatrices& dual,
                          const SignSequence& S);
double log_prob_phi_with_dual(const GaussianState& state, const DualMatrices& dual,
                              const SignSequence& S);

/// Inversion-free determinant paths for real R, vacuum base:
///   P^x(S) = 1/2 |det[(I - I_S G P)/2]|
///   P^y(S) = 1/2 |det[(P - G I_S)/2]|
/// with I_S = -1 on wall sites of S. Throw NotRealMatrix for complex R.
double prob_x(const GaussianState& state, const SignSequence& S);
double prob_y(const GaussianState& state, const SignSequence& S);
double log_prob_x_G(const RMat& G, const SignSequence& S);
double log_prob_y_G(const RMat& G, const SignSequence& S);

/// Alternative dual construction built from cot(phi) (no phi-twist of R).
/// Only valid when H and P commute - periodic skew-circulant states; used as
/// a cross-check there. Requires sin(phi) != 0.
AntisymmetricMatrix dual_cot_phi(const AntisymmetricMatrix& R, double phi);

/// Probability from an explicit dual matrix (shared by cross-checks).
double prob_from_dual_matrix(const AntisymmetricMatrix& Rtilde, const IndexSet& keep);

}  // namespace pfstate
