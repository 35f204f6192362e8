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

#include "pfstate/pfaffian.hpp"
#include "pfstate/types.hpp"

namespace pfstate {

/// Gaussian pure state |R, C>: exp(1/2 sum a_i r_ij a_j)|C> / N_R, where a_j
/// flips site j of the base configuration C. Immutable after construction.
///
/// `phase` is a unimodular factor applied to every amplitude. It is 1 for
/// freshly built states and set by rebase() so that the rebased state is
/// amplitude-for-amplitude equal to its parent (not merely equal up to a
/// global phase).
class GaussianState {
  public:
    GaussianState(AntisymmetricMatrix R, BitString base, cplx phase = cplx(1.0, 0.0));

    int size() const { return R_.dim(); }
    const AntisymmetricMatrix& R() const { return R_; }
    const BitString& base() const { return base_; }
    double norm() const { return norm_; }          // N_R = det(I + R^dag R)^{1/4}
    double log_norm() const { return log_norm_; }  // overflow-free at large L
    cplx phase() const { return phase_; }

  private:
    AntisymmetricMatrix R_;
    BitString base_;
    double norm_ = 1.0;
    double log_norm_ = 0.0;
    cplx phase_;
};

/// Fermionic reordering sign of Eq-type prod_{i>=1}(-1)^{|n_i-m_i| sum_{j<i} n_j}.
int sign_cfg(const BitString& C, const BitString& I);

/// Sites where C and I differ, as an IndexSet (the pfaffinho row/column set).
IndexSet symmetric_difference(const BitString& C, const BitString& I);

/// <I | R, C>; zero whenever the Hamming distance |C ^ I| is odd.
cplx amplitude_z(const GaussianState& state, const BitString& I);

/// log-scaled variant for large systems.
LogScaled log_amplitude_z(const GaussianState& state, const BitString& I);

/// Re-expresses |R,C> as |R',C'> over a new base configuration with non-zero
/// amplitude. The returned state reproduces every amplitude of the input
/// exactly (its `phase` absorbs the relative phase of the two expansions).
/// Throws ZeroAmplitudeBase when the target configuration's amplitude
/// vanishes (relative to the median two-flip pfaffinho magnitude).
GaussianState rebase(const GaussianState& state, const BitString& Cprime);

/// Generic quadratic exponent (1/2)(c^dag, c) M (c; c^dag) acting on |C>.
/// J.M must be antisymmetric, J the off-diagonal identity block matrix.
struct GenericGaussianExponent {
    CMat M;          // 2L x 2L
    BitString base;

    GenericGaussianExponent(CMat m, BitString C);
    int size() const { return base.size(); }
};

/// Reduces the generic exponent to standard form via the particle-hole
/// permutation on occupied sites and the Balian-Brezin decomposition
/// R = T_12 T_22^{-1} of T = exp(M_bar). The result equals the input state
/// up to overall normalization and phase. Throws SingularBlock when T_22 is
/// numerically singular (vanishing base-configuration amplitude).
GaussianState from_generic(const GenericGaussianExponent& g);

}  // namespace pfstate
