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
#include "pfstate/tfi.hpp"

#include <Eigen/Sparse>

namespace pfstate::oracle {

// Brute-force dense references for testing (L <= 14). Apart from calling
// amplitude_z in dense_from_gaussian's first path, nothing here shares code
// with the production kernels, so agreement between the two is evidence,
// not tautology.

/// Full 2^L amplitude vector. Bit j of the index is the occupation of site j,
/// with site 0 the most significant position.
struct DenseState {
    int L = 0;
    CVec amp;
};

int bits_to_index(const BitString& b);
BitString index_to_bits(int idx, int L);

/// Amplitude vector of |R, C> over all configurations (amplitude_z path).
DenseState dense_from_gaussian(const GaussianState& state);

/// Independent second path: power-series expansion of the quadratic-form
/// exponential acting on |C> in the dense Fock space (L <= 8).
DenseState dense_from_gaussian_fock(const GaussianState& state);

/// Dense vector for a generic quadratic exponent via the 2^L operator
/// exponential (L <= 8), normalized.
DenseState dense_from_generic(const GenericGaussianExponent& g);

/// Expansion of v in the (phi, pi/2, alpha) basis, one site at a time.
/// Single-site bras: <+| = (<0| + e^{i phi}<1|)/sqrt2,
///                   <-| = e^{-i alpha}(-<0| + e^{i phi}<1|)/sqrt2.
/// Index bit 1 stands for '-'.
DenseState rotate(const DenseState& v, double phi, double alpha);

/// Inverse rotation (adjoint); rotate then unrotate is the identity.
DenseState unrotate(const DenseState& v, double phi, double alpha);

/// Dense annihilation operator c_l with the Jordan-Wigner string sign
/// (-1)^{number of fermions on sites < l}.
Eigen::SparseMatrix<cplx> fermion_annihilation(int L, int l);

/// Lowest eigenvector of the dense TFI Hamiltonian (L <= 12); asserts a
/// spectral gap > 1e-8. h may differ from 1.
DenseState tfi_exact_ground_state(const TFIModel& model);

/// Ground-state probability of a sigma^z configuration / sign sequence.
double probability_z(const DenseState& v, const BitString& I);
double probability_phi(const DenseState& v, const SignSequence& S, double phi, double alpha = 0.0);

/// <v|w| overlap modulus.
double overlap(const DenseState& a, const DenseState& b);

}  // namespace pfstate::oracle
