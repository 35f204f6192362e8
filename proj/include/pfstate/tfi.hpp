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
#include "pfstate/probability.hpp"

#include <optional>

namespace pfstate {

enum class Boundary { periodic, open };

/// Critical transverse-field Ising chain; L must be even.
struct TFIModel {
    int L = 0;
    Boundary boundary = Boundary::periodic;
    double h = 1.0;

    TFIModel(int L_, Boundary b, double h_ = 1.0) : L(L_), boundary(b), h(h_) {
        if (L < 2 || L % 2 != 0) throw StructureError("TFIModel: L must be even and >= 2");
    }
};

/// The sign matrix G_nm of the critical chain (h = 1), closed forms for both
/// boundaries. 1-based n, m in the formulas; the returned matrix is 0-based.
RMat tfi_G(int L, Boundary boundary);

/// Ground state as a Gaussian state over the vacuum base:
/// R = (I + G)(I - G)^{-1}, antisymmetrized. For periodic chains R is
/// skew-circulant (verified; enables the spectral fast path).
GaussianState tfi_R(const TFIModel& model);

/// Length-p pattern over {0,1} (sigma^z) or {+,-} (rotated bases), repeated
/// n = L/p times.
struct CrystalConfig {
    std::string pattern;

    explicit CrystalConfig(std::string pat);
    int p() const { return static_cast<int>(pattern.size()); }
    int u() const;            // up entries: '1' or '+'
    bool is_spin() const;     // over {+,-}
    std::string expand(int L) const;  // requires p | L
};

struct ScanBasisSpec {
    bool z_basis = true;
    double phi = 0.0;
    double alpha = 0.0;

    static ScanBasisSpec z() { return {true, 0.0, 0.0}; }
    static ScanBasisSpec rotated(double phi, double alpha = 0.0) { return {false, phi, alpha}; }
};

struct ScanSpec {
    Boundary boundary = Boundary::periodic;
    ScanBasisSpec basis;
    CrystalConfig config;
    int L_min = 0;
    int L_max = 0;
    int stride = 0;   // 0: auto (largest multiple of lcm(p,2) keeping >= 30 points)
    int threads = 0;  // 0: hardware concurrency
};

struct ScanPoint {
    int L;
    double minus_log_P;
    std::string path_used;
};

struct ScanResult {
    std::vector<ScanPoint> points;                       // ordered by L
    std::vector<std::pair<int, std::string>> failures;   // (L, reason)
};

/// Minus-log formation probability at a single size, picking the cheapest
/// valid path; returns the value and the path label.
std::pair<double, std::string> formation_minus_log_p(const TFIModel& model,
                                                     const CrystalConfig& config,
                                                     const ScanBasisSpec& basis);

/// Scan over the L-grid; per-L failures are recorded and the scan continues.
/// Points are computed in parallel and merged in L order.
ScanResult scan_formation(const ScanSpec& spec);

/// The L-grid a spec expands to (validation happens here).
std::vector<int> scan_grid(const ScanSpec& spec);

/// Block eigenvalues of the dual of the periodic ground state at twist phi,
/// computed mode-by-mode (no dense matrix); the PBC fast path.
std::vector<cplx> tfi_pbc_dual_lambdas(int L, double phi);

}  // namespace pfstate
