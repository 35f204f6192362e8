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

#include "pfstate/tfi.hpp"

#include <algorithm>
#include <cmath>
#include <atomic>
#include <numeric>
#include <thread>

namespace pfstate {

RMat tfi_G(int L, Boundary boundary) {
    if (L < 2 || L % 2 != 0) throw StructureError("tfi_G: L must be even and >= 2");
    RMat G(L, L);
    if (boundary == Boundary::periodic) {
        for (int n = 1; n <= L; ++n)
            for (int m = 1; m <= L; ++m) {
                double sgn = ((n - m) % 2 == 0) ? 1.0 : -1.0;
                G(n - 1, m - 1) = sgn / (L * std::sin(M_PI * (n - m + 0.5) / L));
            }
    } else {
        for (int n = 1; n <= L; ++n)
            for (int m = 1; m <= L; ++m) {
                double sgn = ((n - m) % 2 == 0) ? 1.0 : -1.0;
                G(n - 1, m - 1) = sgn / (2.0 * L + 1.0) *
                                  (1.0 / std::sin(M_PI * (n - m + 0.5) / (2.0 * L + 1.0)) +
                                   1.0 / std::sin(M_PI * (n + m - 0.5) / (2.0 * L + 1.0)));
            }
    }
    return G;
}

GaussianState tfi_R(const TFIModel& model) {
    if (model.h != 1.0) throw StructureError("tfi_R: closed-form G is for the critical point h = 1");
    const int L = model.L;
    RMat G = tfi_G(L, model.boundary);
    RMat R = right_divide<SingularG>(RMat(RMat::Identity(L, L) + G),
                                     RMat(RMat::Identity(L, L) - G), "tfi_R: (I - G)", 1e-14);
    CMat Rc = R.cast<cplx>();
    AntisymmetricMatrix Ra = AntisymmetricMatrix::symmetrize(Rc);
    if (model.boundary == Boundary::periodic) {
        // skew-circulant structure check: entries depend on j-i with flipped wraparound
        const CMat& m = Ra.mat();
        double worst = 0.0;
        for (int i = 1; i < L; ++i)
            for (int j = 0; j < L; ++j) {
                int k = j - i;
                cplx expect = k >= 0 ? m(0, k) : -m(0, L + k);
                worst = std::max(worst, std::abs(m(i, j) - expect));
            }
        if (worst > 1e-9 * std::max(1.0, m.cwiseAbs().maxCoeff()))
            throw StructureError("tfi_R: periodic R lost its skew-circulant structure");
    }
    return GaussianState(Ra, BitString::zeros(L));
}

CrystalConfig::CrystalConfig(std::string pat) : pattern(std::move(pat)) {
    if (pattern.empty()) throw StructureError("CrystalConfig: empty pattern");
    bool bits = pattern.find_first_not_of("01") == std::string::npos;
    bool spins = pattern.find_first_not_of("+-") == std::string::npos;
    if (!bits && !spins)
        throw StructureError("CrystalConfig: pattern must be over {0,1} or {+,-}");
}

int CrystalConfig::u() const {
    return static_cast<int>(std::count_if(pattern.begin(), pattern.end(),
                                          [](char c) { return c == '1' || c == '+'; }));
}

bool CrystalConfig::is_spin() const { return pattern.find_first_of("+-") != std::string::npos; }

std::string CrystalConfig::expand(int L) const {
    if (L % p() != 0) throw StructureError("CrystalConfig: L not divisible by the pattern length");
    std::string s;
    s.reserve(L);
    for (int j = 0; j < L; ++j) s.push_back(pattern[j % p()]);
    return s;
}

std::vector<cplx> tfi_pbc_dual_lambdas(int L, double phi) {
    RMat G = tfi_G(L, Boundary::periodic);
    CVec grow = G.row(0).transpose().cast<cplx>();
    CVec lamG = skew_circulant_eigenvalues(grow);
    RMat P = shift_matrix(L);
    CVec prow = P.row(0).transpose().cast<cplx>();
    CVec lamP = skew_circulant_eigenvalues(prow);
    const cplx tw = std::polar(1.0, 2.0 * phi);
    std::vector<cplx> blocks(L / 2);
    for (int b = 0; b < L / 2; ++b) {
        cplx r = tw * (1.0 + lamG(b)) / (1.0 - lamG(b));
        cplx p = lamP(b);
        blocks[b] = (r * p + r - p + 1.0) / (r * p - r - p - 1.0);
    }
    return blocks;
}

namespace {

double pbc_spectral_minus_log_p(int L, double phi, const std::string& signs, std::string& path) {
    std::vector<cplx> lam = tfi_pbc_dual_lambdas(L, phi);
    SignSequence S = SignSequence::parse(signs);
    BitString W = domain_wall(S);
    const int w = W.sum();
    double logN = 0.0;
    for (const cplx& l : lam) logN += 0.5 * std::log1p(std::norm(l));
    if (w == 0) {
        path = "pbc-spectral";
        return std::log(2.0) + 2.0 * logN;
    }
    if (w == L) {
        // pf of the full matrix: |det V| = 1, so log|pf| = sum log|lambda_b|
        path = "pbc-spectral";
        double logpf = 0.0;
        for (const cplx& l : lam) logpf += std::log(std::abs(l));
        return std::log(2.0) + 2.0 * logN - 2.0 * logpf;
    }
    // partial wall sets: reconstruct the dual densely from the spectral form
    path = "pbc-spectral-pf";
    SpectralForm s = spectral_form_from_lambdas(L, lam);
    AntisymmetricMatrix Rt = AntisymmetricMatrix::symmetrize(s.reconstruct());
    std::vector<int> keep;
    for (int j = 0; j < L; ++j)
        if (W[j]) keep.push_back(j);
    LogScaled pf = log_pfaffian_raw([&] {
        CMat sub(keep.size(), keep.size());
        for (size_t a = 0; a < keep.size(); ++a)
            for (size_t b = 0; b < keep.size(); ++b) sub(a, b) = Rt.mat()(keep[a], keep[b]);
        return sub;
    }());
    if (pf.is_zero()) return std::numeric_limits<double>::infinity();
    return std::log(2.0) + 2.0 * logN - 2.0 * pf.log_abs;
}

}  // namespace

std::pair<double, std::string> formation_minus_log_p(const TFIModel& model,
                                                     const CrystalConfig& config,
                                                     const ScanBasisSpec& basis) {
    const int L = model.L;
    std::string expanded = config.expand(L);
    if (basis.z_basis) {
        if (config.is_spin())
            throw StructureError("sigma^z scan needs a {0,1} pattern");
        RMat G = tfi_G(L, model.boundary);
        double lp = log_prob_z_real_G(G, BitString::parse(expanded));
        return {-lp, "z-det"};
    }
    if (!config.is_spin())
        throw StructureError("rotated-basis scan needs a {+,-} pattern");
    if (model.boundary == Boundary::periodic) {
        std::string path;
        double v = pbc_spectral_minus_log_p(L, basis.phi, expanded, path);
        return {v, path};
    }
    // open boundary
    const double phi_mod = std::fmod(std::fmod(basis.phi, M_PI) + M_PI, M_PI);
    SignSequence S = SignSequence::parse(expanded);
    if (phi_mod < 1e-12 || M_PI - phi_mod < 1e-12) {
        RMat G = tfi_G(L, model.boundary);
        return {-log_prob_x_G(G, S), "x-det"};
    }
    if (std::abs(phi_mod - M_PI / 2) < 1e-12) {
        RMat G = tfi_G(L, model.boundary);
        return {-log_prob_y_G(G, S), "y-det"};
    }
    GaussianState state = tfi_R(model);
    DualMatrices dual = dual_matrix_phi(state, basis.phi);
    return {-log_prob_phi_with_dual(state, dual, S), "obc-cayley-pf"};
}

std::vector<int> scan_grid(const ScanSpec& spec) {
    if (spec.L_min > spec.L_max || spec.L_min < 2)
        throw StructureError("scan: empty or invalid L range");
    const int p = spec.config.p();
    const int unit = std::lcm(p, 2);
    int stride = spec.stride;
    if (stride == 0) {
        // largest multiple of the pattern unit keeping at least 30 points
        stride = unit;
        for (int s = unit; ; s += unit) {
            int first = ((spec.L_min + unit - 1) / unit) * unit;
            int count = first > spec.L_max ? 0 : (spec.L_max - first) / s + 1;
            if (count < 30) break;
            stride = s;
        }
    } else if (stride % unit != 0) {
        throw StructureError("scan: stride must be a multiple of lcm(pattern length, 2)");
    }
    std::vector<int> grid;
    int first = ((spec.L_min + unit - 1) / unit) * unit;
    for (int L = first; L <= spec.L_max; L += stride) grid.push_back(L);
    if (grid.empty()) throw StructureError("scan: empty L grid");
    return grid;
}

ScanResult scan_formation(const ScanSpec& spec) {
    std::vector<int> grid = scan_grid(spec);
    const int n = static_cast<int>(grid.size());
    int nthreads = spec.threads > 0 ? spec.threads
                                    : std::max(1u, std::thread::hardware_concurrency());
    nthreads = std::min<int>(nthreads, n);

    std::vector<std::optional<ScanPoint>> slots(n);
    std::vector<std::string> errors(n);
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
            TFIModel model(grid[i], spec.boundary);
            try {
                auto [v, path] = formation_minus_log_p(model, spec.config, spec.basis);
                slots[i] = ScanPoint{grid[i], v, path};
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    ScanResult out;
    for (int i = 0; i < n; ++i) {
        if (slots[i])
            out.points.push_back(*slots[i]);
        else
            out.failures.emplace_back(grid[i], errors[i]);
    }
    return out;
}

}  // namespace pfstate
