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

// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
// the binary exits non-zero if any criterion fails.

#include "pfstate/basis.hpp"
#include "pfstate/correlators.hpp"
#include "pfstate/io.hpp"
#include "pfstate/oracle.hpp"
#include "pfstate/probability.hpp"
#include "pfstate/scaling.hpp"
#include "pfstate/tfi.hpp"

#include <chrono>
#include <cstring>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace pfstate;
namespace orc = pfstate::oracle;

namespace {

std::mt19937 make_rng(int salt) { return std::mt19937(912600 + salt); }

CMat random_complex(int L, std::mt19937& rng, double scale = 1.0) {
    std::normal_distribution<double> g;
    CMat m(L, L);
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j) m(i, j) = scale * cplx(g(rng), g(rng));
    return m;
}

AntisymmetricMatrix random_antisym(int L, std::mt19937& rng, double scale = 1.0) {
    return AntisymmetricMatrix::symmetrize(random_complex(L, rng, scale));
}

BitString random_bits(int L, std::mt19937& rng) {
    std::vector<uint8_t> b(L);
    for (auto& x : b) x = rng() & 1;
    return BitString(std::move(b));
}

SignSequence random_signs(int L, std::mt19937& rng) {
    std::vector<uint8_t> b(L);
    for (auto& x : b) x = rng() & 1;
    return SignSequence(std::move(b));
}

SignSequence seq_from_index(int idx, int L) {
    std::vector<uint8_t> bits(L);
    for (int j = 0; j < L; ++j) bits[j] = (idx >> (L - 1 - j)) & 1;
    return SignSequence(std::move(bits));
}

struct Harness {
    int failures = 0;
    void report(int num, const std::string& what, bool pass, const std::string& detail) {
        std::cout << (pass ? "PASS" : "FAIL") << " criterion " << num << ": " << what << " ["
                  << detail << "]" << std::endl;
        if (!pass) ++failures;
    }
};

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(4) << std::scientific << v;
    return os.str();
}

// ---- criterion 1: Pfaffian kernel ------------------------------------------

void criterion1(Harness& h) {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng = make_rng(1);
    double worst = 0.0;
    for (int k = 0; k < 200; ++k) {
        int L = 2 + 2 * (k * 99 / 199);  // 2..200, even
        AntisymmetricMatrix A = random_antisym(L, rng);
        LogScaled pf = log_pfaffian(A);
        LogScaled det = log_det(A.mat());
        // compare pf^2 to det in log-scaled form (L up to 200 overflows doubles)
        double rel = std::abs((pf * pf).value() / det.value() - 1.0);
        if (det.is_zero()) rel = pf.is_zero() ? 0.0 : 1.0;
        worst = std::max(worst, rel);
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    h.report(1, "pf(A)^2 = det(A), 200 matrices, L in 2..200",
             worst < 1e-8 && secs < 30.0, "worst rel " + fmt(worst) + ", " + fmt(secs) + " s");
}

// ---- criterion 2: appendix golden tables ------------------------------------

// Aligns one overall phase per table row (the dual construction does not pin
// it), then demands exact symbol agreement.
double row_dev(const std::vector<cplx>& got, const std::vector<cplx>& want) {
    cplx num(0, 0);
    double den = 0;
    for (size_t i = 0; i < got.size(); ++i) {
        num += want[i] * std::conj(got[i]);
        den += std::norm(got[i]);
    }
    cplx g = den > 0 ? num / den : cplx(1, 0);
    if (std::abs(g) > 0) g /= std::abs(g);
    double dev = 0;
    for (size_t i = 0; i < got.size(); ++i) dev = std::max(dev, std::abs(want[i] - g * got[i]));
    return dev;
}

void criterion2(Harness& h) {
    std::mt19937 rng = make_rng(2);
    std::uniform_real_distribution<double> u(-0.3, 0.3);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        // ---- L = 2 ----
        double r = u(rng);
        CMat m2(2, 2);
        m2 << 0, r, -r, 0;
        double N2 = std::sqrt(1 + r * r);
        const char* zc2[4] = {"11", "10", "01", "00"};
        double ztab2[4][4] = {{r, 0, 0, 1}, {0, r, 1, 0}, {0, 1, -r, 0}, {1, 0, 0, -r}};
        const char* bases2[4] = {"00", "01", "10", "11"};
        for (int b = 0; b < 4; ++b) {
            GaussianState s(AntisymmetricMatrix(m2), BitString::parse(bases2[b]));
            for (int c = 0; c < 4; ++c) {
                cplx got = amplitude_z(s, BitString::parse(zc2[c]));
                worst = std::max(worst, std::abs(got - ztab2[b][c] / N2));
            }
        }
        // (phi, pi/2, alpha) table at alpha = 0; normalized prefactor 1/(2 N2)
        double phi = 0.9 + 0.01 * trial;
        cplx e2 = std::polar(1.0, 2 * phi), em2 = std::polar(1.0, -2 * phi);
        cplx a_sym[4] = {1.0 + e2 * r, 1.0 + r, 1.0 + r, 1.0 + em2 * r};
        cplx b_sym[4] = {1.0 - e2 * r, 1.0 - r, 1.0 - r, 1.0 - em2 * r};
        int xsign[4][4] = {{1, -1, -1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, 1, 1, 1}};
        bool is_a[4][4] = {{true, false, false, true},
                           {true, false, false, true},
                           {false, true, true, false},
                           {false, true, true, false}};
        const char* sc2[4] = {"++", "+-", "-+", "--"};
        for (int b = 0; b < 4; ++b) {
            GaussianState s(AntisymmetricMatrix(m2), BitString::parse(bases2[b]));
            std::vector<cplx> got(4), want(4);
            double total = 0;
            for (int c = 0; c < 4; ++c) {
                got[c] = amplitude_phi(s, SignSequence::parse(sc2[c]), BasisSpec{phi, 0.0});
                want[c] = double(xsign[b][c]) * (is_a[b][c] ? a_sym[b] : b_sym[b]) / (2 * N2);
                total += std::norm(got[c]);
            }
            worst = std::max(worst, row_dev(got, want));
            worst = std::max(worst, std::abs(total - 1.0));
        }
        // ---- L = 3 ----
        double r12 = u(rng), r13 = u(rng), r23 = u(rng);
        CMat m3(3, 3);
        m3 << 0, r12, r13, -r12, 0, r23, -r13, -r23, 0;
        double N3 = std::sqrt(1 + r12 * r12 + r13 * r13 + r23 * r23);
        double Z = 2 * N3;
        double a = 1 + r12 + r13 + r23, b = 1 + r12 - r13 - r23;
        double c = 1 - r12 + r13 - r23, d = 1 - r12 - r13 + r23;
        const char* zc3[8] = {"111", "110", "101", "100", "011", "010", "001", "000"};
        const char* bases3[8] = {"000", "001", "010", "011", "100", "101", "110", "111"};
        double ztab3[8][8] = {
            {0, r12, r13, 0, r23, 0, 0, 1},    {r12, 0, 0, r13, 0, r23, 1, 0},
            {-r13, 0, 0, r12, 0, 1, -r23, 0},  {0, -r13, r12, 0, 1, 0, 0, -r23},
            {r23, 0, 0, 1, 0, -r12, -r13, 0},  {0, r23, 1, 0, -r12, 0, 0, -r13},
            {0, 1, -r23, 0, r13, 0, 0, -r12},  {1, 0, 0, -r23, 0, r13, -r12, 0}};
        for (int bb = 0; bb < 8; ++bb) {
            GaussianState s(AntisymmetricMatrix(m3), BitString::parse(bases3[bb]));
            for (int cc = 0; cc < 8; ++cc) {
                cplx got = amplitude_z(s, BitString::parse(zc3[cc]));
                worst = std::max(worst, std::abs(got - ztab3[bb][cc] / N3));
            }
        }
        const char* sc3[8] = {"+++", "++-", "+-+", "+--", "-++", "-+-", "--+", "---"};
        double xtab3[8][8] = {
            {a, -b, -c, d, -d, c, b, -a}, {a, b, -c, -d, -d, -c, b, a},
            {b, -a, d, -c, -c, d, -a, b}, {b, a, d, c, -c, -d, -a, -b},
            {d, -c, -b, a, a, -b, -c, d}, {d, c, -b, -a, a, b, -c, -d},
            {c, -d, a, -b, b, -a, d, -c}, {c, d, a, b, b, a, d, c}};
        for (int bb = 0; bb < 8; ++bb) {
            GaussianState s(AntisymmetricMatrix(m3), BitString::parse(bases3[bb]));
            std::vector<cplx> got(8), want(8);
            for (int cc = 0; cc < 8; ++cc) {
                got[cc] = amplitude_phi(s, SignSequence::parse(sc3[cc]), BasisSpec{0.0, 0.0});
                want[cc] = xtab3[bb][cc] / (std::sqrt(2.0) * Z);
            }
            worst = std::max(worst, row_dev(got, want));
        }
    }
    h.report(2, "L=2 and L=3 appendix tables, 50 random draws", worst < 1e-12,
             "max abs dev " + fmt(worst));
}

// ---- criterion 3: rebase at L = 6 -------------------------------------------

void criterion3(Harness& h) {
    std::mt19937 rng = make_rng(3);
    double worst = 0.0;
    int nonzero_min = 1 << 30;
    for (int trial = 0; trial < 10; ++trial) {
        AntisymmetricMatrix R = random_antisym(6, rng);
        GaussianState s(R, BitString::parse("101000"));
        GaussianState r = rebase(s, BitString::parse("011101"));
        int nonzero = 0;
        for (int idx = 0; idx < 64; ++idx) {
            BitString I = orc::index_to_bits(idx, 6);
            cplx a0 = amplitude_z(s, I);
            cplx a1 = amplitude_z(r, I);
            worst = std::max(worst, std::abs(a0 - a1));
            if (std::abs(a0) > 1e-14) ++nonzero;
        }
        nonzero_min = std::min(nonzero_min, nonzero);
    }
    h.report(3, "rebase |R,101000> -> |R',011101>, all amplitudes equal",
             worst < 1e-10 && nonzero_min == 32,
             "max dev " + fmt(worst) + ", nonzero " + std::to_string(nonzero_min));
}

// ---- criterion 4: dense rotation oracle -------------------------------------

void criterion4(Harness& h) {
    std::mt19937 rng = make_rng(4);
    const double phis[3] = {0.0, M_PI / 2, 0.7};
    const double alphas[3] = {0.0, 0.0, 0.3};
    double worst_mod = 0.0, worst_vec = 0.0;
    for (int L : {4, 6, 8, 10}) {
        AntisymmetricMatrix R = random_antisym(L, rng, 0.8);
        BitString C = random_bits(L, rng);
        GaussianState s(R, C);
        orc::DenseState vz = orc::dense_from_gaussian(s);
        for (int k = 0; k < 3; ++k) {
            orc::DenseState want = orc::rotate(vz, phis[k], alphas[k]);
            DualMatrices dual = dual_matrix_phi(s, phis[k]);
            std::vector<cplx> got(1 << L), wantv(1 << L);
            for (int idx = 0; idx < (1 << L); ++idx) {
                got[idx] = amplitude_phi_with_dual(s, dual, seq_from_index(idx, L),
                                                   BasisSpec{phis[k], alphas[k]});
                wantv[idx] = want.amp(idx);
                worst_mod = std::max(worst_mod,
                                     std::abs(std::abs(got[idx]) - std::abs(wantv[idx])));
            }
            worst_vec = std::max(worst_vec, row_dev(got, wantv));
        }
    }
    h.report(4, "rotated amplitudes vs dense oracle (modulus and global phase)",
             worst_mod < 1e-10 && worst_vec < 1e-10,
             "modulus dev " + fmt(worst_mod) + ", vector dev " + fmt(worst_vec));
}

// ---- criterion 5: normalization + KW residuals ------------------------------

void criterion5(Harness& h) {
    std::mt19937 rng = make_rng(5);
    double worst_norm = 0.0;
    for (int L : {4, 7, 10}) {
        AntisymmetricMatrix R = random_antisym(L, rng, 0.7);
        GaussianState s(R, random_bits(L, rng));
        double tz = 0.0;
        for (int idx = 0; idx < (1 << L); ++idx) tz += prob_z(s, orc::index_to_bits(idx, L));
        worst_norm = std::max(worst_norm, std::abs(tz - 1.0));
        for (double phi : {0.0, 1.1}) {
            DualMatrices dual = dual_matrix_phi(s, phi);
            double tp = 0.0;
            for (int idx = 0; idx < (1 << L); ++idx)
                tp += prob_phi_with_dual(s, dual, seq_from_index(idx, L));
            worst_norm = std::max(worst_norm, std::abs(tp - 1.0));
        }
    }
    double worst_kw = 0.0;
    const int sizes[6] = {2, 4, 8, 16, 32, 64};
    for (int k = 0; k < 50; ++k) {
        int L = sizes[k % 6];
        AntisymmetricMatrix R = random_antisym(L, rng, 1.0 / std::sqrt(double(L)));
        worst_kw = std::max(worst_kw, kw_residuals(R, dual_matrix(R).Rtilde));
    }
    h.report(5, "normalization (each basis, L <= 10) and KW residuals (50 draws, L <= 64)",
             worst_norm < 1e-10 && worst_kw < 1e-9,
             "norm dev " + fmt(worst_norm) + ", KW " + fmt(worst_kw));
}

// ---- criterion 6: all-plus closed form vs determinant path ------------------

void criterion6(Harness& h) {
    auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (int L = 8; L <= 1000; L += 8) {
        std::vector<cplx> lam = tfi_pbc_dual_lambdas(L, 0.0);
        double log_spec = 2.0 * (-0.5 * std::log(2.0));
        for (const cplx& l : lam) log_spec -= std::log1p(std::norm(l));
        RMat G = tfi_G(L, Boundary::periodic);
        std::string allplus(L, '+');
        double log_det_path = log_prob_x_G(G, SignSequence::parse(allplus));
        // relative error on P == |exp(diff) - 1| ~ |diff| of the logs
        worst = std::max(worst, std::abs(log_spec - log_det_path));
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    h.report(6, "PBC all-plus: spectral product vs determinant path, L = 8..1000",
             worst < 1e-9 && secs < 300.0, "worst rel " + fmt(worst) + ", " + fmt(secs) + " s");
}

// ---- criterion 7: universal constants ---------------------------------------

struct FamilyResult {
    std::string name;
    double value = 0.0, expect = 0.0, tol = 0.0, stderr_ = 0.0;
    bool pass = false;
};

FamilyResult run_family(const std::string& name, Boundary boundary, const ScanBasisSpec& basis,
                        const std::string& pattern, double expect, double tol, int stride,
                        int Lmin = 400, int Lmax = 1000) {
    ScanSpec spec{boundary, basis, CrystalConfig(pattern), Lmin, Lmax, stride, 0};
    ScanResult res = scan_formation(spec);
    std::vector<std::pair<double, double>> pts;
    for (const ScanPoint& p : res.points) pts.emplace_back(p.L, p.minus_log_P);
    ScalingFit fit = boundary == Boundary::periodic ? fit_pbc(pts) : fit_obc(pts);
    FamilyResult out;
    out.name = name;
    out.value = fit.s_or_a;
    out.expect = expect;
    out.tol = tol;
    out.stderr_ = fit.stderr_s_or_a;
    out.pass = std::abs(fit.s_or_a - expect) < tol && res.failures.empty();
    return out;
}

void criterion7(Harness& h) {
    const double ln2_2 = std::log(2.0) / 2.0;
    const double tol_s = 0.01 * ln2_2;   // "within one percent" on the ln2/2 scale
    const double tol_a = 0.02;
    const double tol_y = 0.02 * ln2_2;
    std::vector<FamilyResult> rs;

    // PBC sigma^z crystals: s = ln2/2 for odd p-u, 0 for even
    rs.push_back(run_family("pbc-z-1/0", Boundary::periodic, ScanBasisSpec::z(), "0", ln2_2, tol_s, 24));
    rs.push_back(run_family("pbc-z-2/1", Boundary::periodic, ScanBasisSpec::z(), "01", ln2_2, tol_s, 24));
    rs.push_back(run_family("pbc-z-3/1", Boundary::periodic, ScanBasisSpec::z(), "100", 0.0, tol_s, 24));
    rs.push_back(run_family("pbc-z-4/1", Boundary::periodic, ScanBasisSpec::z(), "1000", ln2_2, tol_s, 24));

    // OBC sigma^z crystals: a = 3/8 for odd p-u, -1/8 for even
    rs.push_back(run_family("obc-z-1/0", Boundary::open, ScanBasisSpec::z(), "0", 0.375, tol_a, 24));
    rs.push_back(run_family("obc-z-2/1", Boundary::open, ScanBasisSpec::z(), "01", 0.375, tol_a, 24));
    rs.push_back(run_family("obc-z-3/1", Boundary::open, ScanBasisSpec::z(), "100", -0.125, tol_a, 24));
    rs.push_back(run_family("obc-z-4/1", Boundary::open, ScanBasisSpec::z(), "1000", 0.375, tol_a, 24));

    // phi bases: p = 2u -> s = 0 / a = -1/8 ; p != 2u -> s = -ln2/2 / a = 3/8
    std::vector<FamilyResult> phi_neel, phi_plus;
    for (double phi : {0.0, 0.5, 1.0}) {
        std::string tag = "phi=" + std::to_string(phi).substr(0, 3);
        phi_neel.push_back(run_family("pbc-" + tag + "-'+-'", Boundary::periodic,
                                      ScanBasisSpec::rotated(phi), "+-", 0.0, tol_s, 24));
        phi_plus.push_back(run_family("pbc-" + tag + "-'+'", Boundary::periodic,
                                      ScanBasisSpec::rotated(phi), "+", -ln2_2, tol_s, 24));
        int obc_stride = phi == 0.0 ? 24 : 40;  // the generic Cayley path carries the cost
        rs.push_back(run_family("obc-" + tag + "-'+-'", Boundary::open,
                                ScanBasisSpec::rotated(phi), "+-", -0.125, tol_a, obc_stride));
        rs.push_back(run_family("obc-" + tag + "-'+'", Boundary::open,
                                ScanBasisSpec::rotated(phi), "+", 0.375, tol_a, obc_stride));
    }
    for (auto& v : phi_neel) rs.push_back(v);
    for (auto& v : phi_plus) rs.push_back(v);

    // phi-independence within fit uncertainty
    bool phi_indep = true;
    for (size_t i = 1; i < phi_neel.size(); ++i) {
        phi_indep = phi_indep && std::abs(phi_neel[i].value - phi_neel[0].value) <
                                     std::max(1e-3, 3 * (phi_neel[i].stderr_ + phi_neel[0].stderr_));
        phi_indep = phi_indep && std::abs(phi_plus[i].value - phi_plus[0].value) <
                                     std::max(1e-3, 3 * (phi_plus[i].stderr_ + phi_plus[0].stderr_));
    }

    // sigma^y all-plus on the three mod-6 subgrids
    auto ygrid = [&](int rem, double expect) {
        int Lmin = 402;
        while (Lmin % 6 != rem % 6) Lmin += 2;
        return run_family("pbc-y-'+'-L=6k+" + std::to_string(rem), Boundary::periodic,
                          ScanBasisSpec::rotated(M_PI / 2), "+", expect, tol_y, 18, Lmin, 1000);
    };
    rs.push_back(ygrid(0, ln2_2));
    rs.push_back(ygrid(2, -ln2_2));
    rs.push_back(ygrid(4, -ln2_2));

    // sigma^y base '++-': no asserted class; crash-freedom only
    bool ycrash_ok = true;
    try {
        ScanSpec yspec{Boundary::periodic, ScanBasisSpec::rotated(M_PI / 2), CrystalConfig("++-"),
                       120, 240, 6, 0};
        ScanResult yres = scan_formation(yspec);
        ycrash_ok = !yres.points.empty();
        for (const ScanPoint& p : yres.points) ycrash_ok = ycrash_ok && std::isfinite(p.minus_log_P);
    } catch (const std::exception&) {
        ycrash_ok = false;
    }

    bool all = phi_indep && ycrash_ok;
    std::ostringstream detail;
    for (const FamilyResult& r : rs) {
        all = all && r.pass;
        if (!r.pass)
            detail << r.name << " got " << r.value << " want " << r.expect << "+-" << r.tol << "; ";
    }
    detail << (phi_indep ? "phi-independent" : "PHI-DEPENDENT") << ", "
           << (ycrash_ok ? "y-'++-' scan ok" : "y-'++-' scan CRASHED");
    h.report(7, "universal constants from fits over L in [400,1000]", all, detail.str());
    for (const FamilyResult& r : rs)
        std::cout << "       " << (r.pass ? "ok  " : "BAD ") << r.name << ": " << std::setprecision(6)
                  << r.value << " (expect " << r.expect << ")" << std::endl;
}

// ---- criterion 8: exact diagonalization -------------------------------------

void criterion8(Harness& h) {
    std::mt19937 rng = make_rng(8);
    double worst = 0.0;
    for (int L : {4, 6, 8, 10, 12}) {
        for (Boundary b : {Boundary::periodic, Boundary::open}) {
            TFIModel model(L, b);
            orc::DenseState gs = orc::tfi_exact_ground_state(model);
            GaussianState s = tfi_R(model);
            RMat G = tfi_G(L, b);
            DualMatrices dual04 = dual_matrix_phi(s, 0.4);
            for (int t = 0; t < 20; ++t) {
                BitString I = random_bits(L, rng);
                worst = std::max(worst, std::abs(prob_z(s, I) - orc::probability_z(gs, I)));
                SignSequence S = random_signs(L, rng);
                worst = std::max(worst, std::abs(std::exp(log_prob_x_G(G, S)) -
                                                 orc::probability_phi(gs, S, 0.0)));
                worst = std::max(worst, std::abs(std::exp(log_prob_y_G(G, S)) -
                                                 orc::probability_phi(gs, S, M_PI / 2)));
                worst = std::max(worst, std::abs(prob_phi_with_dual(s, dual04, S) -
                                                 orc::probability_phi(gs, S, 0.4)));
            }
        }
    }
    h.report(8, "TFI formation probabilities vs exact diagonalization, L = 4..12",
             worst < 1e-8, "worst dev " + fmt(worst));
}

// ---- criterion 9: generic Gaussian exponents --------------------------------

void criterion9(Harness& h) {
    std::mt19937 rng = make_rng(9);
    double worst = 1.0;
    for (int L : {2, 4, 6}) {
        for (int t = 0; t < 10; ++t) {
            CMat A = random_complex(L, rng, 0.4);
            CMat B = random_antisym(L, rng, 0.4).mat();
            CMat C = random_antisym(L, rng, 0.4).mat();
            CMat M(2 * L, 2 * L);
            M.topLeftCorner(L, L) = A;
            M.topRightCorner(L, L) = B;
            M.bottomLeftCorner(L, L) = C;
            M.bottomRightCorner(L, L) = -A.transpose();
            GenericGaussianExponent g(M, random_bits(L, rng));
            GaussianState s = from_generic(g);
            double ov = orc::overlap(orc::dense_from_gaussian(s), orc::dense_from_generic(g));
            worst = std::min(worst, ov);
        }
    }
    h.report(9, "from_generic vs operator-exponential oracle, 30 exponents",
             worst >= 1.0 - 1e-9, "min overlap 1 - " + fmt(1.0 - worst));
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> only;
    for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
    auto want = [&](int k) { return only.empty() || only.count(k); };

    Harness h;
    auto t0 = std::chrono::steady_clock::now();
    if (want(1)) criterion1(h);
    if (want(2)) criterion2(h);
    if (want(3)) criterion3(h);
    if (want(4)) criterion4(h);
    if (want(5)) criterion5(h);
    if (want(6)) criterion6(h);
    if (want(7)) criterion7(h);
    if (want(8)) criterion8(h);
    if (want(9)) criterion9(h);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (h.failures == 0 ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << " ("
              << std::setprecision(1) << std::fixed << secs << " s)" << std::endl;
    return h.failures == 0 ? 0 : 1;
}
