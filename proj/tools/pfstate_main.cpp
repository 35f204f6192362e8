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

#include <CLI11.hpp>
#include <json.hpp>

#include "pfstate/basis.hpp"
#include "pfstate/correlators.hpp"
#include "pfstate/io.hpp"
#include "pfstate/oracle.hpp"
#include "pfstate/probability.hpp"
#include "pfstate/scaling.hpp"
#include "pfstate/tfi.hpp"

#include <cstdlib>
#include <iostream>
#include <random>

using namespace pfstate;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitSingular = 3;

int env_threads() {
    const char* v = std::getenv("PFSTATE_THREADS");
    if (!v) return 0;
    int n = std::atoi(v);
    return n > 0 ? n : 0;
}

bool is_z_config(const std::string& s) {
    return s.find_first_not_of("01") == std::string::npos;
}

struct AmplitudeResult {
    cplx value;
    std::string path;
};

AmplitudeResult compute_amplitude(const GaussianState& state, const std::string& config,
                                  double phi, double alpha) {
    if (is_z_config(config)) {
        BitString I = BitString::parse(config);
        if (I.size() != state.size()) throw LengthMismatch("configuration length != state size");
        return {amplitude_z(state, I), "z-pfaffinho"};
    }
    SignSequence S = SignSequence::parse(config);
    if (S.size() != state.size()) throw LengthMismatch("configuration length != state size");
    return {amplitude_phi(state, S, BasisSpec{phi, alpha}), "phi-dual-pfaffinho"};
}

void print_amplitude(const AmplitudeResult& r, bool json_format) {
    if (json_format) {
        nlohmann::json j;
        j["re"] = r.value.real();
        j["im"] = r.value.imag();
        j["modulus_sq"] = std::norm(r.value);
        j["path"] = r.path;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "re,im,modulus_sq,path\n"
                  << io::format_double(r.value.real()) << ','
                  << io::format_double(r.value.imag()) << ','
                  << io::format_double(std::norm(r.value)) << ',' << r.path << "\n";
    }
}

int run_check(int Lmax) {
    std::mt19937 rng(20260811);
    std::normal_distribution<double> g;
    bool ok = true;
    auto report = [&](const std::string& name, bool pass, double value) {
        std::cout << (pass ? "PASS " : "FAIL ") << name << " (" << io::format_double(value)
                  << ")\n";
        ok = ok && pass;
    };

    // pf^2 = det spot checks
    double worst_pf = 0;
    for (int L = 2; L <= std::min(Lmax, 64); L += 14) {
        CMat m(L, L);
        for (int i = 0; i < L; ++i)
            for (int j = 0; j < L; ++j) m(i, j) = cplx(g(rng), g(rng));
        AntisymmetricMatrix A = AntisymmetricMatrix::symmetrize(m);
        cplx pf = pfaffian(A);
        cplx det = A.mat().determinant();
        worst_pf = std::max(worst_pf, std::abs(pf * pf - det) / std::abs(det));
    }
    report("pfaffian-squared-is-det", worst_pf < 1e-8, worst_pf);

    // normalization in sigma^z and a rotated basis at L = 8
    {
        const int L = 8;
        CMat m(L, L);
        for (int i = 0; i < L; ++i)
            for (int j = 0; j < L; ++j) m(i, j) = 0.5 * cplx(g(rng), g(rng));
        GaussianState s(AntisymmetricMatrix::symmetrize(m), BitString::zeros(L));
        double tz = 0, tphi = 0;
        DualMatrices dual = dual_matrix_phi(s, 0.7);
        for (int idx = 0; idx < (1 << L); ++idx) {
            tz += prob_z(s, oracle::index_to_bits(idx, L));
            std::vector<uint8_t> bits(L);
            for (int j = 0; j < L; ++j) bits[j] = (idx >> (L - 1 - j)) & 1;
            tphi += prob_phi_with_dual(s, dual, SignSequence(std::move(bits)));
        }
        report("normalization-sigma-z", std::abs(tz - 1) < 1e-10, std::abs(tz - 1));
        report("normalization-phi-basis", std::abs(tphi - 1) < 1e-10, std::abs(tphi - 1));
    }

    // KW residuals across sizes
    double worst_kw = 0;
    for (int L = 2; L <= Lmax; L = L < 16 ? L * 2 : L + 24) {
        CMat m(L, L);
        for (int i = 0; i < L; ++i)
            for (int j = 0; j < L; ++j) m(i, j) = cplx(g(rng), g(rng)) / std::sqrt(double(L));
        AntisymmetricMatrix R = AntisymmetricMatrix::symmetrize(m);
        worst_kw = std::max(worst_kw, kw_residuals(R, dual_matrix(R).Rtilde));
    }
    report("kramers-wannier-residuals", worst_kw < 1e-9, worst_kw);
    return ok ? kExitOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gaussian fermionic states: Pfaffian amplitudes, rotated bases, formation-probability scans"};
    app.require_subcommand(1);
    std::string format = "csv";
    app.add_option("--format", format, "output format for amplitude/prob")
        ->check(CLI::IsMember({"json", "csv"}));

    // amplitude
    auto* amp = app.add_subcommand("amplitude", "amplitude of one configuration");
    std::string state_path, config;
    double phi = 0.0, alpha = 0.0;
    amp->add_option("--state", state_path, "state JSON file")->required();
    amp->add_option("--config", config, "configuration over {0,1} or {+,-}")->required();
    amp->add_option("--phi", phi, "xy-plane angle (rotated configs)");
    amp->add_option("--alpha", alpha, "alpha phase (rotated configs)");

    // prob
    auto* prob = app.add_subcommand("prob", "probability of one configuration");
    prob->add_option("--state", state_path)->required();
    prob->add_option("--config", config)->required();
    prob->add_option("--phi", phi);
    prob->add_option("--alpha", alpha);

    // scan
    auto* scan = app.add_subcommand("scan", "run a formation-probability campaign");
    std::string campaign_path, out_path;
    int threads = 0;
    scan->add_option("campaign", campaign_path, "campaign JSON file")->required();
    scan->add_option("--out", out_path, "output CSV (overrides the campaign's)");
    scan->add_option("--threads", threads, "worker threads");

    // fit
    auto* fit = app.add_subcommand("fit", "fit a scan CSV to a scaling law");
    std::string csv_path, model = "pbc", fit_out;
    fit->add_option("csv", csv_path, "CSV from `scan`")->required();
    fit->add_option("--model", model)->check(CLI::IsMember({"pbc", "obc"}));
    fit->add_option("--out", fit_out, "write the fit JSON here (default: stdout)");

    // check
    auto* check = app.add_subcommand("check", "run KW-residual and normalization self-tests");
    int check_L = 64;
    check->add_option("--L", check_L, "largest system size exercised");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*amp || *prob) {
            GaussianState state = io::load_state(state_path);
            AmplitudeResult r = compute_amplitude(state, config, phi, alpha);
            if (*amp) {
                print_amplitude(r, format == "json");
            } else {
                double p = std::norm(r.value);
                if (format == "json") {
                    nlohmann::json j;
                    j["probability"] = p;
                    j["path"] = r.path;
                    std::cout << j.dump() << "\n";
                } else {
                    std::cout << "probability,path\n"
                              << io::format_double(p) << ',' << r.path << "\n";
                }
            }
            return kExitOk;
        }
        if (*scan) {
            io::Campaign c = io::load_campaign(campaign_path);
            if (threads > 0)
                c.spec.threads = threads;
            else if (c.spec.threads == 0)
                c.spec.threads = env_threads();
            ScanResult res = scan_formation(c.spec);
            for (const auto& [L, why] : res.failures)
                std::cerr << "scan: L=" << L << " failed: " << why << "\n";
            std::string csv = io::scan_to_csv(res);
            std::string target = !out_path.empty() ? out_path : c.out;
            if (target.empty())
                std::cout << csv;
            else
                io::atomic_write(target, csv);
            return res.points.empty() ? 1 : kExitOk;
        }
        if (*fit) {
            auto pts = io::points_from_csv(io::read_file(csv_path));
            if (pts.size() < 10) {
                std::cerr << "fit: need at least 10 rows, got " << pts.size() << "\n";
                return kExitBadInput;
            }
            ScalingFit f = model == "pbc" ? fit_pbc(pts) : fit_obc(pts);
            std::string out = io::fit_to_json(f, classify(f));
            if (fit_out.empty())
                std::cout << out << "\n";
            else
                io::atomic_write(fit_out, out + "\n");
            return kExitOk;
        }
        if (*check) return run_check(check_L);
    } catch (const SingularCayley& e) {
        std::cerr << "error: " << e.what()
                  << "\nThe dual construction degenerates in this basis; the configuration "
                     "amplitude is not reachable through the Cayley path.\n";
        return kExitSingular;
    } catch (const InsufficientData& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed JSON: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
