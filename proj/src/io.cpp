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

#include "pfstate/io.hpp"

#include <json.hpp>

#include <charconv>
#include <algorithm>
#include <cstdio>
#include <unistd.h>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace pfstate::io {

using nlohmann::json;

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string state_to_json(const GaussianState& state) {
    const int L = state.size();
    json j;
    j["L"] = L;
    j["base"] = state.base().str();
    json rows = json::array();
    for (int i = 0; i < L; ++i)
        for (int k = 0; k < L; ++k) {
            cplx v = state.R()(i, k);
            rows.push_back(json::array({v.real(), v.imag()}));
        }
    j["R"] = rows;
    if (state.phase() != cplx(1.0, 0.0))
        j["phase"] = json::array({state.phase().real(), state.phase().imag()});
    return j.dump();
}

GaussianState state_from_json(const std::string& text) {
    json j = json::parse(text);
    if (!j.contains("L") || !j.contains("base") || !j.contains("R"))
        throw StructureError("state JSON needs keys L, base, R");
    const int L = j.at("L").get<int>();
    BitString base = BitString::parse(j.at("base").get<std::string>());
    if (base.size() != L) throw StructureError("state JSON: base length != L");
    const json& rows = j.at("R");
    if (static_cast<int>(rows.size()) != L * L)
        throw StructureError("state JSON: R must hold L*L [re,im] pairs, row-major");
    CMat R(L, L);
    for (int i = 0; i < L; ++i)
        for (int k = 0; k < L; ++k) {
            const json& pair = rows.at(i * L + k);
            R(i, k) = cplx(pair.at(0).get<double>(), pair.at(1).get<double>());
        }
    cplx phase(1.0, 0.0);
    if (j.contains("phase"))
        phase = cplx(j["phase"].at(0).get<double>(), j["phase"].at(1).get<double>());
    return GaussianState(AntisymmetricMatrix(R), base, phase);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw StructureError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

GaussianState load_state(const std::string& path) { return state_from_json(read_file(path)); }

void save_state(const GaussianState& state, const std::string& path) {
    atomic_write(path, state_to_json(state) + "\n");
}

Campaign campaign_from_json(const std::string& text) {
    json j = json::parse(text);
    static const std::vector<std::string> known = {"boundary", "basis", "base_pattern",
                                                   "L_min", "L_max", "stride", "threads", "out"};
    for (auto it = j.begin(); it != j.end(); ++it)
        if (std::find(known.begin(), known.end(), it.key()) == known.end())
            throw StructureError("campaign: unknown key '" + it.key() + "'");
    for (const char* req : {"boundary", "basis", "base_pattern", "L_min", "L_max"})
        if (!j.contains(req)) throw StructureError(std::string("campaign: missing key '") + req + "'");

    Campaign c{ScanSpec{Boundary::periodic, ScanBasisSpec::z(), CrystalConfig("0"), 0, 0, 0, 0}, ""};
    std::string b = j.at("boundary").get<std::string>();
    if (b == "periodic")
        c.spec.boundary = Boundary::periodic;
    else if (b == "open")
        c.spec.boundary = Boundary::open;
    else
        throw StructureError("campaign: boundary must be 'periodic' or 'open'");

    const json& basis = j.at("basis");
    if (basis.is_string()) {
        std::string s = basis.get<std::string>();
        if (s == "z")
            c.spec.basis = ScanBasisSpec::z();
        else if (s == "x")
            c.spec.basis = ScanBasisSpec::rotated(0.0);
        else if (s == "y")
            c.spec.basis = ScanBasisSpec::rotated(M_PI / 2.0);
        else
            throw StructureError("campaign: basis string must be z, x or y");
    } else if (basis.is_object()) {
        if (!basis.contains("phi")) throw StructureError("campaign: basis object needs 'phi'");
        for (auto it = basis.begin(); it != basis.end(); ++it)
            if (it.key() != "phi" && it.key() != "alpha")
                throw StructureError("campaign: unknown basis key '" + it.key() + "'");
        c.spec.basis = ScanBasisSpec::rotated(basis.at("phi").get<double>(),
                                              basis.value("alpha", 0.0));
    } else {
        throw StructureError("campaign: basis must be a string or {phi, alpha}");
    }

    c.spec.config = CrystalConfig(j.at("base_pattern").get<std::string>());
    if (c.spec.basis.z_basis != !c.spec.config.is_spin())
        throw StructureError("campaign: pattern alphabet does not match the basis");
    c.spec.L_min = j.at("L_min").get<int>();
    c.spec.L_max = j.at("L_max").get<int>();
    c.spec.stride = j.value("stride", 0);
    c.spec.threads = j.value("threads", 0);
    c.out = j.value("out", std::string());
    return c;
}

Campaign load_campaign(const std::string& path) { return campaign_from_json(read_file(path)); }

std::string scan_to_csv(const ScanResult& result) {
    std::string out = "L,minus_log_P,path_used\n";
    for (const ScanPoint& p : result.points) {
        out += std::to_string(p.L);
        out += ',';
        out += format_double(p.minus_log_P);
        out += ',';
        out += p.path_used;
        out += '\n';
    }
    return out;
}

std::vector<std::pair<double, double>> points_from_csv(const std::string& text) {
    std::vector<std::pair<double, double>> pts;
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (first && line.rfind("L,", 0) == 0) {
            first = false;
            continue;
        }
        first = false;
        std::istringstream ls(line);
        std::string a, b;
        if (!std::getline(ls, a, ',') || !std::getline(ls, b, ','))
            throw StructureError("CSV row needs at least L,minus_log_P");
        pts.emplace_back(std::stod(a), std::stod(b));
    }
    return pts;
}

std::string fit_to_json(const ScalingFit& fit, const BoundaryClass& cls) {
    json j;
    j["model"] = fit.periodic ? "pbc" : "obc";
    j["gamma"] = fit.gamma;
    j["constant_term"] = fit.constant_term;
    j["s_or_a"] = fit.s_or_a;
    j["stderr"] = {{"gamma", fit.stderr_gamma},
                   {"s_or_a", fit.stderr_s_or_a},
                   {"constant_term", fit.stderr_constant}};
    j["residual_rms"] = fit.residual_rms;
    j["class"] = cls.name();
    j["n_points"] = fit.n_points;
    j["window"] = json::array({fit.window_min, fit.window_max});
    return j.dump(2);
}

void atomic_write(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path dir = target.parent_path();
    if (dir.empty()) dir = ".";
    fs::path tmp = dir / (target.filename().string() + ".tmp." + std::to_string(::getpid()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw StructureError("cannot write " + tmp.string());
        out << content;
        out.flush();
        if (!out) throw StructureError("short write to " + tmp.string());
    }
    fs::rename(tmp, target);
}

}  // namespace pfstate::io
