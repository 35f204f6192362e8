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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pfstate/basis.hpp"
#include "pfstate/correlators.hpp"
#include "pfstate/io.hpp"
#include "pfstate/oracle.hpp"
#include "pfstate/probability.hpp"
#include "pfstate/scaling.hpp"
#include "pfstate/tfi.hpp"

namespace py = pybind11;
using namespace pfstate;

namespace {

IndexSet keep_from_list(const std::vector<int>& keep) {
    std::vector<int> k = keep;
    std::sort(k.begin(), k.end());
    return IndexSet(std::move(k));
}

Boundary boundary_from_string(const std::string& b) {
    if (b == "periodic" || b == "pbc") return Boundary::periodic;
    if (b == "open" || b == "obc") return Boundary::open;
    throw StructureError("boundary must be 'periodic' or 'open'");
}

py::dict fit_to_dict(const ScalingFit& f) {
    py::dict d;
    d["gamma"] = f.gamma;
    d["constant_term"] = f.constant_term;
    d["s_or_a"] = f.s_or_a;
    d["stderr_gamma"] = f.stderr_gamma;
    d["stderr_s_or_a"] = f.stderr_s_or_a;
    d["stderr_constant"] = f.stderr_constant;
    d["residual_rms"] = f.residual_rms;
    d["n_points"] = f.n_points;
    d["window"] = py::make_tuple(f.window_min, f.window_max);
    d["model"] = f.periodic ? "pbc" : "obc";
    d["class"] = classify(f).name();
    return d;
}

}  // namespace

PYBIND11_MODULE(_pfstate, m) {
    m.doc() = "Gaussian fermionic pure states: Pfaffian amplitudes in computational and "
              "xy-plane bases, duality machinery, and critical-Ising formation probabilities.";

    auto base_exc = py::register_exception<Error>(m, "PfstateError");
    py::register_exception<SingularCayley>(m, "SingularCayleyError", base_exc.ptr());
    py::register_exception<ZeroAmplitudeBase>(m, "ZeroAmplitudeBaseError", base_exc.ptr());

    py::class_<GaussianState>(m, "GaussianState")
        .def(py::init([](const CMat& R, const std::string& base) {
                 return GaussianState(AntisymmetricMatrix(R), BitString::parse(base));
             }),
             py::arg("R"), py::arg("base"))
        .def_property_readonly("L", &GaussianState::size)
        .def_property_readonly("R", [](const GaussianState& s) { return s.R().mat(); })
        .def_property_readonly("base", [](const GaussianState& s) { return s.base().str(); })
        .def_property_readonly("norm", &GaussianState::norm)
        .def_property_readonly("log_norm", &GaussianState::log_norm)
        .def_property_readonly("phase", &GaussianState::phase)
        .def("__repr__", [](const GaussianState& s) {
            return "<GaussianState L=" + std::to_string(s.size()) + " base=" + s.base().str() + ">";
        });

    // Pfaffian kernels
    m.def("pfaffian", [](const CMat& A) { return pfaffian(AntisymmetricMatrix(A)); }, py::arg("A"),
          "Pfaffian of a complex skew-symmetric matrix (Parlett-Reid elimination).");
    m.def("pfaffinho",
          [](const CMat& A, const std::vector<int>& keep) {
              return pfaffinho(AntisymmetricMatrix(A), keep_from_list(keep));
          },
          py::arg("A"), py::arg("keep"),
          "Pfaffian of the principal submatrix on the kept (0-based) sites.");
    m.def("log_abs_pfaffian", [](const CMat& A) {
        LogScaled v = log_pfaffian(AntisymmetricMatrix(A));
        return py::make_tuple(v.log_abs, v.phase);
    });

    // amplitudes and rebasing
    m.def("amplitude_z",
          [](const GaussianState& s, const std::string& I) {
              return amplitude_z(s, BitString::parse(I));
          },
          py::arg("state"), py::arg("config"));
    m.def("rebase",
          [](const GaussianState& s, const std::string& Cp) {
              return rebase(s, BitString::parse(Cp));
          },
          py::arg("state"), py::arg("new_base"),
          "Same state over a new base configuration (amplitude-for-amplitude equal).");
    m.def("from_generic",
          [](const CMat& M, const std::string& base) {
              return from_generic(GenericGaussianExponent(M, BitString::parse(base)));
          },
          py::arg("M"), py::arg("base"),
          "Standard-form state from a generic quadratic exponent (Balian-Brezin).");
    m.def("sign_cfg", [](const std::string& C, const std::string& I) {
        return sign_cfg(BitString::parse(C), BitString::parse(I));
    });

    // domain-wall machinery
    m.def("domain_wall",
          [](const std::string& S) { return domain_wall(SignSequence::parse(S)).str(); });
    m.def("base_domain_config",
          [](const std::string& C) { return base_domain_config(BitString::parse(C)).str(); });
    m.def("sequence_sign", [](const std::string& C, const std::string& S) {
        return sequence_sign(BitString::parse(C), SignSequence::parse(S));
    });
    m.def("phi_twist",
          [](const CMat& R, const std::string& C, double phi) {
              return phi_twist(AntisymmetricMatrix(R), BitString::parse(C), phi).mat();
          },
          py::arg("R"), py::arg("base"), py::arg("phi"));
    m.def("dual_matrix",
          [](const CMat& R) {
              DualMatrices d = dual_matrix(AntisymmetricMatrix(R));
              py::dict out;
              out["H"] = d.H;
              out["P"] = d.P;
              out["Rtilde"] = d.Rtilde.mat();
              out["norm_tilde"] = d.normTilde;
              return out;
          },
          py::arg("R"), "Domain-wall dual: H, the shift matrix P, Rtilde and its norm.");
    m.def("amplitude_phi",
          [](const GaussianState& s, const std::string& S, double phi, double alpha) {
              return amplitude_phi(s, SignSequence::parse(S), BasisSpec{phi, alpha});
          },
          py::arg("state"), py::arg("config"), py::arg("phi") = 0.0, py::arg("alpha") = 0.0);

    // correlators
    m.def("correlations",
          [](const CMat& R) {
              CorrelationSet s = correlations(AntisymmetricMatrix(R));
              py::dict out;
              out["Q"] = s.Q;
              out["C"] = s.C;
              out["G"] = s.G;
              out["K"] = s.K;
              out["Kbar"] = s.Kbar;
              return out;
          },
          py::arg("R"));
    m.def("kw_residuals", [](const CMat& R, const CMat& Rt) {
        return kw_residuals(AntisymmetricMatrix(R), AntisymmetricMatrix(Rt));
    });

    // probabilities
    m.def("prob_z",
          [](const GaussianState& s, const std::string& I) { return prob_z(s, BitString::parse(I)); });
    m.def("prob_z_real", [](const GaussianState& s, const std::string& I) {
        return prob_z_real(s, BitString::parse(I));
    });
    m.def("prob_phi",
          [](const GaussianState& s, const std::string& S, double phi) {
              return prob_phi(s, SignSequence::parse(S), phi);
          },
          py::arg("state"), py::arg("config"), py::arg("phi") = 0.0);
    m.def("prob_x",
          [](const GaussianState& s, const std::string& S) { return prob_x(s, SignSequence::parse(S)); });
    m.def("prob_y",
          [](const GaussianState& s, const std::string& S) { return prob_y(s, SignSequence::parse(S)); });

    // skew-circulant spectral fast path
    py::class_<SpectralForm>(m, "SpectralForm")
        .def_readonly("L", &SpectralForm::L)
        .def_readonly("lambdas", &SpectralForm::lambdas)
        .def_readonly("V", &SpectralForm::V)
        .def("reconstruct", &SpectralForm::reconstruct);
    m.def("skew_circulant_spectrum",
          [](const CVec& first_row) { return skew_circulant_spectrum(first_row); });
    m.def("spectral_pfaffinho", [](const SpectralForm& s, const std::vector<int>& keep) {
        return spectral_pfaffinho(s, keep_from_list(keep));
    });
    m.def("all_plus_amplitude", &all_plus_amplitude);

    // TFI chain
    m.def("tfi_G",
          [](int L, const std::string& boundary) { return tfi_G(L, boundary_from_string(boundary)); },
          py::arg("L"), py::arg("boundary") = "periodic");
    m.def("tfi_R",
          [](int L, const std::string& boundary) {
              return tfi_R(TFIModel(L, boundary_from_string(boundary)));
          },
          py::arg("L"), py::arg("boundary") = "periodic",
          "Critical TFI ground state as a Gaussian state.");
    m.def("scan_formation",
          [](const std::string& boundary, const std::string& basis, double phi,
             const std::string& pattern, int L_min, int L_max, int stride, int threads) {
              ScanBasisSpec b = basis == "z" ? ScanBasisSpec::z()
                               : basis == "x" ? ScanBasisSpec::rotated(0.0)
                               : basis == "y" ? ScanBasisSpec::rotated(M_PI / 2)
                                              : ScanBasisSpec::rotated(phi);
              ScanSpec spec{boundary_from_string(boundary), b, CrystalConfig(pattern),
                            L_min, L_max, stride, threads};
              ScanResult r = scan_formation(spec);
              py::list rows;
              for (const ScanPoint& p : r.points)
                  rows.append(py::make_tuple(p.L, p.minus_log_P, p.path_used));
              return rows;
          },
          py::arg("boundary"), py::arg("basis"), py::arg("phi"), py::arg("pattern"),
          py::arg("L_min"), py::arg("L_max"), py::arg("stride") = 0, py::arg("threads") = 0,
          "Rows of (L, -ln P, path). basis: 'z', 'x', 'y' or 'phi' (uses the phi argument).");

    // scaling fits
    m.def("fit_pbc",
          [](const std::vector<std::pair<double, double>>& pts) { return fit_to_dict(fit_pbc(pts)); });
    m.def("fit_obc",
          [](const std::vector<std::pair<double, double>>& pts) { return fit_to_dict(fit_obc(pts)); });

    // state JSON
    m.def("state_to_json", &io::state_to_json);
    m.def("state_from_json", &io::state_from_json);

    // dense oracle (test-scale reference paths)
    auto orc = m.def_submodule("oracle", "dense brute-force references (L <= 14)");
    orc.def("dense_from_gaussian",
            [](const GaussianState& s) { return oracle::dense_from_gaussian(s).amp; });
    orc.def("rotate", [](const CVec& amp, double phi, double alpha) {
        int L = 0;
        while ((1 << L) < amp.size()) ++L;
        return oracle::rotate(oracle::DenseState{L, amp}, phi, alpha).amp;
    });
    orc.def("tfi_exact_ground_state", [](int L, const std::string& boundary) {
        return oracle::tfi_exact_ground_state(TFIModel(L, boundary_from_string(boundary))).amp;
    });
}
