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

#include "pfstate/scaling.hpp"
#include "pfstate/state.hpp"
#include "pfstate/tfi.hpp"

#include <string>

namespace pfstate::io {

/// Shortest round-trip decimal representation of a double.
std::string format_double(double v);

// State JSON: {"L": n, "base": "0101...", "R": [[re,im], ...]} with R listed
// row-major (L^2 pairs). An optional "phase": [re,im] key records a
// non-trivial global phase. Round-trips are exact.
std::string state_to_json(const GaussianState& state);
GaussianState state_from_json(const std::string& text);
GaussianState load_state(const std::string& path);
void save_state(const GaussianState& state, const std::string& path);

/// Campaign file for `scan`:
/// {"boundary": "periodic"|"open", "basis": "z"|"x"|"y"|{"phi": f, "alpha": f},
///  "base_pattern": "01"|"+-", "L_min": n, "L_max": n,
///  "stride": n?, "threads": n?, "out": "file.csv"?}
/// Unknown keys are rejected.
struct Campaign {
    ScanSpec spec;
    std::string out;  // optional output path
};
Campaign campaign_from_json(const std::string& text);
Campaign load_campaign(const std::string& path);

/// CSV with header L,minus_log_P,path_used (deterministic float formatting).
std::string scan_to_csv(const ScanResult& result);
std::vector<std::pair<double, double>> points_from_csv(const std::string& text);

/// Fit report JSON (gamma, s_or_a, stderr, class, n_points, window, ...).
std::string fit_to_json(const ScalingFit& fit, const BoundaryClass& cls);

/// Writes via a temp file in the same directory, then renames.
void atomic_write(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

}  // namespace pfstate::io
