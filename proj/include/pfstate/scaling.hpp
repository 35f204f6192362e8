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

#include "pfstate/types.hpp"

namespace pfstate {

/// Least-squares fit of -ln P against the conformal scaling laws.
/// Periodic model:  Gamma*L + c0 + c1/L, with s = -c0/2.
/// Open model:      Gamma*L + a*ln L + c0.
struct ScalingFit {
    double gamma = 0.0;
    double constant_term = 0.0;  // c0
    double s_or_a = 0.0;         // boundary entropy s (PBC) or log coefficient a (OBC)
    double stderr_gamma = 0.0;
    double stderr_s_or_a = 0.0;
    double stderr_constant = 0.0;
    double residual_rms = 0.0;
    int n_points = 0;
    double window_min = 0.0;
    double window_max = 0.0;
    bool periodic = true;
};

ScalingFit fit_pbc(const std::vector<std::pair<double, double>>& points);
ScalingFit fit_obc(const std::vector<std::pair<double, double>>& points);

enum class BoundaryClassLabel { fixed, free_, mixed, fixed_or_mixed, unresolved };

struct BoundaryClass {
    BoundaryClassLabel label = BoundaryClassLabel::unresolved;
    double candidate = 0.0;  // the matched universal value (when resolved)

    std::string name() const;
};

/// Nearest-candidate match: {-ln2/2, 0, +ln2/2} for periodic fits with
/// tolerance 0.01*ln2, {-1/8, 3/8} for open fits with tolerance 0.02
/// (3/8 maps to both fixed and mixed). Outside tolerance: unresolved.
BoundaryClass classify(const ScalingFit& fit);

}  // namespace pfstate
