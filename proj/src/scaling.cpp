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

#include "pfstate/scaling.hpp"

#include <cmath>
#include <set>

namespace pfstate {

namespace {
ScalingFit ols(const std::vector<std::pair<double, double>>& points, bool periodic) {
    const int n = static_cast<int>(points.size());
    if (n < 10) throw InsufficientData("fit needs at least 10 points");
    std::set<double> distinct;
    for (auto& [L, y] : points) distinct.insert(L);
    if (static_cast<int>(distinct.size()) != n)
        throw InsufficientData("fit needs distinct L values");

    RMat X(n, 3);
    RVec y(n);
    for (int i = 0; i < n; ++i) {
        double L = points[i].first;
        X(i, 0) = L;
        if (periodic) {
            X(i, 1) = 1.0;
            X(i, 2) = 1.0 / L;
        } else {
            X(i, 1) = std::log(L);
            X(i, 2) = 1.0;
        }
        y(i) = points[i].second;
    }
    Eigen::JacobiSVD<RMat> svd(X, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    if (!(sv(2) > 0.0) || sv(0) / sv(2) > 1e10)
        throw IllConditionedFit("design matrix condition number exceeds 1e10");
    RVec beta = svd.solve(y);
    RVec resid = y - X * beta;
    double rss = resid.squaredNorm();
    double sigma2 = rss / std::max(1, n - 3);
    RMat XtX_inv = (X.transpose() * X).inverse();

    ScalingFit f;
    f.periodic = periodic;
    f.gamma = beta(0);
    f.stderr_gamma = std::sqrt(sigma2 * XtX_inv(0, 0));
    f.residual_rms = std::sqrt(rss / n);
    f.n_points = n;
    f.window_min = *distinct.begin();
    f.window_max = *distinct.rbegin();
    if (periodic) {
        f.constant_term = beta(1);
        f.s_or_a = -beta(1) / 2.0;
        f.stderr_constant = std::sqrt(sigma2 * XtX_inv(1, 1));
        f.stderr_s_or_a = 0.5 * f.stderr_constant;
    } else {
        f.constant_term = beta(2);
        f.s_or_a = beta(1);
        f.stderr_constant = std::sqrt(sigma2 * XtX_inv(2, 2));
        f.stderr_s_or_a = std::sqrt(sigma2 * XtX_inv(1, 1));
    }
    return f;
}
}  // namespace

ScalingFit fit_pbc(const std::vector<std::pair<double, double>>& points) {
    return ols(points, true);
}

ScalingFit fit_obc(const std::vector<std::pair<double, double>>& points) {
    return ols(points, false);
}

std::string BoundaryClass::name() const {
    switch (label) {
        case BoundaryClassLabel::fixed: return "fixed";
        case BoundaryClassLabel::free_: return "free";
        case BoundaryClassLabel::mixed: return "mixed";
        case BoundaryClassLabel::fixed_or_mixed: return "fixed-or-mixed";
        default: return "unresolved";
    }
}

BoundaryClass classify(const ScalingFit& fit) {
    const double ln2 = std::log(2.0);
    BoundaryClass out;
    if (fit.periodic) {
        const double tol = 0.01 * ln2;
        struct Cand { double v; BoundaryClassLabel lab; };
        const Cand cands[] = {{-ln2 / 2, BoundaryClassLabel::fixed},
                              {0.0, BoundaryClassLabel::free_},
                              {ln2 / 2, BoundaryClassLabel::mixed}};
        double best = tol;
        int hits = 0;
        for (const auto& c : cands) {
            double d = std::abs(fit.s_or_a - c.v);
            if (d < tol) ++hits;
            if (d < best) {
                best = d;
                out.label = c.lab;
                out.candidate = c.v;
            }
        }
        if (hits != 1) out = BoundaryClass{};
    } else {
        const double tol = 0.02;
        struct Cand { double v; BoundaryClassLabel lab; };
        const Cand cands[] = {{-0.125, BoundaryClassLabel::free_},
                              {0.375, BoundaryClassLabel::fixed_or_mixed}};
        double best = tol;
        int hits = 0;
        for (const auto& c : cands) {
            double d = std::abs(fit.s_or_a - c.v);
            if (d < tol) ++hits;
            if (d < best) {
                best = d;
                out.label = c.lab;
                out.candidate = c.v;
            }
        }
        if (hits != 1) out = BoundaryClass{};
    }
    return out;
}

}  // namespace pfstate
