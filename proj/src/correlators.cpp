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

#include "pfstate/correlators.hpp"

namespace pfstate {

CorrelationSet correlations(const AntisymmetricMatrix& R) {
    const int L = R.dim();
    const CMat I = CMat::Identity(L, L);
    const CMat& m = R.mat();
    CMat A = I - m.conjugate() * m;
    Eigen::PartialPivLU<CMat> lu(A);
    if (!(lu.rcond() > 1e-14)) throw SingularQ("correlations: I - R* R is numerically singular");
    CorrelationSet s;
    s.Q = lu.inverse();
    s.C = I - s.Q;
    CMat Qt = s.Q.transpose();
    s.G = I + Qt * (m - I) + m.conjugate() * Qt - s.Q;
    s.K = (0.5 * I + m.conjugate()) * Qt + Qt * (0.5 * I - m) - s.Q + I;
    s.Kbar = (0.5 * I - m.conjugate()) * Qt + Qt * (0.5 * I + m) - s.Q + I;
    return s;
}

double kw_residuals(const AntisymmetricMatrix& R, const AntisymmetricMatrix& Rtilde) {
    const int L = require_same_length(R.dim(), Rtilde.dim(), "kw_residuals");
    CorrelationSet a = correlations(R);
    CorrelationSet b = correlations(Rtilde);
    double res = 0.0;
    for (int j = 0; j + 1 < L; ++j) {
        res = std::max(res, std::abs(a.G(j, j + 1) - 1.0 + 2.0 * b.C(j, j)));
        res = std::max(res, std::abs(b.G(j, j + 1) - 1.0 + 2.0 * a.C(j + 1, j + 1)));
    }
    res = std::max(res, std::abs(a.G(L - 1, 0) - 2.0 * b.C(L - 1, L - 1) + 1.0));
    res = std::max(res, std::abs(b.G(L - 1, 0) - 2.0 * a.C(0, 0) + 1.0));
    return res;
}

}  // namespace pfstate
