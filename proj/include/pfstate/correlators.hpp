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

/// Quadratic correlators of |R, 0>:
///   Q = (I - R* R)^{-1}
///   C_jk = <c_j^dag c_k>            = I - Q
///   G_jk = <(c_j^dag - c_j)(c_k^dag + c_k)>
///   K_jk = <(c_j^dag + c_j)(c_k^dag + c_k)>
///   Kbar_jk = -<(c_j^dag - c_j)(c_k^dag - c_k)>
struct CorrelationSet {
    CMat Q, C, G, K, Kbar;
};

/// Throws SingularQ when I - R* R is numerically singular.
CorrelationSet correlations(const AntisymmetricMatrix& R);

/// Max residual of the Kramers-Wannier relations linking G of one state to
/// the occupation C of its dual (both directions, including the wraparound
/// bond). Near zero exactly when Rtilde is the dual of R.
double kw_residuals(const AntisymmetricMatrix& R, const AntisymmetricMatrix& Rtilde);

}  // namespace pfstate
