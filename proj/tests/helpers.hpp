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

#include "pfstate/correlators.hpp"
#include "pfstate/types.hpp"

#include <random>

namespace pfstate::test {

inline CMat random_complex(int L, std::mt19937& rng, double scale = 1.0) {
    std::normal_distribution<double> g;
    CMat m(L, L);
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j) m(i, j) = scale * cplx(g(rng), g(rng));
    return m;
}

inline AntisymmetricMatrix random_antisymmetric(int L, std::mt19937& rng, double scale = 1.0) {
    return AntisymmetricMatrix::symmetrize(random_complex(L, rng, scale));
}

inline AntisymmetricMatrix random_real_antisymmetric(int L, std::mt19937& rng, double scale = 1.0) {
    std::normal_distribution<double> g;
    CMat m(L, L);
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j) m(i, j) = scale * g(rng);
    return AntisymmetricMatrix::symmetrize(m);
}

/// i.i.d. entries scaled by 1/sqrt(L), rejection-sampled on cond(I - R* R) < 1e6.
inline AntisymmetricMatrix well_conditioned_random(int L, std::mt19937& rng) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        AntisymmetricMatrix R = random_antisymmetric(L, rng, 1.0 / std::sqrt(double(L)));
        CMat A = CMat::Identity(L, L) - R.mat().conjugate() * R.mat();
        Eigen::JacobiSVD<CMat> svd(A);
        double cond = svd.singularValues()(0) / svd.singularValues()(L - 1);
        if (cond < 1e6) return R;
    }
    throw std::runtime_error("could not sample a well-conditioned R");
}

inline BitString random_bits(int L, std::mt19937& rng) {
    std::vector<uint8_t> b(L);
    for (auto& x : b) x = rng() & 1;
    return BitString(std::move(b));
}

inline SignSequence random_signs(int L, std::mt19937& rng) {
    std::vector<uint8_t> b(L);
    for (auto& x : b) x = rng() & 1;
    return SignSequence(std::move(b));
}

/// Recursive first-row cofactor expansion; independent Pfaffian oracle.
inline cplx pfaffian_cofactor(const CMat& A) {
    const int n = static_cast<int>(A.rows());
    if (n == 0) return 1.0;
    if (n % 2 == 1) return 0.0;
    if (n == 2) return A(0, 1);
    cplx sum = 0.0;
    for (int j = 1; j < n; ++j) {
        std::vector<int> keep;
        for (int k = 1; k < n; ++k)
            if (k != j) keep.push_back(k);
        CMat minor(n - 2, n - 2);
        for (int a = 0; a < n - 2; ++a)
            for (int b = 0; b < n - 2; ++b) minor(a, b) = A(keep[a], keep[b]);
        double sign = (j % 2 == 1) ? 1.0 : -1.0;
        sum += sign * A(0, j) * pfaffian_cofactor(minor);
    }
    return sum;
}

inline BitString bits_of(const std::string& s) { return BitString::parse(s); }
inline SignSequence signs_of(const std::string& s) { return SignSequence::parse(s); }

}  // namespace pfstate::test
