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

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pfstate {

using cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

// ---- error types ----------------------------------------------------------

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LengthMismatch : Error { using Error::Error; };
struct StructureError : Error { using Error::Error; };
struct SingularCayley : Error { using Error::Error; };
struct SingularQ : Error { using Error::Error; };
struct SingularG : Error { using Error::Error; };
struct SingularBlock : Error { using Error::Error; };
struct ZeroAmplitudeBase : Error { using Error::Error; };
struct NotRealMatrix : Error { using Error::Error; };
struct SizeLimit : Error { using Error::Error; };
struct DegenerateGroundState : Error { using Error::Error; };
struct InsufficientData : Error { using Error::Error; };
struct IllConditionedFit : Error { using Error::Error; };

// ---- occupation configurations -------------------------------------------

/// Occupation-number string n_0..n_{L-1}; parses/prints as e.g. "0101".
class BitString {
  public:
    BitString() = default;
    explicit BitString(std::vector<uint8_t> bits) : bits_(std::move(bits)) {
        for (uint8_t b : bits_)
            if (b > 1) throw StructureError("BitString entries must be 0 or 1");
    }
    static BitString zeros(int L) { return BitString(std::vector<uint8_t>(L, 0)); }
    static BitString parse(const std::string& s) {
        std::vector<uint8_t> b;
        b.reserve(s.size());
        for (char ch : s) {
            if (ch != '0' && ch != '1') throw StructureError("BitString must be over {0,1}");
            b.push_back(static_cast<uint8_t>(ch - '0'));
        }
        return BitString(std::move(b));
    }
    int size() const { return static_cast<int>(bits_.size()); }
    uint8_t operator[](int j) const { return bits_[j]; }
    uint8_t& operator[](int j) { return bits_[j]; }
    int sum() const {
        int s = 0;
        for (uint8_t b : bits_) s += b;
        return s;
    }
    std::string str() const {
        std::string s;
        for (uint8_t b : bits_) s.push_back(static_cast<char>('0' + b));
        return s;
    }
    bool operator==(const BitString& o) const { return bits_ == o.bits_; }

  private:
    std::vector<uint8_t> bits_;
};

/// Sign sequence s_0..s_{L-1} over {+,-}; stored as 0 for '+', 1 for '-'.
class SignSequence {
  public:
    SignSequence() = default;
    explicit SignSequence(std::vector<uint8_t> signs) : signs_(std::move(signs)) {
        for (uint8_t s : signs_)
            if (s > 1) throw StructureError("SignSequence entries must be 0 (+) or 1 (-)");
    }
    static SignSequence parse(const std::string& s) {
        std::vector<uint8_t> v;
        v.reserve(s.size());
        for (char ch : s) {
            if (ch != '+' && ch != '-') throw StructureError("SignSequence must be over {+,-}");
            v.push_back(ch == '-' ? 1 : 0);
        }
        return SignSequence(std::move(v));
    }
    int size() const { return static_cast<int>(signs_.size()); }
    uint8_t operator[](int j) const { return signs_[j]; }  // 1 means '-'
    int num_minus() const {
        int s = 0;
        for (uint8_t x : signs_) s += x;
        return s;
    }
    std::string str() const {
        std::string s;
        for (uint8_t x : signs_) s.push_back(x ? '-' : '+');
        return s;
    }
    SignSequence flipped() const {
        std::vector<uint8_t> v(signs_);
        for (auto& x : v) x ^= 1;
        return SignSequence(std::move(v));
    }
    bool operator==(const SignSequence& o) const { return signs_ == o.signs_; }

  private:
    std::vector<uint8_t> signs_;
};

/// Strictly increasing, duplicate-free set of 0-based site indices.
class IndexSet {
  public:
    IndexSet() = default;
    explicit IndexSet(std::vector<int> idx) : idx_(std::move(idx)) {
        for (size_t k = 0; k + 1 < idx_.size(); ++k)
            if (idx_[k] >= idx_[k + 1])
                throw StructureError("IndexSet must be strictly increasing");
        if (!idx_.empty() && idx_.front() < 0)
            throw StructureError("IndexSet indices must be non-negative");
    }
    int size() const { return static_cast<int>(idx_.size()); }
    bool empty() const { return idx_.empty(); }
    int operator[](int k) const { return idx_[k]; }
    const std::vector<int>& indices() const { return idx_; }
    auto begin() const { return idx_.begin(); }
    auto end() const { return idx_.end(); }

  private:
    std::vector<int> idx_;
};

// ---- antisymmetric matrices -----------------------------------------------

/// Complex matrix with A^T = -A. Validated on construction (tolerance 1e-12
/// relative to the largest entry), then symmetrized exactly as (A - A^T)/2.
class AntisymmetricMatrix {
  public:
    AntisymmetricMatrix() = default;
    explicit AntisymmetricMatrix(CMat m, double tol = 1e-12) {
        if (m.rows() != m.cols()) throw StructureError("antisymmetric matrix must be square");
        if (m.size() > 0) {
            double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
            double asym = (m + m.transpose()).cwiseAbs().maxCoeff();
            if (asym > tol * scale)
                throw StructureError("matrix is not antisymmetric within tolerance");
        }
        mat_ = 0.5 * (m - m.transpose().eval());
    }
    /// Skips the check and forces exact antisymmetry; for internally built matrices.
    static AntisymmetricMatrix symmetrize(const CMat& m) {
        AntisymmetricMatrix a;
        a.mat_ = 0.5 * (m - m.transpose().eval());
        return a;
    }
    int dim() const { return static_cast<int>(mat_.rows()); }
    const CMat& mat() const { return mat_; }
    cplx operator()(int i, int j) const { return mat_(i, j); }
    bool is_real(double tol = 1e-12) const {
        return mat_.size() == 0 || mat_.imag().cwiseAbs().maxCoeff() <= tol;
    }

  private:
    CMat mat_;
};

inline int require_same_length(int a, int b, const char* what) {
    if (a != b) throw LengthMismatch(std::string(what) + ": length mismatch");
    return a;
}

}  // namespace pfstate
