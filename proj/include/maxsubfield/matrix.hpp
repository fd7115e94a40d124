/*
   Copyright 2026 the maxsubfield authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MAXSUBFIELD_MATRIX_HPP
#define MAXSUBFIELD_MATRIX_HPP

#include <optional>
#include <string>
#include <vector>

#include "maxsubfield/field.hpp"

namespace msf {

/// Square matrix over an exact field. Row-major; immutable-by-convention
/// (operations return fresh values).
class Matrix {
   public:
    Matrix() : n_(0) {}
    Matrix(int n, const Field& field);  // zero matrix

    static Matrix identity(int n, const Field& field);
    static Matrix zero(int n, const Field& field) { return Matrix(n, field); }
    /// Matrix unit E_{ij} (1-based indices).
    static Matrix unit(int n, const Field& field, int i, int j);
    static Matrix diagonal(const Field& field, const std::vector<FieldElement>& entries);
    static Matrix block_diag(const std::vector<Matrix>& blocks);
    /// Companion matrix of the monic polynomial x^k + c_{k-1}x^{k-1} + ... + c_0.
    static Matrix companion(const Field& field, const std::vector<FieldElement>& low_coeffs);
    static Matrix random(int n, const Field& field, Rng& rng);
    static Matrix random_invertible(int n, const Field& field, Rng& rng);

    int size() const noexcept { return n_; }
    const Field& field() const noexcept { return field_; }
    const FieldElement& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    FieldElement& at(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scale(const FieldElement& c) const;
    Matrix operator-() const;
    Matrix transpose() const;
    Matrix pow(long long e) const;  // negative exponents via inverse()

    FieldElement trace() const;
    FieldElement det() const;
    Matrix inverse() const;  // throws math_error on singular input

    bool is_zero() const;
    bool is_identity() const;
    bool is_scalar() const;

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    std::string to_string() const;

    // ring interface shared with Quaternion (generic expression evaluation)
    Matrix ring_one() const { return identity(n_, field_); }
    Matrix ring_zero() const { return zero(n_, field_); }

   private:
    int n_;
    Field field_;
    std::vector<FieldElement> e_;
};

/// Solves Ax = b for square nonsingular A; throws math_error otherwise.
std::vector<FieldElement> solve_linear(const Matrix& A, const std::vector<FieldElement>& b);

/// One solution of Ax = b when the system is consistent (free variables set
/// to zero); nullopt when inconsistent. A singular is fine.
std::optional<std::vector<FieldElement>> solve_any(const Matrix& A, const std::vector<FieldElement>& b);

}  // namespace msf

#endif
