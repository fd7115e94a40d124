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

#ifndef MAXSUBFIELD_QUATERNION_HPP
#define MAXSUBFIELD_QUATERNION_HPP

#include <memory>
#include <optional>
#include <string>

#include "maxsubfield/matrix.hpp"
#include "maxsubfield/poly.hpp"

namespace msf {

class Quaternion;

/// Symbol algebra (a,b/F): basis 1, i, j, k with i^2 = a, j^2 = b,
/// k = ij = -ji. Characteristic 2 is excluded (the char-2 presentation
/// differs structurally).
class QuaternionAlgebra : public std::enable_shared_from_this<QuaternionAlgebra> {
   public:
    static std::shared_ptr<const QuaternionAlgebra> create(const Field& field, const FieldElement& a,
                                                           const FieldElement& b);

    const Field& field() const noexcept { return field_; }
    const FieldElement& a() const noexcept { return a_; }
    const FieldElement& b() const noexcept { return b_; }

    Quaternion element(FieldElement t, FieldElement x, FieldElement y, FieldElement z) const;
    Quaternion from_scalar(const FieldElement& t) const;
    Quaternion zero() const;
    Quaternion one() const;
    Quaternion i() const;
    Quaternion j() const;
    Quaternion k() const;
    Quaternion random(Rng& rng) const;
    Quaternion random_invertible(Rng& rng) const;

    /// (-1,-1) and (-1,-3) over Q: division by the classical positive-definite
    /// norm argument; shipped as trusted presets.
    bool is_known_division_preset() const;

    bool operator==(const QuaternionAlgebra& o) const;
    std::string to_string() const;  // "(-1,-1/Q)"

   private:
    QuaternionAlgebra(const Field& field, FieldElement a, FieldElement b);
    Field field_;
    FieldElement a_, b_;
};

/// Element t + x i + y j + z k of a quaternion algebra.
class Quaternion {
   public:
    Quaternion() = default;

    const FieldElement& t() const noexcept { return t_; }
    const FieldElement& x() const noexcept { return x_; }
    const FieldElement& y() const noexcept { return y_; }
    const FieldElement& z() const noexcept { return z_; }
    std::shared_ptr<const QuaternionAlgebra> algebra() const noexcept { return alg_; }

    Quaternion operator+(const Quaternion& o) const;
    Quaternion operator-(const Quaternion& o) const;
    Quaternion operator*(const Quaternion& o) const;
    Quaternion operator-() const;
    Quaternion scale(const FieldElement& c) const;
    Quaternion conjugate() const;
    /// conj(q)/Nrd(q); throws math_error on zero norm (the algebra is split,
    /// or q = 0).
    Quaternion inverse() const;

    FieldElement reduced_trace() const;  // 2t
    FieldElement reduced_norm() const;   // t^2 - a x^2 - b y^2 + ab z^2

    bool is_zero() const;
    bool is_central() const;  // x = y = z = 0
    bool operator==(const Quaternion& o) const;
    bool operator!=(const Quaternion& o) const { return !(*this == o); }
    std::string to_string() const;

    // ring interface shared with Matrix
    Quaternion ring_one() const;
    Quaternion ring_zero() const;

   private:
    friend class QuaternionAlgebra;
    Quaternion(std::shared_ptr<const QuaternionAlgebra> alg, FieldElement t, FieldElement x, FieldElement y,
               FieldElement z)
        : alg_(std::move(alg)), t_(std::move(t)), x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {}
    std::shared_ptr<const QuaternionAlgebra> alg_;
    FieldElement t_, x_, y_, z_;
};

/// x - t for central q, else x^2 - Trd(q) x + Nrd(q).
DegreeCertificate quat_min_poly(const Quaternion& q);

/// Left-multiplication operator of q in the basis 1, i, j, k: a faithful
/// 4x4 matrix representation over F.
Matrix regular_representation(const Quaternion& q);

enum class DivisionVerdict { no_zero_found, zero_found };

struct DivisionCheckResult {
    DivisionVerdict verdict;
    long long height_bound;
    std::optional<Quaternion> zero;  // a nonzero q with Nrd(q) = 0 proves splitness
};

/// Searches integer coordinates with |entry| <= height_bound for a nonzero
/// norm zero. Finding one proves the algebra is split; finding none is
/// heuristic evidence of division. Q only.
DivisionCheckResult heuristic_division_check(const std::shared_ptr<const QuaternionAlgebra>& alg,
                                             long long height_bound);

}  // namespace msf

#endif
