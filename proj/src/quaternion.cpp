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

#include "maxsubfield/quaternion.hpp"

namespace msf {

QuaternionAlgebra::QuaternionAlgebra(const Field& field, FieldElement a, FieldElement b)
    : field_(field), a_(std::move(a)), b_(std::move(b)) {}

std::shared_ptr<const QuaternionAlgebra> QuaternionAlgebra::create(const Field& field, const FieldElement& a,
                                                                   const FieldElement& b) {
    if (field.characteristic() == 2) throw math_error("quaternion algebras require characteristic != 2");
    if (a.is_zero() || b.is_zero()) throw math_error("symbol algebra parameters must be nonzero");
    return std::shared_ptr<const QuaternionAlgebra>(new QuaternionAlgebra(field, a, b));
}

Quaternion QuaternionAlgebra::element(FieldElement t, FieldElement x, FieldElement y, FieldElement z) const {
    return Quaternion(shared_from_this(), std::move(t), std::move(x), std::move(y), std::move(z));
}

Quaternion QuaternionAlgebra::from_scalar(const FieldElement& t) const {
    return element(t, field_.zero(), field_.zero(), field_.zero());
}

Quaternion QuaternionAlgebra::zero() const { return from_scalar(field_.zero()); }
Quaternion QuaternionAlgebra::one() const { return from_scalar(field_.one()); }
Quaternion QuaternionAlgebra::i() const {
    return element(field_.zero(), field_.one(), field_.zero(), field_.zero());
}
Quaternion QuaternionAlgebra::j() const {
    return element(field_.zero(), field_.zero(), field_.one(), field_.zero());
}
Quaternion QuaternionAlgebra::k() const {
    return element(field_.zero(), field_.zero(), field_.zero(), field_.one());
}

Quaternion QuaternionAlgebra::random(Rng& rng) const {
    return element(field_.random(rng), field_.random(rng), field_.random(rng), field_.random(rng));
}

Quaternion QuaternionAlgebra::random_invertible(Rng& rng) const {
    for (;;) {
        Quaternion q = random(rng);
        if (!q.reduced_norm().is_zero()) return q;
    }
}

bool QuaternionAlgebra::is_known_division_preset() const {
    if (field_.kind() != FieldKind::rationals) return false;
    FieldElement m1 = field_.from_int(-1), m3 = field_.from_int(-3);
    return (a_ == m1 && b_ == m1) || (a_ == m1 && b_ == m3) || (a_ == m3 && b_ == m1);
}

bool QuaternionAlgebra::operator==(const QuaternionAlgebra& o) const {
    return field_ == o.field_ && a_ == o.a_ && b_ == o.b_;
}

std::string QuaternionAlgebra::to_string() const {
    return "(" + a_.to_string() + "," + b_.to_string() + "/" + field_.to_string() + ")";
}

namespace {
void check_same_algebra(const Quaternion& p, const Quaternion& q) {
    if (!p.algebra() || !q.algebra() || !(*p.algebra() == *q.algebra()))
        throw math_error("quaternion algebra mismatch");
}
}  // namespace

Quaternion Quaternion::operator+(const Quaternion& o) const {
    check_same_algebra(*this, o);
    return Quaternion(alg_, t_ + o.t_, x_ + o.x_, y_ + o.y_, z_ + o.z_);
}

Quaternion Quaternion::operator-(const Quaternion& o) const {
    check_same_algebra(*this, o);
    return Quaternion(alg_, t_ - o.t_, x_ - o.x_, y_ - o.y_, z_ - o.z_);
}

Quaternion Quaternion::operator-() const { return Quaternion(alg_, -t_, -x_, -y_, -z_); }

Quaternion Quaternion::operator*(const Quaternion& o) const {
    check_same_algebra(*this, o);
    const FieldElement &a = alg_->a(), &b = alg_->b();
    const FieldElement &t1 = t_, &x1 = x_, &y1 = y_, &z1 = z_;
    const FieldElement &t2 = o.t_, &x2 = o.x_, &y2 = o.y_, &z2 = o.z_;
    // from i^2 = a, j^2 = b, ij = k = -ji, ik = aj, ki = -aj, jk = -bi,
    // kj = bi, k^2 = -ab
    FieldElement rt = t1 * t2 + a * (x1 * x2) + b * (y1 * y2) - a * b * (z1 * z2);
    FieldElement rx = t1 * x2 + x1 * t2 - b * (y1 * z2) + b * (z1 * y2);
    FieldElement ry = t1 * y2 + y1 * t2 + a * (x1 * z2) - a * (z1 * x2);
    FieldElement rz = t1 * z2 + z1 * t2 + x1 * y2 - y1 * x2;
    return Quaternion(alg_, std::move(rt), std::move(rx), std::move(ry), std::move(rz));
}

Quaternion Quaternion::scale(const FieldElement& c) const {
    return Quaternion(alg_, t_ * c, x_ * c, y_ * c, z_ * c);
}

Quaternion Quaternion::conjugate() const { return Quaternion(alg_, t_, -x_, -y_, -z_); }

FieldElement Quaternion::reduced_trace() const { return t_ + t_; }

FieldElement Quaternion::reduced_norm() const {
    const FieldElement &a = alg_->a(), &b = alg_->b();
    return t_ * t_ - a * (x_ * x_) - b * (y_ * y_) + a * b * (z_ * z_);
}

Quaternion Quaternion::inverse() const {
    FieldElement n = reduced_norm();
    if (n.is_zero())
        throw math_error("zero reduced norm: element is not invertible (split algebra or zero element)");
    return conjugate().scale(n.inverse());
}

bool Quaternion::is_zero() const { return t_.is_zero() && is_central(); }

bool Quaternion::is_central() const { return x_.is_zero() && y_.is_zero() && z_.is_zero(); }

bool Quaternion::operator==(const Quaternion& o) const {
    return *alg_ == *o.alg_ && t_ == o.t_ && x_ == o.x_ && y_ == o.y_ && z_ == o.z_;
}

std::string Quaternion::to_string() const {
    return "(" + t_.to_string() + ") + (" + x_.to_string() + ")i + (" + y_.to_string() + ")j + (" +
           z_.to_string() + ")k";
}

Quaternion Quaternion::ring_one() const { return alg_->one(); }
Quaternion Quaternion::ring_zero() const { return alg_->zero(); }

DegreeCertificate quat_min_poly(const Quaternion& q) {
    const Field& f = q.algebra()->field();
    if (q.is_central()) {
        return DegreeCertificate{Poly(f, {-q.t(), f.one()}), 1};
    }
    return DegreeCertificate{Poly(f, {q.reduced_norm(), -q.reduced_trace(), f.one()}), 2};
}

Matrix regular_representation(const Quaternion& q) {
    const Field& f = q.algebra()->field();
    const FieldElement &a = q.algebra()->a(), &b = q.algebra()->b();
    const FieldElement &t = q.t(), &x = q.x(), &y = q.y(), &z = q.z();
    Matrix m(4, f);
    // columns are the coordinates of q*1, q*i, q*j, q*k
    m.at(0, 0) = t;      m.at(0, 1) = a * x;  m.at(0, 2) = b * y;      m.at(0, 3) = -(a * b * z);
    m.at(1, 0) = x;      m.at(1, 1) = t;      m.at(1, 2) = b * z;      m.at(1, 3) = -(b * y);
    m.at(2, 0) = y;      m.at(2, 1) = -(a * z); m.at(2, 2) = t;        m.at(2, 3) = a * x;
    m.at(3, 0) = z;      m.at(3, 1) = -y;     m.at(3, 2) = x;          m.at(3, 3) = t;
    return m;
}

DivisionCheckResult heuristic_division_check(const std::shared_ptr<const QuaternionAlgebra>& alg,
                                             long long height_bound) {
    const Field& f = alg->field();
    if (f.kind() != FieldKind::rationals)
        throw math_error("heuristic division check is defined over Q");
    if (height_bound < 1) throw math_error("height bound must be >= 1");
    for (long long t = -height_bound; t <= height_bound; ++t)
        for (long long x = -height_bound; x <= height_bound; ++x)
            for (long long y = -height_bound; y <= height_bound; ++y)
                for (long long z = -height_bound; z <= height_bound; ++z) {
                    if (t == 0 && x == 0 && y == 0 && z == 0) continue;
                    Quaternion q = alg->element(f.from_int(t), f.from_int(x), f.from_int(y), f.from_int(z));
                    if (q.reduced_norm().is_zero())
                        return DivisionCheckResult{DivisionVerdict::zero_found, height_bound, q};
                }
    return DivisionCheckResult{DivisionVerdict::no_zero_found, height_bound, std::nullopt};
}

}  // namespace msf
