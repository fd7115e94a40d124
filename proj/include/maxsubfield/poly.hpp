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

#ifndef MAXSUBFIELD_POLY_HPP
#define MAXSUBFIELD_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "maxsubfield/matrix.hpp"

namespace msf {

/// Univariate polynomial with exact coefficients, stored ascending and
/// trimmed (no trailing zeros; empty = zero polynomial).
class Poly {
   public:
    Poly() : field_(Field::rationals()) {}
    explicit Poly(const Field& field) : field_(field) {}
    Poly(const Field& field, std::vector<FieldElement> coeffs);

    static Poly x(const Field& field);
    static Poly constant(const FieldElement& c);
    /// prod (x - r) over the given roots.
    static Poly from_roots(const Field& field, const std::vector<FieldElement>& roots);

    const Field& field() const noexcept { return field_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
    /// Coefficient of x^i; zero outside the stored range.
    FieldElement coeff(int i) const;
    const std::vector<FieldElement>& coeffs() const noexcept { return c_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scale(const FieldElement& c) const;
    Poly operator-() const;
    /// Quotient and remainder; divisor must be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    Poly operator/(const Poly& d) const { return divmod(d).first; }
    Poly operator%(const Poly& d) const { return divmod(d).second; }
    Poly monic() const;
    Poly pow_mod(const mpz_class& e, const Poly& modulus) const;

    FieldElement eval(const FieldElement& x) const;
    Matrix eval_matrix(const Matrix& a) const;  // Horner with matrices

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }
    std::string to_string() const;  // e.g. "x^2 - 4"

   private:
    Field field_;
    std::vector<FieldElement> c_;
    void trim();
};

Poly gcd(const Poly& a, const Poly& b);  // monic gcd
Poly lcm(const Poly& a, const Poly& b);

/// Characteristic polynomial det(xI - A) by the Berkowitz method:
/// division-free, valid in every characteristic, O(n^4).
Poly char_poly(const Matrix& a);

/// Minimal polynomial: first linear dependence among I, A, A^2, ... over
/// the flattened n^2-dimensional space. Monic; divides char_poly(a).
Poly min_poly(const Matrix& a);

/// Minimal polynomial plus its degree.
struct DegreeCertificate {
    Poly minimal_polynomial;
    int degree = 0;
};

DegreeCertificate algebraic_degree(const Matrix& a);

/// Distinct roots of p lying in its coefficient field, sorted canonically.
/// Finite fields: complete (x^q - x gcd + equal-degree splitting). Over Q:
/// complete for degree <= 2; higher degrees search rational candidates from
/// the usual numerator/denominator divisor bound (bounded enumeration).
std::vector<FieldElement> poly_roots(const Poly& p);

}  // namespace msf

#endif
