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

#ifndef MAXSUBFIELD_FIELD_HPP
#define MAXSUBFIELD_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "maxsubfield/errors.hpp"
#include "maxsubfield/rng.hpp"

namespace msf {

enum class FieldKind { rationals, prime, extension };

/// Immutable description of an extension field F_{p^k} = F_p[x]/(modulus).
/// Shared by every element of the field.
struct ExtContext {
    std::uint64_t p;
    int k;
    std::vector<std::uint64_t> modulus;  // ascending coefficients, size k+1, monic
};

class FieldElement;

/// Field descriptor: the rationals, a prime field F_p (p < 2^62), or an
/// extension F_{p^k} with an irreducible modulus (verified at construction).
class Field {
   public:
    Field() : kind_(FieldKind::rationals) {}

    static Field rationals();
    static Field prime(std::uint64_t p);
    /// Modulus chosen by a deterministic sieve (smallest irreducible in the
    /// fixed coefficient-tuple order), so the same (p, k) always names the
    /// same field.
    static Field extension(std::uint64_t p, int k);
    static Field extension_with_modulus(std::uint64_t p, std::vector<std::uint64_t> modulus);

    /// Parses the CLI notation: "Q", "Fp:<p>", "F2k:<k>" or "Fpk:<p>:<k>".
    static Field parse(const std::string& text);
    std::string to_string() const;

    FieldKind kind() const noexcept { return kind_; }
    bool is_finite() const noexcept { return kind_ != FieldKind::rationals; }
    /// 0 for the rationals.
    std::uint64_t characteristic() const noexcept { return kind_ == FieldKind::rationals ? 0 : p_; }
    std::uint64_t prime() const;
    int extension_degree() const;  // k for extensions, 1 for F_p
    const std::vector<std::uint64_t>& modulus() const;
    /// Number of elements; nullopt for the rationals.
    std::optional<mpz_class> size() const;

    bool operator==(const Field& other) const;
    bool operator!=(const Field& other) const { return !(*this == other); }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_int(long long v) const;
    /// Embeds a rational: identity over Q, reduction mod p otherwise
    /// (throws math_error when the denominator vanishes mod p).
    FieldElement from_rational(const mpq_class& q) const;
    /// Parses "n", "-n" or "n/m"; extension fields also accept the prime
    /// subfield this way.
    FieldElement parse_element(const std::string& text) const;
    /// Element with canonical index i (0 <= i < size); finite fields only.
    /// F_p: the residue i. F_{p^k}: base-p digits of i as coefficients.
    FieldElement element_at(const mpz_class& index) const;

    /// Over Q: a small integer in [-9, 9] (keeps exact arithmetic tame).
    /// Over finite fields: uniform.
    FieldElement random(Rng& rng) const;
    FieldElement random_nonzero(Rng& rng) const;

   private:
    friend class FieldElement;
    FieldKind kind_;
    std::uint64_t p_ = 0;
    std::shared_ptr<const ExtContext> ext_;
};

/// An exact scalar: reduced fraction, residue mod p, or polynomial residue.
/// Immutable in spirit; all operations return new values. Mixing elements of
/// different fields throws math_error.
class FieldElement {
   public:
    /// Default: rational zero (so containers are usable); prefer the Field
    /// factories.
    FieldElement() : rep_(mpq_class(0)) {}

    FieldKind kind() const noexcept;
    Field field() const;

    bool is_zero() const;
    bool is_one() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(long long e) const;
    FieldElement pow(const mpz_class& e) const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    /// "p/q" (or "p") over Q, the residue over F_p, "[c0,...,c_{k-1}]" over
    /// extensions.
    std::string to_string() const;

    const mpq_class& rational() const;
    std::uint64_t residue() const;
    const std::vector<std::uint64_t>& ext_coeffs() const;

    /// Square root when one exists in the field (exact everywhere).
    std::optional<FieldElement> sqrt() const;

   private:
    friend class Field;
    struct FpRepr {
        std::uint64_t v;
        std::uint64_t p;
    };
    struct ExtRepr {
        std::shared_ptr<const ExtContext> ctx;
        std::vector<std::uint64_t> c;  // size k
    };
    std::variant<mpq_class, FpRepr, ExtRepr> rep_;

    explicit FieldElement(mpq_class q) : rep_(std::move(q)) {}
    FieldElement(std::uint64_t v, std::uint64_t p) : rep_(FpRepr{v, p}) {}
    FieldElement(std::shared_ptr<const ExtContext> ctx, std::vector<std::uint64_t> c)
        : rep_(ExtRepr{std::move(ctx), std::move(c)}) {}
};

/// Deterministic Miller-Rabin, valid for every 64-bit input.
bool is_prime_u64(std::uint64_t n);

/// Irreducibility over F_p by brute-force root/factor check (k <= 16).
bool is_irreducible_mod_p(const std::vector<std::uint64_t>& poly, std::uint64_t p);

/// Smallest irreducible monic polynomial of degree k over F_p in the
/// canonical order (non-leading coefficient tuple read most significant
/// first as a base-p integer).
std::vector<std::uint64_t> smallest_irreducible(std::uint64_t p, int k);

}  // namespace msf

#endif
