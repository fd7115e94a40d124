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

#include "maxsubfield/field.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace msf {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kMaxPrime = (1ull << 62);

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((u128)a * b % p); }

u64 addmod(u64 a, u64 b, u64 p) {
    u64 s = a + b;  // a,b < p < 2^62, no overflow
    return s >= p ? s - p : s;
}

u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) {
    if (a == 0) throw math_error("division by zero in F_p");
    long long t = 0, nt = 1;
    long long r = static_cast<long long>(p), nr = static_cast<long long>(a);
    while (nr != 0) {
        long long q = r / nr;
        long long tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw math_error("non-invertible residue");
    if (t < 0) t += static_cast<long long>(p);
    return static_cast<u64>(t);
}

// ---- F_p[x] helpers on raw coefficient vectors (ascending, may carry
// trailing zeros; trim() restores canonical form) -------------------------

using PVec = std::vector<u64>;

void trim(PVec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

int pdeg(const PVec& v) { return static_cast<int>(v.size()) - 1; }

PVec pmul(const PVec& a, const PVec& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    PVec r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = addmod(r[i + j], mulmod(a[i], b[j], p), p);
    }
    trim(r);
    return r;
}

// Remainder of a by monic m.
PVec pmod(PVec a, const PVec& m, u64 p) {
    trim(a);
    int dm = pdeg(m);
    while (pdeg(a) >= dm) {
        u64 c = a.back();
        int shift = pdeg(a) - dm;
        if (c != 0) {
            for (int i = 0; i <= dm; ++i)
                a[i + shift] = submod(a[i + shift], mulmod(c, m[i], p), p);
        }
        a.pop_back();
        trim(a);
    }
    return a;
}

PVec psub(PVec a, const PVec& b, u64 p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = submod(a[i], b[i], p);
    trim(a);
    return a;
}

PVec pscale(PVec a, u64 c, u64 p) {
    for (auto& x : a) x = mulmod(x, c, p);
    trim(a);
    return a;
}

// Inverse of a modulo monic m (extended Euclid over F_p[x]).
PVec pinv(PVec a, const PVec& m, u64 p) {
    a = pmod(std::move(a), m, p);
    if (a.empty()) throw math_error("division by zero in extension field");
    PVec r0 = m, r1 = a;
    PVec t0 = {}, t1 = {1};
    while (!r1.empty()) {
        // divide r0 by r1
        PVec q;
        PVec rem = r0;
        int d1 = pdeg(r1);
        u64 lead_inv = invmod(r1.back(), p);
        while (pdeg(rem) >= d1) {
            int shift = pdeg(rem) - d1;
            u64 c = mulmod(rem.back(), lead_inv, p);
            if (static_cast<int>(q.size()) <= shift) q.resize(shift + 1, 0);
            q[shift] = addmod(q[shift], c, p);
            for (int i = 0; i <= d1; ++i)
                rem[i + shift] = submod(rem[i + shift], mulmod(c, r1[i], p), p);
            trim(rem);
            if (rem.empty()) break;
        }
        PVec nt = psub(t0, pmul(q, t1, p), p);
        r0 = r1;
        r1 = rem;
        t0 = t1;
        t1 = nt;
    }
    if (pdeg(r0) != 0) throw math_error("non-invertible element (modulus not irreducible?)");
    return pmod(pscale(std::move(t0), invmod(r0[0], p), p), m, p);
}

u64 peval(const PVec& a, u64 x, u64 p) {
    u64 r = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) r = addmod(mulmod(r, x, p), *it, p);
    return r;
}

}  // namespace

// ---- primality -----------------------------------------------------------

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// ---- irreducibility sieve --------------------------------------------------

bool is_irreducible_mod_p(const std::vector<u64>& poly, u64 p) {
    PVec f = poly;
    trim(f);
    int k = pdeg(f);
    if (k < 1) return false;
    if (k == 1) return true;
    // linear factors <=> roots
    for (u64 x = 0; x < p; ++x)
        if (peval(f, x, p) == 0) return false;
    if (k <= 3) return true;
    // trial division by monic polynomials of degree 2..k/2 (reducible
    // divisors are fine: any factor of f exposes one)
    double count = 0;
    for (int d = 2; d <= k / 2; ++d) count += std::pow(static_cast<double>(p), d);
    if (count > (1 << 22))
        throw math_error("extension field too large for the brute-force factor check");
    for (int d = 2; d <= k / 2; ++d) {
        mpz_class total;
        mpz_ui_pow_ui(total.get_mpz_t(), p, d);
        for (mpz_class idx = 0; idx < total; ++idx) {
            PVec g(d + 1, 0);
            g[d] = 1;
            mpz_class rest = idx;
            for (int i = 0; i < d; ++i) {
                mpz_class digit = rest % p;
                g[i] = digit.get_ui();
                rest /= p;
            }
            if (pmod(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::vector<u64> smallest_irreducible(u64 p, int k) {
    if (k < 1 || k > 16) throw math_error("extension degree must be in 1..16");
    mpz_class total;
    mpz_ui_pow_ui(total.get_mpz_t(), p, k);
    for (mpz_class code = 0; code < total; ++code) {
        PVec f(k + 1, 0);
        f[k] = 1;
        // code encodes (c_{k-1}, ..., c_0) most significant first
        mpz_class rest = code;
        for (int i = 0; i < k; ++i) {
            mpz_class digit = rest % p;
            f[i] = digit.get_ui();
            rest /= p;
        }
        if (is_irreducible_mod_p(f, p)) return f;
    }
    throw math_error("no irreducible polynomial found (unreachable for prime p)");
}

// ---- Field ---------------------------------------------------------------

Field Field::rationals() {
    Field f;
    f.kind_ = FieldKind::rationals;
    return f;
}

Field Field::prime(u64 p) {
    if (p >= kMaxPrime) throw math_error("prime modulus must be < 2^62");
    if (!is_prime_u64(p)) throw math_error("modulus " + std::to_string(p) + " is not prime");
    Field f;
    f.kind_ = FieldKind::prime;
    f.p_ = p;
    return f;
}

Field Field::extension(u64 p, int k) { return extension_with_modulus(p, smallest_irreducible(p, k)); }

Field Field::extension_with_modulus(u64 p, std::vector<u64> modulus) {
    if (!is_prime_u64(p)) throw math_error("characteristic must be prime");
    while (!modulus.empty() && modulus.back() == 0) modulus.pop_back();
    int k = static_cast<int>(modulus.size()) - 1;
    if (k < 1 || k > 16) throw math_error("extension degree must be in 1..16");
    if (modulus.back() != 1) throw math_error("modulus must be monic");
    for (auto& c : modulus) c %= p;
    if (!is_irreducible_mod_p(modulus, p)) throw math_error("modulus is not irreducible over F_p");
    Field f;
    f.kind_ = FieldKind::extension;
    f.p_ = p;
    f.ext_ = std::make_shared<ExtContext>(ExtContext{p, k, std::move(modulus)});
    return f;
}

Field Field::parse(const std::string& text) {
    if (text == "Q" || text == "q") return rationals();
    auto starts = [&](const char* pre) { return text.rfind(pre, 0) == 0; };
    try {
        if (starts("Fp:")) return prime(std::stoull(text.substr(3)));
        if (starts("F2k:")) return extension(2, std::stoi(text.substr(4)));
        if (starts("Fpk:")) {
            auto rest = text.substr(4);
            auto colon = rest.find(':');
            if (colon == std::string::npos) throw math_error("expected Fpk:<p>:<k>");
            return extension(std::stoull(rest.substr(0, colon)), std::stoi(rest.substr(colon + 1)));
        }
    } catch (const std::invalid_argument&) {
        throw math_error("malformed field descriptor: " + text);
    } catch (const std::out_of_range&) {
        throw math_error("malformed field descriptor: " + text);
    }
    throw math_error("unknown field descriptor: " + text + " (expected Q, Fp:<p>, F2k:<k> or Fpk:<p>:<k>)");
}

std::string Field::to_string() const {
    switch (kind_) {
        case FieldKind::rationals:
            return "Q";
        case FieldKind::prime:
            return "Fp:" + std::to_string(p_);
        case FieldKind::extension:
            if (p_ == 2) return "F2k:" + std::to_string(ext_->k);
            return "Fpk:" + std::to_string(p_) + ":" + std::to_string(ext_->k);
    }
    return "?";
}

u64 Field::prime() const {
    if (kind_ == FieldKind::rationals) throw math_error("rationals have no prime modulus");
    return p_;
}

int Field::extension_degree() const {
    if (kind_ == FieldKind::extension) return ext_->k;
    if (kind_ == FieldKind::prime) return 1;
    throw math_error("rationals have no extension degree");
}

const std::vector<u64>& Field::modulus() const {
    if (kind_ != FieldKind::extension) throw math_error("not an extension field");
    return ext_->modulus;
}

std::optional<mpz_class> Field::size() const {
    if (kind_ == FieldKind::rationals) return std::nullopt;
    mpz_class s;
    mpz_ui_pow_ui(s.get_mpz_t(), p_, kind_ == FieldKind::prime ? 1 : ext_->k);
    return s;
}

bool Field::operator==(const Field& other) const {
    if (kind_ != other.kind_) return false;
    if (kind_ == FieldKind::rationals) return true;
    if (p_ != other.p_) return false;
    if (kind_ == FieldKind::prime) return true;
    return ext_->modulus == other.ext_->modulus;
}

FieldElement Field::zero() const { return from_int(0); }
FieldElement Field::one() const { return from_int(1); }

FieldElement Field::from_int(long long v) const {
    switch (kind_) {
        case FieldKind::rationals:
            return FieldElement(mpq_class(static_cast<long>(v)));
        case FieldKind::prime: {
            long long r = v % static_cast<long long>(p_);
            if (r < 0) r += static_cast<long long>(p_);
            return FieldElement(static_cast<u64>(r), p_);
        }
        case FieldKind::extension: {
            long long r = v % static_cast<long long>(p_);
            if (r < 0) r += static_cast<long long>(p_);
            std::vector<u64> c(ext_->k, 0);
            c[0] = static_cast<u64>(r);
            return FieldElement(ext_, std::move(c));
        }
    }
    throw math_error("bad field");
}

FieldElement Field::from_rational(const mpq_class& q) const {
    if (kind_ == FieldKind::rationals) {
        mpq_class c = q;
        c.canonicalize();
        return FieldElement(std::move(c));
    }
    mpz_class num = q.get_num(), den = q.get_den();
    mpz_class pz(static_cast<unsigned long>(p_));
    mpz_class dmod = den % pz;
    if (dmod == 0) throw math_error("coefficient " + q.get_str() + " not representable: denominator divisible by " + std::to_string(p_));
    mpz_class nmod = num % pz;
    if (nmod < 0) nmod += pz;
    u64 n = nmod.get_ui();
    u64 d = dmod.get_ui();
    u64 v = mulmod(n, invmod(d, p_), p_);
    if (kind_ == FieldKind::prime) return FieldElement(v, p_);
    std::vector<u64> c(ext_->k, 0);
    c[0] = v;
    return FieldElement(ext_, std::move(c));
}

FieldElement Field::parse_element(const std::string& text) const {
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw math_error("malformed field element literal: " + text);
    q.canonicalize();
    return from_rational(q);
}

FieldElement Field::element_at(const mpz_class& index) const {
    switch (kind_) {
        case FieldKind::rationals:
            throw math_error("element_at is defined for finite fields only");
        case FieldKind::prime: {
            if (index < 0 || index >= mpz_class(static_cast<unsigned long>(p_)))
                throw math_error("element index out of range");
            return FieldElement(mpz_class(index).get_ui(), p_);
        }
        case FieldKind::extension: {
            std::vector<u64> c(ext_->k, 0);
            mpz_class rest = index;
            for (int i = 0; i < ext_->k; ++i) {
                mpz_class digit = rest % p_;
                c[i] = digit.get_ui();
                rest /= p_;
            }
            if (rest != 0) throw math_error("element index out of range");
            return FieldElement(ext_, std::move(c));
        }
    }
    throw math_error("bad field");
}

FieldElement Field::random(Rng& rng) const {
    switch (kind_) {
        case FieldKind::rationals:
            return from_int(rng.range(-9, 9));
        case FieldKind::prime:
            return FieldElement(rng.below(p_), p_);
        case FieldKind::extension: {
            std::vector<u64> c(ext_->k);
            for (auto& x : c) x = rng.below(p_);
            return FieldElement(ext_, std::move(c));
        }
    }
    throw math_error("bad field");
}

FieldElement Field::random_nonzero(Rng& rng) const {
    for (;;) {
        FieldElement e = random(rng);
        if (!e.is_zero()) return e;
    }
}

// ---- FieldElement ----------------------------------------------------------

FieldKind FieldElement::kind() const noexcept {
    if (std::holds_alternative<mpq_class>(rep_)) return FieldKind::rationals;
    if (std::holds_alternative<FpRepr>(rep_)) return FieldKind::prime;
    return FieldKind::extension;
}

Field FieldElement::field() const {
    switch (kind()) {
        case FieldKind::rationals:
            return Field::rationals();
        case FieldKind::prime:
            return Field::prime(std::get<FpRepr>(rep_).p);
        case FieldKind::extension: {
            const auto& e = std::get<ExtRepr>(rep_);
            Field f;
            f.kind_ = FieldKind::extension;
            f.p_ = e.ctx->p;
            f.ext_ = e.ctx;
            return f;
        }
    }
    throw math_error("bad element");
}

bool FieldElement::is_zero() const {
    switch (kind()) {
        case FieldKind::rationals:
            return std::get<mpq_class>(rep_) == 0;
        case FieldKind::prime:
            return std::get<FpRepr>(rep_).v == 0;
        case FieldKind::extension: {
            for (u64 c : std::get<ExtRepr>(rep_).c)
                if (c) return false;
            return true;
        }
    }
    return false;
}

bool FieldElement::is_one() const {
    switch (kind()) {
        case FieldKind::rationals:
            return std::get<mpq_class>(rep_) == 1;
        case FieldKind::prime: {
            const auto& r = std::get<FpRepr>(rep_);
            return r.v == 1 % r.p;
        }
        case FieldKind::extension: {
            const auto& e = std::get<ExtRepr>(rep_);
            if (e.c[0] != 1 % e.ctx->p) return false;
            for (std::size_t i = 1; i < e.c.size(); ++i)
                if (e.c[i]) return false;
            return true;
        }
    }
    return false;
}

namespace {
void check_same(const FieldElement& a, const FieldElement& b) {
    if (a.kind() != b.kind()) throw math_error("field mismatch");
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(*this, o);
    switch (kind()) {
        case FieldKind::rationals:
            return FieldElement(mpq_class(std::get<mpq_class>(rep_) + std::get<mpq_class>(o.rep_)));
        case FieldKind::prime: {
            const auto &a = std::get<FpRepr>(rep_), &b = std::get<FpRepr>(o.rep_);
            if (a.p != b.p) throw math_error("field mismatch");
            return FieldElement(addmod(a.v, b.v, a.p), a.p);
        }
        case FieldKind::extension: {
            const auto &a = std::get<ExtRepr>(rep_), &b = std::get<ExtRepr>(o.rep_);
            if (a.ctx->modulus != b.ctx->modulus || a.ctx->p != b.ctx->p) throw math_error("field mismatch");
            std::vector<u64> c(a.c.size());
            for (std::size_t i = 0; i < c.size(); ++i) c[i] = addmod(a.c[i], b.c[i], a.ctx->p);
            return FieldElement(a.ctx, std::move(c));
        }
    }
    throw math_error("bad element");
}

FieldElement FieldElement::operator-(const FieldElement& o) const { return *this + (-o); }

FieldElement FieldElement::operator-() const {
    switch (kind()) {
        case FieldKind::rationals:
            return FieldElement(mpq_class(-std::get<mpq_class>(rep_)));
        case FieldKind::prime: {
            const auto& a = std::get<FpRepr>(rep_);
            return FieldElement(a.v == 0 ? 0 : a.p - a.v, a.p);
        }
        case FieldKind::extension: {
            const auto& a = std::get<ExtRepr>(rep_);
            std::vector<u64> c(a.c.size());
            for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.c[i] == 0 ? 0 : a.ctx->p - a.c[i];
            return FieldElement(a.ctx, std::move(c));
        }
    }
    throw math_error("bad element");
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(*this, o);
    switch (kind()) {
        case FieldKind::rationals:
            return FieldElement(mpq_class(std::get<mpq_class>(rep_) * std::get<mpq_class>(o.rep_)));
        case FieldKind::prime: {
            const auto &a = std::get<FpRepr>(rep_), &b = std::get<FpRepr>(o.rep_);
            if (a.p != b.p) throw math_error("field mismatch");
            return FieldElement(mulmod(a.v, b.v, a.p), a.p);
        }
        case FieldKind::extension: {
            const auto &a = std::get<ExtRepr>(rep_), &b = std::get<ExtRepr>(o.rep_);
            if (a.ctx->modulus != b.ctx->modulus || a.ctx->p != b.ctx->p) throw math_error("field mismatch");
            PVec prod = pmul(a.c, b.c, a.ctx->p);
            prod = pmod(std::move(prod), a.ctx->modulus, a.ctx->p);
            prod.resize(a.ctx->k, 0);
            return FieldElement(a.ctx, std::move(prod));
        }
    }
    throw math_error("bad element");
}

FieldElement FieldElement::inverse() const {
    switch (kind()) {
        case FieldKind::rationals: {
            const auto& q = std::get<mpq_class>(rep_);
            if (q == 0) throw math_error("division by zero");
            return FieldElement(mpq_class(1 / q));
        }
        case FieldKind::prime: {
            const auto& a = std::get<FpRepr>(rep_);
            return FieldElement(invmod(a.v, a.p), a.p);
        }
        case FieldKind::extension: {
            const auto& a = std::get<ExtRepr>(rep_);
            PVec inv = pinv(a.c, a.ctx->modulus, a.ctx->p);
            inv.resize(a.ctx->k, 0);
            return FieldElement(a.ctx, std::move(inv));
        }
    }
    throw math_error("bad element");
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inverse(); }

FieldElement FieldElement::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElement base = *this;
    FieldElement acc = field().one();
    unsigned long long ue = static_cast<unsigned long long>(e);
    while (ue) {
        if (ue & 1) acc = acc * base;
        base = base * base;
        ue >>= 1;
    }
    return acc;
}

FieldElement FieldElement::pow(const mpz_class& e) const {
    if (e < 0) return inverse().pow(mpz_class(-e));
    FieldElement base = *this;
    FieldElement acc = field().one();
    mpz_class ue = e;
    std::size_t bits = mpz_sizeinbase(ue.get_mpz_t(), 2);
    for (std::size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(ue.get_mpz_t(), i)) acc = acc * base;
        base = base * base;
    }
    return acc;
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (kind() != o.kind()) return false;
    switch (kind()) {
        case FieldKind::rationals:
            return std::get<mpq_class>(rep_) == std::get<mpq_class>(o.rep_);
        case FieldKind::prime: {
            const auto &a = std::get<FpRepr>(rep_), &b = std::get<FpRepr>(o.rep_);
            return a.p == b.p && a.v == b.v;
        }
        case FieldKind::extension: {
            const auto &a = std::get<ExtRepr>(rep_), &b = std::get<ExtRepr>(o.rep_);
            return a.ctx->p == b.ctx->p && a.ctx->modulus == b.ctx->modulus && a.c == b.c;
        }
    }
    return false;
}

std::string FieldElement::to_string() const {
    switch (kind()) {
        case FieldKind::rationals:
            return std::get<mpq_class>(rep_).get_str();
        case FieldKind::prime:
            return std::to_string(std::get<FpRepr>(rep_).v);
        case FieldKind::extension: {
            const auto& e = std::get<ExtRepr>(rep_);
            std::string s = "[";
            for (std::size_t i = 0; i < e.c.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(e.c[i]);
            }
            return s + "]";
        }
    }
    return "?";
}

const mpq_class& FieldElement::rational() const {
    if (kind() != FieldKind::rationals) throw math_error("not a rational");
    return std::get<mpq_class>(rep_);
}

u64 FieldElement::residue() const {
    if (kind() != FieldKind::prime) throw math_error("not a prime-field residue");
    return std::get<FpRepr>(rep_).v;
}

const std::vector<u64>& FieldElement::ext_coeffs() const {
    if (kind() != FieldKind::extension) throw math_error("not an extension-field element");
    return std::get<ExtRepr>(rep_).c;
}

std::optional<FieldElement> FieldElement::sqrt() const {
    Field f = field();
    switch (kind()) {
        case FieldKind::rationals: {
            const mpq_class& q = std::get<mpq_class>(rep_);
            if (q < 0) return std::nullopt;
            mpz_class num = q.get_num(), den = q.get_den();
            if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0)
                return std::nullopt;
            mpz_class rn, rd;
            mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
            mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
            return FieldElement(mpq_class(rn) / mpq_class(rd));
        }
        case FieldKind::prime:
        case FieldKind::extension: {
            if (is_zero()) return f.zero();
            if (f.characteristic() == 2) {
                // squaring is a bijection: sqrt(a) = a^(q/2)
                mpz_class q = *f.size();
                return pow(mpz_class(q / 2));
            }
            mpz_class q = *f.size();
            mpz_class half = (q - 1) / 2;
            if (!(pow(half) == f.one())) return std::nullopt;  // non-residue
            // Tonelli-Shanks in F_q
            mpz_class t = q - 1;
            unsigned long s = 0;
            while (mpz_even_p(t.get_mpz_t())) {
                t /= 2;
                ++s;
            }
            // deterministic scan for a non-residue
            FieldElement z = f.zero();
            for (mpz_class i = 2; i < q; ++i) {
                z = f.element_at(i);
                if (!z.is_zero() && !(z.pow(half) == f.one())) break;
            }
            FieldElement c = z.pow(t);
            FieldElement r = pow(mpz_class((t + 1) / 2));
            FieldElement lam = pow(t);
            unsigned long m = s;
            while (!lam.is_one()) {
                unsigned long i = 0;
                FieldElement probe = lam;
                while (!probe.is_one()) {
                    probe = probe * probe;
                    ++i;
                }
                FieldElement b = c;
                for (unsigned long j = 0; j + i + 1 < m; ++j) b = b * b;
                r = r * b;
                c = b * b;
                lam = lam * c;
                m = i;
            }
            return r;
        }
    }
    return std::nullopt;
}

}  // namespace msf
