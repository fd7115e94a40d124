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

#include "maxsubfield/poly.hpp"

#include <algorithm>

namespace msf {

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly::Poly(const Field& field, std::vector<FieldElement> coeffs) : field_(field), c_(std::move(coeffs)) { trim(); }

Poly Poly::x(const Field& field) { return Poly(field, {field.zero(), field.one()}); }

Poly Poly::constant(const FieldElement& c) { return Poly(c.field(), {c}); }

Poly Poly::from_roots(const Field& field, const std::vector<FieldElement>& roots) {
    Poly p(field, {field.one()});
    for (const auto& r : roots) p = p * Poly(field, {-r, field.one()});
    return p;
}

FieldElement Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return field_.zero();
    return c_[i];
}

Poly Poly::operator+(const Poly& o) const {
    if (field_ != o.field_) throw math_error("polynomial field mismatch");
    std::vector<FieldElement> r(std::max(c_.size(), o.c_.size()), field_.zero());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    return Poly(field_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    std::vector<FieldElement> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return Poly(field_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    if (field_ != o.field_) throw math_error("polynomial field mismatch");
    if (is_zero() || o.is_zero()) return Poly(field_);
    std::vector<FieldElement> r(c_.size() + o.c_.size() - 1, field_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    }
    return Poly(field_, std::move(r));
}

Poly Poly::scale(const FieldElement& c) const {
    std::vector<FieldElement> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * c;
    return Poly(field_, std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw math_error("polynomial division by zero");
    if (field_ != d.field_) throw math_error("polynomial field mismatch");
    Poly rem = *this;
    std::vector<FieldElement> q(degree() >= d.degree() ? degree() - d.degree() + 1 : 0, field_.zero());
    FieldElement lead_inv = d.c_.back().inverse();
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        int shift = rem.degree() - d.degree();
        FieldElement c = rem.c_.back() * lead_inv;
        q[shift] = c;
        for (int i = 0; i <= d.degree(); ++i)
            rem.c_[i + shift] = rem.c_[i + shift] - c * d.c_[i];
        rem.trim();
    }
    return {Poly(field_, std::move(q)), rem};
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scale(c_.back().inverse());
}

Poly Poly::pow_mod(const mpz_class& e, const Poly& modulus) const {
    if (e < 0) throw math_error("pow_mod needs a nonnegative exponent");
    Poly base = *this % modulus;
    Poly acc = Poly(field_, {field_.one()});
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return acc;
    for (std::size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i)) acc = (acc * base) % modulus;
        base = (base * base) % modulus;
    }
    return acc;
}

FieldElement Poly::eval(const FieldElement& x) const {
    FieldElement r = field_.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

Matrix Poly::eval_matrix(const Matrix& a) const {
    Matrix r = Matrix::zero(a.size(), a.field());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        r = r * a;
        for (int i = 0; i < a.size(); ++i) r.at(i, i) = r.at(i, i) + *it;
    }
    return r;
}

bool Poly::operator==(const Poly& o) const {
    if (field_ != o.field_ || c_.size() != o.c_.size()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!(c_[i] == o.c_[i])) return false;
    return true;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        FieldElement c = coeff(i);
        if (c.is_zero()) continue;
        std::string cs = c.to_string();
        bool neg = !cs.empty() && cs[0] == '-';
        if (s.empty()) {
            s += neg ? "-" : "";
        } else {
            s += neg ? " - " : " + ";
        }
        if (neg) cs = cs.substr(1);
        if (i == 0) {
            s += cs;
        } else {
            if (cs != "1") s += cs + "*";
            s += i == 1 ? "x" : "x^" + std::to_string(i);
        }
    }
    return s;
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        Poly r2 = r0 % r1;
        r0 = r1;
        r1 = r2;
    }
    return r0.monic();
}

Poly lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.field());
    Poly g = gcd(a, b);
    return ((a * b) / g).monic();
}

// ---- characteristic polynomial (Berkowitz) ---------------------------------

Poly char_poly(const Matrix& a) {
    const Field& f = a.field();
    int n = a.size();
    // coefficients of det(xI - A_r), leading first; start with char poly of
    // the empty matrix
    std::vector<FieldElement> c = {f.one()};
    for (int r = 1; r <= n; ++r) {
        // Toeplitz column for the r-th leading principal submatrix:
        // t_0 = 1, t_1 = -a_rr, t_i = -(R . B^{i-2} . S)
        std::vector<FieldElement> t(r + 1, f.zero());
        t[0] = f.one();
        t[1] = -a.at(r - 1, r - 1);
        std::vector<FieldElement> v(r - 1);  // iterated B^i . S
        for (int i = 0; i < r - 1; ++i) v[i] = a.at(i, r - 1);
        for (int i = 2; i <= r; ++i) {
            FieldElement dot = f.zero();
            for (int j = 0; j < r - 1; ++j) dot = dot + a.at(r - 1, j) * v[j];
            t[i] = -dot;
            if (i < r) {
                std::vector<FieldElement> nv(r - 1, f.zero());
                for (int x = 0; x < r - 1; ++x)
                    for (int y = 0; y < r - 1; ++y) nv[x] = nv[x] + a.at(x, y) * v[y];
                v = std::move(nv);
            }
        }
        // c <- T * c (lower-triangular Toeplitz convolution)
        std::vector<FieldElement> nc(r + 1, f.zero());
        for (int i = 0; i <= r; ++i)
            for (int j = 0; j < static_cast<int>(c.size()) && j <= i; ++j)
                nc[i] = nc[i] + t[i - j] * c[j];
        c = std::move(nc);
    }
    std::reverse(c.begin(), c.end());  // to ascending order
    return Poly(f, std::move(c));
}

// ---- minimal polynomial (Krylov on the flattened matrix space) -------------

Poly min_poly(const Matrix& a) {
    const Field& f = a.field();
    int n = a.size();
    if (n == 0) return Poly(f, {f.one()});
    int dim = n * n;
    // echelon rows: reduced flattened power | expression in original powers
    std::vector<std::vector<FieldElement>> rows;       // reduced vectors
    std::vector<std::vector<FieldElement>> combos;     // same length as #powers so far
    std::vector<int> pivots;
    Matrix power = Matrix::identity(n, f);
    for (int k = 0;; ++k) {
        std::vector<FieldElement> v(dim, f.zero());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) v[i * n + j] = power.at(i, j);
        std::vector<FieldElement> combo(k + 1, f.zero());
        combo[k] = f.one();
        // reduce against existing rows
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const FieldElement& lead = v[pivots[r]];
            if (lead.is_zero()) continue;
            FieldElement factor = lead;  // rows are pivot-normalized
            for (int i = 0; i < dim; ++i) v[i] = v[i] - factor * rows[r][i];
            for (std::size_t i = 0; i < combos[r].size(); ++i)
                combo[i] = combo[i] - factor * combos[r][i];
        }
        int pivot = -1;
        for (int i = 0; i < dim; ++i) {
            if (!v[i].is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) {
            // A^k = -(sum of lower combo terms); combo gives the annihilator
            return Poly(f, std::move(combo)).monic();
        }
        FieldElement inv = v[pivot].inverse();
        for (int i = 0; i < dim; ++i) v[i] = v[i] * inv;
        for (auto& ci : combo) ci = ci * inv;
        rows.push_back(std::move(v));
        combos.push_back(std::move(combo));
        pivots.push_back(pivot);
        power = power * a;
        if (k > dim + 1) throw math_error("min_poly failed to terminate");  // unreachable
    }
}

DegreeCertificate algebraic_degree(const Matrix& a) {
    Poly m = min_poly(a);
    return DegreeCertificate{m, m.degree()};
}

// ---- root extraction --------------------------------------------------------

namespace {

bool element_less(const FieldElement& a, const FieldElement& b) {
    switch (a.kind()) {
        case FieldKind::rationals:
            return a.rational() < b.rational();
        case FieldKind::prime:
            return a.residue() < b.residue();
        case FieldKind::extension: {
            const auto& x = a.ext_coeffs();
            const auto& y = b.ext_coeffs();
            for (std::size_t i = x.size(); i-- > 0;) {
                if (x[i] != y[i]) return x[i] < y[i];
            }
            return false;
        }
    }
    return false;
}

// roots of a squarefree product of distinct linear factors over a finite field
void split_linear_factors(const Poly& g, std::vector<FieldElement>& out) {
    const Field& f = g.field();
    if (g.degree() <= 0) return;
    if (g.degree() == 1) {
        out.push_back(-(g.coeff(0) / g.coeff(1)));
        return;
    }
    mpz_class q = *f.size();
    // deterministic sequence of splitting elements
    for (mpz_class idx = 1;; ++idx) {
        if (idx >= q) idx = 1;  // wrap; a split always exists
        FieldElement delta = f.element_at(idx);
        Poly h(f);
        if (f.characteristic() != 2) {
            // gcd(g, (x + delta)^((q-1)/2) - 1)
            Poly shifted(f, {delta, f.one()});
            Poly powed = shifted.pow_mod((q - 1) / 2, g);
            h = gcd(g, powed - Poly(f, {f.one()}));
        } else {
            // gcd(g, Tr(delta * x)) with the absolute trace map
            unsigned long m = mpz_sizeinbase(q.get_mpz_t(), 2) - 1;  // q = 2^m
            Poly term(f, {f.zero(), delta});
            Poly tr(f);
            for (unsigned long i = 0; i < m; ++i) {
                tr = (tr + term) % g;
                term = (term * term) % g;
            }
            h = gcd(g, tr);
        }
        if (h.degree() > 0 && h.degree() < g.degree()) {
            split_linear_factors(h, out);
            split_linear_factors((g / h).monic(), out);
            return;
        }
    }
}

void rational_roots(const Poly& p, std::vector<FieldElement>& out) {
    const Field& f = p.field();
    Poly w = p;
    // strip zero roots
    while (!w.is_zero() && w.coeff(0).is_zero()) {
        out.push_back(f.zero());
        w = w / Poly::x(f);
    }
    if (w.degree() < 1) {
        return;
    }
    if (w.degree() == 1) {
        out.push_back(-(w.coeff(0) / w.coeff(1)));
        return;
    }
    if (w.degree() == 2) {
        // exact quadratic formula
        FieldElement a = w.coeff(2), b = w.coeff(1), c = w.coeff(0);
        FieldElement disc = b * b - f.from_int(4) * a * c;
        auto root = disc.sqrt();
        if (!root) return;
        FieldElement two_a_inv = (f.from_int(2) * a).inverse();
        out.push_back((-b + *root) * two_a_inv);
        if (!root->is_zero()) out.push_back((-b - *root) * two_a_inv);
        return;
    }
    // degree >= 3: primitive integer polynomial, candidate roots n/d with
    // n | constant, d | leading (divisors enumerated up to a fixed bound)
    mpz_class lcm_den = 1;
    for (const auto& c : w.coeffs()) lcm_den = lcm(lcm_den, c.rational().get_den());
    std::vector<mpz_class> ic;
    for (const auto& c : w.coeffs()) ic.push_back(mpz_class(c.rational() * lcm_den));
    mpz_class a0 = abs(ic.front()), ad = abs(ic.back());
    const unsigned long kDivisorBound = 100000;
    auto divisors = [&](const mpz_class& v) {
        std::vector<mpz_class> ds;
        for (mpz_class d = 1; d * d <= v && d <= kDivisorBound; ++d) {
            if (v % d == 0) {
                ds.push_back(d);
                ds.push_back(v / d);
            }
        }
        return ds;
    };
    Poly rem = w;
    for (const auto& n : divisors(a0)) {
        for (const auto& d : divisors(ad)) {
            for (int sign = 1; sign >= -1; sign -= 2) {
                mpq_class cand(sign * n, d);
                cand.canonicalize();
                FieldElement r = f.from_rational(cand);
                while (rem.degree() >= 1 && rem.eval(r).is_zero()) {
                    out.push_back(r);
                    rem = rem / Poly(f, {-r, f.one()});
                }
            }
        }
    }
}

}  // namespace

std::vector<FieldElement> poly_roots(const Poly& p) {
    std::vector<FieldElement> out;
    if (p.is_zero() || p.degree() < 1) return out;
    const Field& f = p.field();
    if (f.kind() == FieldKind::rationals) {
        rational_roots(p, out);
    } else {
        Poly w = p.monic();
        while (!w.is_zero() && w.degree() >= 1 && w.coeff(0).is_zero()) {
            out.push_back(f.zero());
            w = w / Poly::x(f);
        }
        if (w.degree() >= 1) {
            // distinct roots in F_q: gcd(w, x^q - x)
            mpz_class q = *f.size();
            Poly xq = Poly::x(f).pow_mod(q, w);
            Poly g = gcd(w, xq - Poly::x(f));
            split_linear_factors(g, out);
        }
    }
    // dedupe + canonical order
    std::sort(out.begin(), out.end(), element_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace msf
