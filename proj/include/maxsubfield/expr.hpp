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

#ifndef MAXSUBFIELD_EXPR_HPP
#define MAXSUBFIELD_EXPR_HPP

#include <concepts>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "maxsubfield/field.hpp"

namespace msf {

/// One letter x_var^exp of a group word. var is 1-based, exp nonzero.
struct Letter {
    int var;
    long long exp;
    bool operator==(const Letter&) const = default;
};

/// Freely reduced group word (adjacent letters always have distinct
/// variables; the empty word is the identity).
class Word {
   public:
    Word() = default;
    /// Free reduction of an arbitrary letter sequence; the result is the
    /// unique reduced form.
    static Word reduced(const std::vector<Letter>& letters);

    const std::vector<Letter>& letters() const noexcept { return letters_; }
    bool is_identity() const noexcept { return letters_.empty(); }
    int max_var() const;
    /// Sum of exponents of the given variable (the image of the word in the
    /// free abelian quotient).
    long long exponent_sum(int var) const;
    /// Total letter weight sum |exp|.
    long long weight() const;

    Word operator*(const Word& o) const;
    Word inverse() const;
    Word pow(long long e) const;

    bool operator==(const Word& o) const { return letters_ == o.letters_; }
    /// Canonical total order: letter count first, then (var, exp) tuples.
    static bool less(const Word& a, const Word& b);

    std::string to_string() const;  // "x1^2*x2^-1"; "1" for the identity

   private:
    std::vector<Letter> letters_;
};

Word reduce_word(const Word& w);  // identity on the invariant representation
Word reduce_word(const std::vector<Letter>& letters);
bool is_trivial_word(const Word& w);

/// Coefficient-word pair of a Laurent polynomial.
struct Term {
    FieldElement coeff;
    Word word;
};

/// Noncommutative Laurent polynomial: like-terms collected, no zero
/// coefficients, terms in the canonical word order. Structural equality is
/// semantic equality.
class LaurentExpr {
   public:
    LaurentExpr() : field_(Field::rationals()) {}
    explicit LaurentExpr(const Field& field) : field_(field) {}

    /// Grammar: sums/differences of '*'-separated factors; factors are
    /// rational literals, variables x<digits>, or parenthesized
    /// subexpressions, optionally raised to nonzero integer powers.
    /// Juxtaposition is not multiplication. See docs/grammar.md.
    static LaurentExpr parse(const std::string& text, const Field& field);
    static LaurentExpr from_terms(const Field& field, std::vector<Term> terms);
    static LaurentExpr monomial(const Field& field, const FieldElement& c, const Word& w);

    const Field& field() const noexcept { return field_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    int max_var() const;
    /// All exponents nonnegative (element of the free algebra rather than
    /// the group algebra).
    bool is_polynomial() const;
    /// Single term with coefficient one: the expression is a group word.
    bool is_word() const;
    const Word& word() const;  // requires is_word()

    LaurentExpr operator+(const LaurentExpr& o) const;
    LaurentExpr operator-(const LaurentExpr& o) const;
    LaurentExpr operator*(const LaurentExpr& o) const;
    LaurentExpr operator-() const;
    LaurentExpr scale(const FieldElement& c) const;
    /// Negative exponents require a single-term (monomial) base.
    LaurentExpr pow(long long e) const;

    /// Coefficient embedding into a finite field (Q -> F_p reduction for
    /// denominators prime to p); identity when fields match.
    LaurentExpr embed(const Field& target) const;

    bool operator==(const LaurentExpr& o) const;
    std::string to_string() const;  // canonical printer; parse . print = id

   private:
    Field field_;
    std::vector<Term> terms_;
};

/// A non-central multilinear polynomial sum_{sigma} a_sigma
/// x_{sigma(1)}...x_{sigma(m)}, stored as permutation |-> coefficient.
class MultilinearTable {
   public:
    struct Rejection {
        std::string reason;
        std::string offending_term;
    };

    /// Succeeds iff every term of f is a product of each of x_1..x_m exactly
    /// once with exponent one (and f is nonzero).
    static std::variant<MultilinearTable, Rejection> classify(const LaurentExpr& f, int m);

    int arity() const noexcept { return m_; }
    const Field& field() const noexcept { return field_; }
    /// (permutation images sigma(1)..sigma(m), coefficient), sorted.
    const std::vector<std::pair<std::vector<int>, FieldElement>>& entries() const noexcept { return entries_; }
    LaurentExpr to_expr() const;

   private:
    int m_ = 0;
    Field field_;
    std::vector<std::pair<std::vector<int>, FieldElement>> entries_;
};

/// Anything expressions evaluate over: matrix rings, quaternion algebras.
template <class A>
concept AlgebraElement = requires(const A& x, const FieldElement& c) {
    { x + x } -> std::convertible_to<A>;
    { x - x } -> std::convertible_to<A>;
    { x * x } -> std::convertible_to<A>;
    { x.scale(c) } -> std::convertible_to<A>;
    { x.inverse() } -> std::convertible_to<A>;
    { x.ring_one() } -> std::convertible_to<A>;
    { x.ring_zero() } -> std::convertible_to<A>;
};

template <AlgebraElement A>
A alg_pow(const A& base, long long e) {
    if (e < 0) return alg_pow(base.inverse(), -e);
    A acc = base.ring_one();
    A b = base;
    unsigned long long ue = static_cast<unsigned long long>(e);
    while (ue) {
        if (ue & 1) acc = acc * b;
        b = b * b;
        ue >>= 1;
    }
    return acc;
}

/// Value of a word at the assignment (1-based variables index the span).
template <AlgebraElement A>
A evaluate(const Word& w, std::span<const A> assignment) {
    if (assignment.empty()) throw math_error("evaluation needs at least one element (for the shape of 1)");
    if (w.max_var() > static_cast<int>(assignment.size()))
        throw math_error("arity mismatch: word uses x" + std::to_string(w.max_var()) + " but " +
                         std::to_string(assignment.size()) + " values were given");
    A acc = assignment[0].ring_one();
    for (const Letter& l : w.letters()) acc = acc * alg_pow(assignment[l.var - 1], l.exp);
    return acc;
}

/// Value sum c_i a_{i_1}^{n_1}... of a Laurent polynomial; elements at
/// negatively-exponentiated variables must be invertible.
template <AlgebraElement A>
A evaluate(const LaurentExpr& f, std::span<const A> assignment) {
    if (assignment.empty()) throw math_error("evaluation needs at least one element (for the shape of 0)");
    if (f.max_var() > static_cast<int>(assignment.size()))
        throw math_error("arity mismatch: expression uses x" + std::to_string(f.max_var()) + " but " +
                         std::to_string(assignment.size()) + " values were given");
    A acc = assignment[0].ring_zero();
    for (const Term& t : f.terms()) acc = acc + evaluate(t.word, assignment).scale(t.coeff);
    return acc;
}

template <AlgebraElement A>
A evaluate(const MultilinearTable& f, std::span<const A> assignment) {
    if (static_cast<int>(assignment.size()) < f.arity()) throw math_error("arity mismatch");
    A acc = assignment[0].ring_zero();
    for (const auto& [perm, coeff] : f.entries()) {
        A prod = assignment[perm[0] - 1];
        for (std::size_t i = 1; i < perm.size(); ++i) prod = prod * assignment[perm[i] - 1];
        acc = acc + prod.scale(coeff);
    }
    return acc;
}

template <AlgebraElement A>
A evaluate(const Word& w, const std::vector<A>& assignment) {
    return evaluate(w, std::span<const A>(assignment));
}
template <AlgebraElement A>
A evaluate(const LaurentExpr& f, const std::vector<A>& assignment) {
    return evaluate(f, std::span<const A>(assignment));
}
template <AlgebraElement A>
A evaluate(const MultilinearTable& f, const std::vector<A>& assignment) {
    return evaluate(f, std::span<const A>(assignment));
}

}  // namespace msf

#endif
