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

#include "maxsubfield/expr.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace msf {

// ---- Word -------------------------------------------------------------------

Word Word::reduced(const std::vector<Letter>& letters) {
    // stack pass: merging with the top is complete, since a pop re-exposes
    // the previous letter for the next input letter to merge against
    Word w;
    for (const Letter& l : letters) {
        if (l.exp == 0) continue;
        if (l.var < 1) throw math_error("variable index must be >= 1");
        if (!w.letters_.empty() && w.letters_.back().var == l.var) {
            w.letters_.back().exp += l.exp;
            if (w.letters_.back().exp == 0) w.letters_.pop_back();
        } else {
            w.letters_.push_back(l);
        }
    }
    return w;
}

Word reduce_word(const Word& w) { return Word::reduced(w.letters()); }
Word reduce_word(const std::vector<Letter>& letters) { return Word::reduced(letters); }
bool is_trivial_word(const Word& w) { return reduce_word(w).is_identity(); }

int Word::max_var() const {
    int m = 0;
    for (const Letter& l : letters_) m = std::max(m, l.var);
    return m;
}

long long Word::exponent_sum(int var) const {
    long long s = 0;
    for (const Letter& l : letters_)
        if (l.var == var) s += l.exp;
    return s;
}

long long Word::weight() const {
    long long s = 0;
    for (const Letter& l : letters_) s += l.exp < 0 ? -l.exp : l.exp;
    return s;
}

Word Word::operator*(const Word& o) const {
    std::vector<Letter> seq = letters_;
    seq.insert(seq.end(), o.letters_.begin(), o.letters_.end());
    return reduced(seq);
}

Word Word::inverse() const {
    std::vector<Letter> seq;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) seq.push_back({it->var, -it->exp});
    return reduced(seq);
}

Word Word::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    Word acc;
    for (long long i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

bool Word::less(const Word& a, const Word& b) {
    if (a.letters_.size() != b.letters_.size()) return a.letters_.size() < b.letters_.size();
    for (std::size_t i = 0; i < a.letters_.size(); ++i) {
        if (a.letters_[i].var != b.letters_[i].var) return a.letters_[i].var < b.letters_[i].var;
        if (a.letters_[i].exp != b.letters_[i].exp) return a.letters_[i].exp < b.letters_[i].exp;
    }
    return false;
}

std::string Word::to_string() const {
    if (letters_.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) s += "*";
        s += "x" + std::to_string(letters_[i].var);
        if (letters_[i].exp != 1) s += "^" + std::to_string(letters_[i].exp);
    }
    return s;
}

// ---- LaurentExpr --------------------------------------------------------------

LaurentExpr LaurentExpr::from_terms(const Field& field, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return Word::less(a.word, b.word); });
    LaurentExpr e(field);
    for (auto& t : terms) {
        if (t.coeff.is_zero()) continue;
        if (!e.terms_.empty() && e.terms_.back().word == t.word) {
            e.terms_.back().coeff = e.terms_.back().coeff + t.coeff;
            if (e.terms_.back().coeff.is_zero()) e.terms_.pop_back();
        } else {
            e.terms_.push_back(std::move(t));
        }
    }
    return e;
}

LaurentExpr LaurentExpr::monomial(const Field& field, const FieldElement& c, const Word& w) {
    return from_terms(field, {Term{c, w}});
}

int LaurentExpr::max_var() const {
    int m = 0;
    for (const Term& t : terms_) m = std::max(m, t.word.max_var());
    return m;
}

bool LaurentExpr::is_polynomial() const {
    for (const Term& t : terms_)
        for (const Letter& l : t.word.letters())
            if (l.exp < 0) return false;
    return true;
}

bool LaurentExpr::is_word() const { return terms_.size() == 1 && terms_[0].coeff.is_one(); }

const Word& LaurentExpr::word() const {
    if (!is_word()) throw math_error("expression is not a group word (single term with coefficient 1)");
    return terms_[0].word;
}

LaurentExpr LaurentExpr::operator+(const LaurentExpr& o) const {
    if (field_ != o.field_) throw math_error("expression field mismatch");
    std::vector<Term> ts = terms_;
    ts.insert(ts.end(), o.terms_.begin(), o.terms_.end());
    return from_terms(field_, std::move(ts));
}

LaurentExpr LaurentExpr::operator-() const {
    std::vector<Term> ts = terms_;
    for (auto& t : ts) t.coeff = -t.coeff;
    return from_terms(field_, std::move(ts));
}

LaurentExpr LaurentExpr::operator-(const LaurentExpr& o) const { return *this + (-o); }

LaurentExpr LaurentExpr::operator*(const LaurentExpr& o) const {
    if (field_ != o.field_) throw math_error("expression field mismatch");
    std::vector<Term> ts;
    for (const Term& a : terms_)
        for (const Term& b : o.terms_) ts.push_back(Term{a.coeff * b.coeff, a.word * b.word});
    return from_terms(field_, std::move(ts));
}

LaurentExpr LaurentExpr::scale(const FieldElement& c) const {
    std::vector<Term> ts = terms_;
    for (auto& t : ts) t.coeff = t.coeff * c;
    return from_terms(field_, std::move(ts));
}

LaurentExpr LaurentExpr::pow(long long e) const {
    if (e == 0) return monomial(field_, field_.one(), Word{});
    if (e < 0) {
        if (terms_.size() != 1)
            throw math_error("cannot invert a sum symbolically; negative powers need a monomial base");
        return monomial(field_, terms_[0].coeff.inverse(), terms_[0].word.inverse()).pow(-e);
    }
    LaurentExpr acc = monomial(field_, field_.one(), Word{});
    LaurentExpr base = *this;
    unsigned long long ue = static_cast<unsigned long long>(e);
    while (ue) {
        if (ue & 1) acc = acc * base;
        base = base * base;
        ue >>= 1;
    }
    return acc;
}

LaurentExpr LaurentExpr::embed(const Field& target) const {
    if (field_ == target) return *this;
    if (field_.kind() != FieldKind::rationals)
        throw math_error("coefficient embedding is provided only from Q into finite fields");
    std::vector<Term> ts;
    for (const Term& t : terms_) ts.push_back(Term{target.from_rational(t.coeff.rational()), t.word});
    return from_terms(target, std::move(ts));
}

bool LaurentExpr::operator==(const LaurentExpr& o) const {
    if (field_ != o.field_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].coeff == o.terms_[i].coeff && terms_[i].word == o.terms_[i].word)) return false;
    return true;
}

std::string LaurentExpr::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const Term& t = terms_[i];
        std::string cs = t.coeff.to_string();
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        if (i == 0) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        if (t.word.is_identity()) {
            s += cs;
        } else if (cs == "1") {
            s += t.word.to_string();
        } else {
            s += cs + "*" + t.word.to_string();
        }
    }
    return s;
}

// ---- parser -------------------------------------------------------------------

namespace {

class Parser {
   public:
    Parser(const std::string& s, const Field& field) : s_(s), field_(field) {}

    LaurentExpr run() {
        LaurentExpr e = parse_expr();
        skip_ws();
        if (pos_ != s_.size()) throw parse_error("unexpected trailing input", pos_);
        return e;
    }

   private:
    const std::string& s_;
    const Field& field_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    mpz_class parse_digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) throw parse_error("expected digits", pos_);
        return mpz_class(s_.substr(start, pos_ - start), 10);
    }

    LaurentExpr parse_expr() {
        bool neg = false;
        if (accept('-'))
            neg = true;
        else
            accept('+');
        LaurentExpr acc = parse_term();
        if (neg) acc = -acc;
        for (;;) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                LaurentExpr t = parse_term();
                acc = c == '+' ? acc + t : acc - t;
            } else {
                break;
            }
        }
        return acc;
    }

    LaurentExpr parse_term() {
        LaurentExpr acc = parse_factor();
        while (accept('*')) acc = acc * parse_factor();
        return acc;
    }

    LaurentExpr parse_factor() {
        LaurentExpr base = parse_primary();
        if (accept('^')) {
            std::size_t at = pos_;
            bool neg = accept('-');
            mpz_class mag = parse_digits();
            if (mag == 0) throw parse_error("exponent zero on an explicit power", at);
            if (!mag.fits_slong_p()) throw parse_error("exponent out of range", at);
            long long e = mag.get_si();
            if (neg) e = -e;
            try {
                return base.pow(e);
            } catch (const math_error& err) {
                throw parse_error(err.what(), at);
            }
        }
        return base;
    }

    LaurentExpr parse_primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            LaurentExpr inner = parse_expr();
            if (!accept(')')) throw parse_error("expected ')'", pos_);
            return inner;
        }
        if (c == 'x') {
            ++pos_;
            std::size_t at = pos_;
            mpz_class idx = parse_digits();
            if (idx < 1) throw parse_error("variable index must be >= 1", at);
            if (!idx.fits_sint_p()) throw parse_error("variable index out of range", at);
            return LaurentExpr::monomial(field_, field_.one(),
                                         Word::reduced({Letter{static_cast<int>(idx.get_si()), 1}}));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t at = pos_;
            mpz_class num = parse_digits();
            mpz_class den = 1;
            // a '/' introduces the denominator of a rational literal
            std::size_t save = pos_;
            if (accept('/')) {
                if (std::isdigit(static_cast<unsigned char>(peek()))) {
                    den = parse_digits();
                    if (den == 0) throw parse_error("zero denominator", save + 1);
                } else {
                    pos_ = save;  // not a literal; no division operator exists, will error upstream
                }
            }
            mpq_class q(num, den);
            q.canonicalize();
            try {
                return LaurentExpr::monomial(field_, field_.from_rational(q), Word{});
            } catch (const math_error& err) {
                throw parse_error(err.what(), at);
            }
        }
        throw parse_error(std::string("expected a literal, variable or '(' but found '") +
                              (c == '\0' ? std::string("end of input") : std::string(1, c)) + "'",
                          pos_);
    }
};

}  // namespace

LaurentExpr LaurentExpr::parse(const std::string& text, const Field& field) { return Parser(text, field).run(); }

// ---- multilinear classification -------------------------------------------------

std::variant<MultilinearTable, MultilinearTable::Rejection> MultilinearTable::classify(const LaurentExpr& f, int m) {
    using R = Rejection;
    if (m < 1) return R{"arity must be >= 1", ""};
    if (f.is_zero()) return R{"zero polynomial has no multilinear form", "0"};
    MultilinearTable t;
    t.m_ = m;
    t.field_ = f.field();
    std::map<std::vector<int>, FieldElement> table;
    for (const Term& term : f.terms()) {
        const auto& ls = term.word.letters();
        std::string ts = LaurentExpr::monomial(f.field(), term.coeff, term.word).to_string();
        if (static_cast<int>(ls.size()) != m)
            return R{"term is not a product of exactly " + std::to_string(m) + " variables", ts};
        std::vector<int> perm;
        std::vector<bool> seen(m + 1, false);
        for (const Letter& l : ls) {
            if (l.exp != 1) return R{"exponent " + std::to_string(l.exp) + " on x" + std::to_string(l.var), ts};
            if (l.var > m) return R{"variable x" + std::to_string(l.var) + " outside x1..x" + std::to_string(m), ts};
            if (seen[l.var]) return R{"variable x" + std::to_string(l.var) + " repeated", ts};
            seen[l.var] = true;
            perm.push_back(l.var);
        }
        table.emplace(std::move(perm), term.coeff);
    }
    for (auto& [perm, coeff] : table) t.entries_.emplace_back(perm, coeff);
    return t;
}

LaurentExpr MultilinearTable::to_expr() const {
    std::vector<Term> ts;
    for (const auto& [perm, coeff] : entries_) {
        std::vector<Letter> ls;
        for (int v : perm) ls.push_back({v, 1});
        ts.push_back(Term{coeff, Word::reduced(ls)});
    }
    return LaurentExpr::from_terms(field_, std::move(ts));
}

}  // namespace msf
