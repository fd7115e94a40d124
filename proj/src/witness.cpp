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

#include "maxsubfield/witness.hpp"

#include <algorithm>

namespace msf {

// ---- spectrum ---------------------------------------------------------------

namespace {

bool admissible_a(const FieldElement& cand, const std::vector<FieldElement>& chosen, bool char2) {
    if (cand.is_zero() || cand.is_one()) return false;
    for (const auto& prev : chosen) {
        if (cand == prev) return false;
        if (!char2 && cand == -prev) return false;
    }
    return true;
}

bool admissible_b(const FieldElement& cand, const std::vector<FieldElement>& chosen, bool char2) {
    if (cand.is_zero() || cand.is_one()) return false;
    if (cand == -cand.field().one()) return false;  // b = -1 (char 2: same as b = 1)
    for (const auto& prev : chosen) {
        if (cand == prev || cand == prev.inverse()) return false;
    }
    return true;
}

}  // namespace

SpectrumParams choose_spectrum(int m, const Field& field, std::uint64_t seed) {
    if (m < 2) throw math_error("spectrum parameters are defined for m >= 2");
    int s = m / 2;
    bool char2 = field.characteristic() == 2;
    SpectrumParams params;
    params.m = m;
    params.s = s;
    params.field = field;
    params.seed = seed;

    auto enumerate = [&](auto&& admissible, std::vector<FieldElement>& out) {
        if (field.is_finite()) {
            mpz_class q = *field.size();
            for (mpz_class idx = 2; idx < q && static_cast<int>(out.size()) < s; ++idx) {
                FieldElement cand = field.element_at(idx);
                if (admissible(cand, out)) out.push_back(cand);
            }
        } else {
            for (long long v = 2; static_cast<int>(out.size()) < s; ++v) {
                FieldElement cand = field.from_int(v);
                if (admissible(cand, out)) out.push_back(cand);
            }
        }
    };

    enumerate([&](const FieldElement& c, const std::vector<FieldElement>& ch) { return admissible_a(c, ch, char2); },
              params.a_values);
    enumerate([&](const FieldElement& c, const std::vector<FieldElement>& ch) { return admissible_b(c, ch, char2); },
              params.b_values);

    if (static_cast<int>(params.a_values.size()) < s || static_cast<int>(params.b_values.size()) < s) {
        // minimum usable size: excluded constants plus one (inverse-)pair per slot
        long long need_a = char2 ? s + 2 : 2 * s + 2;
        long long need_b = char2 ? 2 * s + 2 : 2 * s + 3;
        throw math_error("field " + field.to_string() + " is too small for m = " + std::to_string(m) +
                         ": need at least " + std::to_string(std::max(need_a, need_b)) + " elements");
    }
    if (!spectrum_constraints_ok(params)) throw math_error("spectrum constraint verification failed");
    return params;
}

bool spectrum_constraints_ok(const SpectrumParams& params) {
    const Field& f = params.field;
    bool char2 = f.characteristic() == 2;
    if (params.s != params.m / 2) return false;
    if (static_cast<int>(params.a_values.size()) != params.s) return false;
    if (static_cast<int>(params.b_values.size()) != params.s) return false;
    // a: char != 2: +-a_i pairwise distinct, all outside {0,1};
    //    char 2: pairwise distinct nonzero
    for (int i = 0; i < params.s; ++i) {
        const FieldElement& a = params.a_values[i];
        if (a.is_zero()) return false;
        if (!char2 && a.is_one()) return false;
        for (int j = 0; j < i; ++j) {
            if (a == params.a_values[j]) return false;
            if (!char2 && a == -params.a_values[j]) return false;
        }
    }
    // b: b_i, b_i^-1 pairwise distinct, outside {0,1}, char != 2: b_i != -1
    std::vector<FieldElement> pool;
    for (const FieldElement& b : params.b_values) {
        if (b.is_zero() || b.is_one()) return false;
        if (!char2 && b == -f.one()) return false;
        pool.push_back(b);
        pool.push_back(b.inverse());
    }
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = i + 1; j < pool.size(); ++j)
            if (pool[i] == pool[j]) return false;
    return true;
}

Matrix build_Pm(const SpectrumParams& params) {
    const Field& f = params.field;
    std::vector<Matrix> blocks;
    for (const FieldElement& a : params.a_values) {
        Matrix block(2, f);
        block.at(0, 0) = a;
        block.at(0, 1) = f.one();
        block.at(1, 1) = -a;
        blocks.push_back(block);
    }
    if (params.m % 2 == 1) blocks.push_back(Matrix::zero(1, f));
    return Matrix::block_diag(blocks);
}

Matrix build_Qm(const SpectrumParams& params) {
    const Field& f = params.field;
    std::vector<Matrix> blocks;
    for (const FieldElement& b : params.b_values)
        blocks.push_back(Matrix::diagonal(f, {b, b.inverse()}));
    if (params.m % 2 == 1) blocks.push_back(Matrix::identity(1, f));
    return Matrix::block_diag(blocks);
}

// ---- non-centrality ----------------------------------------------------------

CentralityReport noncentral_on_M2(const MultilinearTable& f, const Field& field, std::size_t trials,
                                  std::uint64_t seed) {
    if (trials < 1) throw math_error("trials must be >= 1");
    int n = f.arity();
    std::size_t used = 0;
    auto probe = [&](const std::vector<Matrix>& tuple) -> std::optional<CentralityReport> {
        ++used;
        Matrix v = evaluate(f, tuple);
        if (!v.is_scalar())
            return CentralityReport{Centrality::noncentral_certain, used, seed, tuple, std::move(v)};
        return std::nullopt;
    };
    // deterministic pre-pass over structured tuples (covers the standard
    // polynomials instantly), then seeded random sampling
    std::vector<Matrix> basis = {
        Matrix::unit(2, field, 1, 1),  // diag(1,0)
        Matrix::unit(2, field, 1, 2),
        Matrix::unit(2, field, 2, 1),
        Matrix::identity(2, field),
    };
    std::size_t combos = 1;
    for (int i = 0; i < n && combos <= 256; ++i) combos *= basis.size();
    if (combos <= 256) {
        for (std::size_t code = 0; code < combos; ++code) {
            // slot 0 is the most significant digit, so early tuples read
            // naturally: (E11, E11), (E11, E12), ...
            std::vector<Matrix> tuple(n, basis[0]);
            std::size_t rest = code;
            for (int i = n; i-- > 0;) {
                tuple[i] = basis[rest % basis.size()];
                rest /= basis.size();
            }
            if (auto hit = probe(tuple)) return *hit;
        }
    }
    Rng rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<Matrix> tuple;
        for (int i = 0; i < n; ++i) tuple.push_back(Matrix::random(2, field, rng));
        if (auto hit = probe(tuple)) return *hit;
    }
    return CentralityReport{Centrality::appears_central, used, seed, {}, Matrix::zero(2, field)};
}

// ---- multilinear preimage -----------------------------------------------------

namespace {

std::vector<FieldElement> vec2(const Matrix& m) {
    return {m.at(0, 0), m.at(0, 1), m.at(1, 0), m.at(1, 1)};
}

Matrix unvec2(const Field& f, const std::vector<FieldElement>& v) {
    Matrix m(2, f);
    m.at(0, 0) = v[0];
    m.at(0, 1) = v[1];
    m.at(1, 0) = v[2];
    m.at(1, 1) = v[3];
    return m;
}

// frame g = [v | Av] in which A becomes the hollow companion [[0,-det],[1,0]];
// exists iff A is non-scalar
std::optional<Matrix> hollow_frame(const Matrix& A, Rng& rng) {
    const Field& f = A.field();
    auto try_v = [&](const Matrix& v) -> std::optional<Matrix> {
        Matrix g(2, f);
        Matrix av = A * v;
        g.at(0, 0) = v.at(0, 0);
        g.at(1, 0) = v.at(1, 0);
        g.at(0, 1) = av.at(0, 0);
        g.at(1, 1) = av.at(1, 0);
        if (g.det().is_zero()) return std::nullopt;
        return g;
    };
    Matrix v(2, f);  // used as a 2x1 column in its first column
    v.at(0, 0) = f.one();
    if (auto g = try_v(v)) return g;
    v.at(0, 0) = f.zero();
    v.at(1, 0) = f.one();
    if (auto g = try_v(v)) return g;
    v.at(0, 0) = f.one();
    if (auto g = try_v(v)) return g;
    for (int i = 0; i < 8; ++i) {
        v.at(0, 0) = f.random(rng);
        v.at(1, 0) = f.random(rng);
        if (auto g = try_v(v)) return g;
    }
    return std::nullopt;  // A is scalar
}

}  // namespace

std::vector<Matrix> multilinear_preimage_2x2(const MultilinearTable& f, const Matrix& A, std::uint64_t seed,
                                             std::size_t retries) {
    if (A.size() != 2) throw math_error("preimage targets are 2x2");
    if (f.field() != A.field()) throw math_error("field mismatch between polynomial and target");
    if (!A.trace().is_zero()) throw math_error("target trace must be zero (image theorem hypothesis)");
    const Field& fl = A.field();
    int n = f.arity();
    Rng rng(seed);

    auto verified = [&](std::vector<Matrix> tuple) -> std::optional<std::vector<Matrix>> {
        if (evaluate(f, tuple) == A) return tuple;
        return std::nullopt;
    };

    if (A.is_zero()) {
        std::vector<Matrix> ids(n, Matrix::identity(2, fl));
        if (auto r = verified(ids)) return *r;  // e.g. the commutator
        std::vector<Matrix> tuple(n, Matrix::identity(2, fl));
        tuple[0] = Matrix::zero(2, fl);  // multilinearity kills the value
        if (auto r = verified(tuple)) return *r;
    }

    Matrix e12 = Matrix::unit(2, fl, 1, 2), e21 = Matrix::unit(2, fl, 2, 1);
    for (std::size_t attempt = 0; attempt < retries; ++attempt) {
        // structured route: diagonal tails in the hollow frame of A
        if (auto g = hollow_frame(A, rng)) {
            Matrix ginv = g->inverse();
            Matrix C = ginv * A * *g;  // [[0, -det A], [1, 0]]
            std::vector<Matrix> tuple(n, Matrix::zero(2, fl));
            for (int i = 1; i < n; ++i)
                tuple[i] = Matrix::diagonal(fl, {fl.random(rng), fl.random(rng)});
            tuple[0] = e12;
            Matrix u12 = evaluate(f, tuple);
            tuple[0] = e21;
            Matrix u21 = evaluate(f, tuple);
            // graded substitution: slot-1 antidiagonals map to antidiagonals,
            // diagonally in the {E12, E21} basis
            FieldElement alpha = u12.at(0, 1), beta = u21.at(1, 0);
            bool graded = u12.at(0, 0).is_zero() && u12.at(1, 1).is_zero() && u12.at(1, 0).is_zero() &&
                          u21.at(0, 0).is_zero() && u21.at(1, 1).is_zero() && u21.at(0, 1).is_zero();
            if (graded && !alpha.is_zero() && !beta.is_zero()) {
                tuple[0] = e12.scale(C.at(0, 1) / alpha) + e21.scale(C.at(1, 0) / beta);
                for (auto& t : tuple) t = *g * t * ginv;
                if (auto r = verified(std::move(tuple))) return *r;
            }
        }
        // fallback: unstructured tails, solve the full slot-1 system
        {
            std::vector<Matrix> tuple(n, Matrix::zero(2, fl));
            for (int i = 1; i < n; ++i) tuple[i] = Matrix::random(2, fl, rng);
            Matrix L(4, fl);
            std::vector<Matrix> units = {Matrix::unit(2, fl, 1, 1), e12, e21, Matrix::unit(2, fl, 2, 2)};
            for (int col = 0; col < 4; ++col) {
                tuple[0] = units[col];
                std::vector<FieldElement> image = vec2(evaluate(f, tuple));
                for (int row = 0; row < 4; ++row) L.at(row, col) = image[row];
            }
            if (auto x = solve_any(L, vec2(A))) {
                tuple[0] = unvec2(fl, *x);
                if (auto r = verified(std::move(tuple))) return *r;
            }
        }
    }
    throw search_exhausted("no preimage found for the multilinear target", retries);
}

// ---- SL_2 helpers --------------------------------------------------------------

Matrix random_sl2(const Field& field, Rng& rng) {
    Matrix m(2, field);
    FieldElement a = field.random(rng);
    if (!a.is_zero()) {
        FieldElement b = field.random(rng), c = field.random(rng);
        m.at(0, 0) = a;
        m.at(0, 1) = b;
        m.at(1, 0) = c;
        m.at(1, 1) = (field.one() + b * c) / a;
    } else {
        FieldElement b = field.random_nonzero(rng);
        m.at(0, 1) = b;
        m.at(1, 0) = -b.inverse();
        m.at(1, 1) = field.random(rng);
    }
    return m;
}

std::optional<std::pair<FieldElement, FieldElement>> split_eigenvalues(const Matrix& b) {
    if (b.size() != 2) throw math_error("split_eigenvalues expects a 2x2 matrix");
    std::vector<FieldElement> roots = poly_roots(char_poly(b));
    if (roots.size() != 2) return std::nullopt;
    return std::make_pair(roots[0], roots[1]);
}

namespace {

// kernel vector of a singular nonzero 2x2 matrix
std::pair<FieldElement, FieldElement> kernel_vector(const Matrix& m) {
    const Field& f = m.field();
    if (!m.at(0, 0).is_zero() || !m.at(0, 1).is_zero()) return {-m.at(0, 1), m.at(0, 0)};
    if (!m.at(1, 0).is_zero() || !m.at(1, 1).is_zero()) return {-m.at(1, 1), m.at(1, 0)};
    return {f.one(), f.zero()};  // zero matrix: anything
}

Matrix eigenvector_basis(const Matrix& v, const FieldElement& lam, const FieldElement& mu) {
    const Field& f = v.field();
    Matrix shift1 = v, shift2 = v;
    shift1.at(0, 0) = shift1.at(0, 0) - lam;
    shift1.at(1, 1) = shift1.at(1, 1) - lam;
    shift2.at(0, 0) = shift2.at(0, 0) - mu;
    shift2.at(1, 1) = shift2.at(1, 1) - mu;
    auto [x1, y1] = kernel_vector(shift1);
    auto [x2, y2] = kernel_vector(shift2);
    Matrix p(2, f);
    p.at(0, 0) = x1;
    p.at(1, 0) = y1;
    p.at(0, 1) = x2;
    p.at(1, 1) = y2;
    return p;
}

}  // namespace

Matrix conjugating_matrix(const Matrix& v, const Matrix& b, const FieldElement& lam, const FieldElement& mu) {
    Matrix p = eigenvector_basis(v, lam, mu);
    Matrix q = eigenvector_basis(b, lam, mu);
    return q * p.inverse();
}

// ---- word preimage ---------------------------------------------------------------

namespace {

// Lagrange interpolation through (points[i], values[i]) over a field
Poly interpolate(const Field& f, const std::vector<FieldElement>& points,
                 const std::vector<FieldElement>& values) {
    Poly acc(f);
    for (std::size_t i = 0; i < points.size(); ++i) {
        Poly basis(f, {f.one()});
        FieldElement denom = f.one();
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (i == j) continue;
            basis = basis * Poly(f, {-points[j], f.one()});
            denom = denom * (points[i] - points[j]);
        }
        acc = acc + basis.scale(values[i] / denom);
    }
    return acc;
}

Matrix transvection(const Field& f, const FieldElement& t) {
    Matrix e = Matrix::identity(2, f);
    e.at(0, 1) = t;
    return e;
}

}  // namespace

std::vector<Matrix> word_preimage_sl2(const Word& w, const Matrix& B, std::uint64_t seed, std::size_t budget) {
    if (B.size() != 2) throw math_error("word targets are 2x2");
    const Field& f = B.field();
    if (is_trivial_word(w)) throw math_error("the word is trivial; its image is {1}");
    if (!(B.det() == f.one())) throw math_error("target must lie in SL_2 (det = 1)");
    FieldElement tau = B.trace();
    if (tau == f.from_int(2) || tau == f.from_int(-2))
        throw math_error("target trace +-2 is excluded (image theorem hypothesis)");
    auto eig = split_eigenvalues(B);
    if (!eig) throw math_error("target is not split over " + f.to_string() + " (eigenvalues leave the field)");
    const auto& [lam, mu] = *eig;

    int nv = w.max_var();
    Rng rng(seed);
    std::size_t used = 0;

    auto finish = [&](std::vector<Matrix> tuple) -> std::optional<std::vector<Matrix>> {
        Matrix v = evaluate(w, tuple);
        if (!(v.trace() == tau)) return std::nullopt;
        Matrix g = conjugating_matrix(v, B, lam, mu);
        Matrix ginv = g.inverse();
        for (auto& s : tuple) s = g * s * ginv;
        if (evaluate(w, tuple) == B) return tuple;
        return std::nullopt;
    };

    // exponent-sum shortcut: a variable with nonzero abelianized exponent can
    // carry a diagonal e-th root of the spectrum on its own
    for (int v = 1; v <= nv; ++v) {
        long long e = w.exponent_sum(v);
        if (e == 0) continue;
        long long mag = e < 0 ? -e : e;
        FieldElement target = e > 0 ? lam : lam.inverse();
        std::vector<FieldElement> xk(static_cast<std::size_t>(mag) + 1, f.zero());
        xk[0] = -target;
        xk[static_cast<std::size_t>(mag)] = f.one();
        std::vector<FieldElement> roots = poly_roots(Poly(f, xk));  // x^|e| - target
        if (roots.empty()) continue;
        // prefer a positive rational root so diagonal witnesses look natural
        FieldElement rho = roots.front();
        for (const auto& r : roots)
            if (f.kind() == FieldKind::rationals && r.rational() > 0) rho = r;
        std::vector<Matrix> tuple(nv, Matrix::identity(2, f));
        tuple[v - 1] = Matrix::diagonal(f, {rho, rho.inverse()});
        ++used;
        if (auto r = finish(std::move(tuple))) return *r;
    }

    // transvection families: h(t) = tr w(..., E(t) S_v*, ...) is a polynomial
    // of degree <= the scanned variable's letter weight
    int scan_var = 0;
    long long scan_weight = 0;
    for (int v = 1; v <= nv; ++v) {
        long long wt = 0;
        for (const Letter& l : w.letters())
            if (l.var == v) wt += l.exp < 0 ? -l.exp : l.exp;
        if (wt > 0 && (scan_var == 0 || wt < scan_weight)) {
            scan_var = v;
            scan_weight = wt;
        }
    }
    if (scan_var == 0) throw math_error("word uses no variables");  // unreachable for nontrivial words

    while (used < budget) {
        std::vector<Matrix> base(nv, Matrix::identity(2, f));
        for (int i = 0; i < nv; ++i) base[i] = random_sl2(f, rng);
        auto at_t = [&](const FieldElement& t) {
            std::vector<Matrix> tuple = base;
            tuple[scan_var - 1] = transvection(f, t) * tuple[scan_var - 1];
            return tuple;
        };
        if (f.is_finite()) {
            long long deg_bound = scan_weight;
            mpz_class q = *f.size();
            if (q <= static_cast<long>(deg_bound)) {
                // field smaller than the family degree: exhaustive t scan
                for (mpz_class idx = 0; idx < q && used < budget; ++idx) {
                    ++used;
                    std::vector<Matrix> tuple = at_t(f.element_at(idx));
                    if (evaluate(w, tuple).trace() == tau) {
                        if (auto r = finish(std::move(tuple))) return *r;
                    }
                }
                continue;
            }
            if (used + static_cast<std::size_t>(deg_bound) + 1 > budget) break;  // cannot afford a family
            std::vector<FieldElement> pts, vals;
            for (long long j = 0; j <= deg_bound; ++j) {
                pts.push_back(f.element_at(mpz_class(static_cast<long>(j))));
                vals.push_back(evaluate(w, at_t(pts.back())).trace());
                ++used;
            }
            Poly h = interpolate(f, pts, vals);
            Poly target = h - Poly::constant(tau);
            if (target.is_zero()) {
                if (auto r = finish(at_t(f.zero()))) return *r;
                continue;
            }
            for (const FieldElement& t : poly_roots(target)) {
                ++used;
                if (auto r = finish(at_t(t))) return *r;
                if (used >= budget) break;
            }
        } else {
            // over Q: scan small integers through the same family
            for (long long j = 0; j <= 64 && used < budget; ++j) {
                long long t = j % 2 == 0 ? j / 2 : -(j + 1) / 2;  // 0, -1, 1, -2, 2, ...
                ++used;
                std::vector<Matrix> tuple = at_t(f.from_int(t));
                if (evaluate(w, tuple).trace() == tau) {
                    if (auto r = finish(std::move(tuple))) return *r;
                }
            }
        }
    }
    throw search_exhausted("no SL_2 preimage found for the word target", used);
}

// ---- block assembly -----------------------------------------------------------

std::vector<Matrix> assemble_block_witness(const std::vector<std::vector<Matrix>>& blocks, int m, PadKind pad) {
    if (blocks.empty()) throw math_error("assembly needs at least one block");
    int s = m / 2;
    if (static_cast<int>(blocks.size()) != s)
        throw math_error("expected " + std::to_string(s) + " blocks for m = " + std::to_string(m));
    std::size_t arity = blocks.front().size();
    for (const auto& b : blocks)
        if (b.size() != arity) throw math_error("arity mismatch across blocks");
    if (arity == 0) throw math_error("blocks must assign at least one variable");
    const Field& f = blocks.front().front().field();
    std::vector<Matrix> out;
    for (std::size_t j = 0; j < arity; ++j) {
        std::vector<Matrix> parts;
        for (const auto& b : blocks) {
            if (b[j].size() != 2) throw math_error("per-block assignments must be 2x2");
            parts.push_back(b[j]);
        }
        if (m % 2 == 1) {
            Matrix padm(1, f);
            if (pad == PadKind::one) padm.at(0, 0) = f.one();
            parts.push_back(padm);
        }
        out.push_back(Matrix::block_diag(parts));
    }
    return out;
}

// ---- models ---------------------------------------------------------------------

mpz_class model_dimension(const Model& model) {
    if (std::holds_alternative<MatrixModel>(model)) {
        const auto& mm = std::get<MatrixModel>(model);
        return mpz_class(mm.m) * mm.m;
    }
    return 4;
}

std::string model_to_string(const Model& model) {
    if (std::holds_alternative<MatrixModel>(model)) {
        const auto& mm = std::get<MatrixModel>(model);
        return "M_" + std::to_string(mm.m) + "(" + mm.field.to_string() + ")";
    }
    return std::get<QuatModel>(model).algebra->to_string();
}

// ---- maximal subfield witness ----------------------------------------------------

namespace {

LaurentExpr align_field(const LaurentExpr& expr, const Field& field) {
    if (expr.field() == field) return expr;
    return expr.embed(field);
}

std::vector<std::string> desk_scale_caveats(const Field& field) {
    std::vector<std::string> cs;
    if (field.is_finite())
        cs.push_back("finite field is a desk-scale surrogate for the infinite-field hypotheses");
    return cs;
}

WitnessReport matrix_witness(const MatrixModel& model, const LaurentExpr& raw_expr, std::uint64_t seed,
                             const Budgets& budgets) {
    if (model.m < 2) throw math_error("matrix models need m >= 2");
    LaurentExpr expr = align_field(raw_expr, model.field);
    const Field& f = model.field;
    Rng master(seed);
    WitnessReport rep;
    rep.expression = expr.to_string();
    rep.model = model;
    rep.model_dim = model_dimension(rep.model);
    rep.seed = seed;
    rep.budgets = budgets;
    rep.caveats = desk_scale_caveats(f);

    SpectrumParams spectrum = choose_spectrum(model.m, f, seed);

    if (expr.is_word() && !is_trivial_word(expr.word())) {
        const Word& w = expr.word();
        rep.kind = "word";
        std::vector<std::vector<Matrix>> blocks;
        for (int i = 0; i < spectrum.s; ++i) {
            Matrix target = Matrix::diagonal(f, {spectrum.b_values[i], spectrum.b_values[i].inverse()});
            blocks.push_back(word_preimage_sl2(w, target, master.next(), budgets.budget));
        }
        std::vector<Matrix> assignment = assemble_block_witness(blocks, model.m, PadKind::one);
        Matrix value = evaluate(w, assignment);
        if (!(value == build_Qm(spectrum))) throw math_error("internal defect: assembled value is not Q_m");
        rep.assignment = std::move(assignment);
        rep.certificate = algebraic_degree(value);
        rep.value = std::move(value);
    } else {
        int nvars = expr.max_var();
        auto classified = MultilinearTable::classify(expr, nvars);
        if (std::holds_alternative<MultilinearTable::Rejection>(classified)) {
            const auto& rej = std::get<MultilinearTable::Rejection>(classified);
            throw math_error("expression is neither a nontrivial word nor multilinear: " + rej.reason +
                             (rej.offending_term.empty() ? "" : " (term " + rej.offending_term + ")"));
        }
        const auto& table = std::get<MultilinearTable>(classified);
        rep.kind = "multilinear";
        CentralityReport central = noncentral_on_M2(table, f, budgets.trials, master.next());
        if (central.verdict != Centrality::noncentral_certain)
            throw math_error("could not certify non-centrality of f on M_2 within " +
                             std::to_string(central.trials_run) + " evaluations");
        std::vector<std::vector<Matrix>> blocks;
        for (int i = 0; i < spectrum.s; ++i) {
            Matrix target(2, f);
            target.at(0, 0) = spectrum.a_values[i];
            target.at(0, 1) = f.one();
            target.at(1, 1) = -spectrum.a_values[i];
            blocks.push_back(multilinear_preimage_2x2(table, target, master.next(), budgets.retries));
        }
        std::vector<Matrix> assignment = assemble_block_witness(blocks, model.m, PadKind::zero);
        Matrix value = evaluate(table, assignment);
        if (!(value == build_Pm(spectrum))) throw math_error("internal defect: assembled value is not P_m");
        rep.assignment = std::move(assignment);
        rep.certificate = algebraic_degree(value);
        rep.value = std::move(value);
    }
    rep.maximal = mpz_class(rep.certificate.degree) * rep.certificate.degree == rep.model_dim;
    return rep;
}

WitnessReport quaternion_witness(const QuatModel& model, const LaurentExpr& raw_expr, std::uint64_t seed,
                                 const Budgets& budgets) {
    auto alg = model.algebra;
    const Field& f = alg->field();
    LaurentExpr expr = align_field(raw_expr, f);
    WitnessReport rep;
    rep.expression = expr.to_string();
    rep.model = model;
    rep.model_dim = 4;
    rep.seed = seed;
    rep.budgets = budgets;
    rep.kind = expr.is_word() ? "word" : "multilinear";
    if (expr.is_word() && is_trivial_word(expr.word()))
        throw math_error("the word is trivial; its image is {1}");

    if (alg->is_known_division_preset()) {
        rep.division_evidence = "preset";
    } else {
        if (f.kind() != FieldKind::rationals)
            throw math_error("quaternion witnesses need a division preset over Q or a heuristic check over Q");
        const long long bound = 10;
        DivisionCheckResult check = heuristic_division_check(alg, bound);
        if (check.verdict == DivisionVerdict::zero_found)
            throw math_error("algebra " + alg->to_string() + " is split: Nrd(" + check.zero->to_string() +
                             ") = 0");
        rep.division_evidence = "heuristic(" + std::to_string(bound) + ")";
        rep.caveats.push_back("division property is heuristic: no norm zero up to height " +
                              std::to_string(bound));
    }

    int nvars = std::max(expr.max_var(), 1);
    Rng rng(seed);
    auto try_tuple = [&](const std::vector<Quaternion>& tuple) -> bool {
        Quaternion value = evaluate(expr, tuple);
        if (value.is_central()) return false;
        rep.assignment = tuple;
        rep.certificate = quat_min_poly(value);
        rep.value = std::move(value);
        return true;
    };
    // canonical pre-pass (the commutator lands on (i, j) |-> 2k), then
    // seeded random sampling
    std::vector<Quaternion> pool = {alg->i(), alg->j(), alg->k(), alg->one() + alg->i(),
                                    alg->one() + alg->j()};
    std::size_t combos = 1;
    bool found = false;
    for (int i = 0; i < nvars && combos <= 64; ++i) combos *= pool.size();
    if (combos <= 64) {
        for (std::size_t code = 0; code < combos && !found; ++code) {
            std::vector<Quaternion> tuple(nvars, pool[0]);
            std::size_t rest = code;
            for (int i = nvars; i-- > 0;) {
                tuple[i] = pool[rest % pool.size()];
                rest /= pool.size();
            }
            found = try_tuple(tuple);
        }
    }
    for (std::size_t t = 0; !found && t < budgets.trials; ++t) {
        std::vector<Quaternion> tuple;
        for (int i = 0; i < nvars; ++i) tuple.push_back(alg->random_invertible(rng));
        found = try_tuple(tuple);
    }
    if (!found)
        throw search_exhausted("no non-central value found in the quaternion algebra", budgets.trials);
    rep.maximal = mpz_class(rep.certificate.degree) * rep.certificate.degree == rep.model_dim;
    return rep;
}

}  // namespace

WitnessReport maximal_subfield_witness(const Model& model, const LaurentExpr& expr, std::uint64_t seed,
                                       const Budgets& budgets) {
    if (expr.is_zero()) throw math_error("the zero expression generates nothing");
    if (std::holds_alternative<MatrixModel>(model))
        return matrix_witness(std::get<MatrixModel>(model), expr, seed, budgets);
    return quaternion_witness(std::get<QuatModel>(model), expr, seed, budgets);
}

// ---- degree bound audit ------------------------------------------------------------

AuditReport degree_bound_audit(const Model& model, const LaurentExpr& raw_expr, std::size_t trials,
                               std::uint64_t seed) {
    if (trials < 1) throw math_error("trials must be >= 1");
    AuditReport rep;
    rep.model = model;
    rep.trials = trials;
    rep.seed = seed;
    rep.model_dim = model_dimension(model);
    Rng rng(seed);

    auto record = [&](int degree) {
        if (degree >= static_cast<int>(rep.degree_histogram.size())) rep.degree_histogram.resize(degree + 1, 0);
        ++rep.degree_histogram[degree];
        rep.max_degree_observed = std::max(rep.max_degree_observed, degree);
    };

    if (std::holds_alternative<MatrixModel>(model)) {
        const auto& mm = std::get<MatrixModel>(model);
        LaurentExpr expr = align_field(raw_expr, mm.field);
        rep.expression = expr.to_string();
        int nvars = std::max(expr.max_var(), 1);
        for (std::size_t t = 0; t < trials; ++t) {
            std::vector<Matrix> tuple;
            for (int i = 0; i < nvars; ++i) tuple.push_back(Matrix::random_invertible(mm.m, mm.field, rng));
            record(algebraic_degree(evaluate(expr, tuple)).degree);
        }
    } else {
        auto alg = std::get<QuatModel>(model).algebra;
        LaurentExpr expr = align_field(raw_expr, alg->field());
        rep.expression = expr.to_string();
        int nvars = std::max(expr.max_var(), 1);
        for (std::size_t t = 0; t < trials; ++t) {
            std::vector<Quaternion> tuple;
            for (int i = 0; i < nvars; ++i) tuple.push_back(alg->random_invertible(rng));
            record(quat_min_poly(evaluate(expr, tuple)).degree);
        }
    }
    mpz_class dhat_sq = mpz_class(rep.max_degree_observed) * rep.max_degree_observed;
    rep.bound_holds = rep.model_dim <= dhat_sq;
    rep.equality = rep.model_dim == dhat_sq;
    rep.insufficient = !rep.bound_holds;
    return rep;
}

}  // namespace msf
