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

#ifndef MAXSUBFIELD_GN_HPP
#define MAXSUBFIELD_GN_HPP

#include <optional>

#include "maxsubfield/expr.hpp"
#include "maxsubfield/matrix.hpp"

namespace msf {

/// Past this arity the (n+1)! permutation sum needs an explicit opt-in.
inline constexpr int kGnDefaultCeiling = 8;

/// g_n(a, r_1..r_n) = sum over S_{n+1} of sign(sigma) a^{sigma(0)} r_1
/// a^{sigma(1)} ... r_n a^{sigma(n)}. Vanishes for every r-tuple exactly
/// when a is algebraic of degree <= n.
///
/// Permutations are walked in Steinhaus-Johnson-Trotter order: each step is
/// one adjacent transposition, so prefix products from before the swap
/// position are reused. Bit-identical to the naive lexicographic sum.
template <AlgebraElement A>
A eval_gn(const A& a, std::span<const A> rs, bool allow_large = false) {
    int n = static_cast<int>(rs.size());
    if (n > kGnDefaultCeiling && !allow_large)
        throw math_error("g_n with n > " + std::to_string(kGnDefaultCeiling) +
                         " is a factorial-size sum; pass allow_large to override");
    std::vector<A> pw;
    pw.reserve(n + 1);
    pw.push_back(a.ring_one());
    for (int i = 1; i <= n; ++i) pw.push_back(pw.back() * a);

    std::vector<int> sigma(n + 1), pos(n + 1), dir(n + 1, -1);
    for (int i = 0; i <= n; ++i) sigma[i] = pos[i] = i;

    // prefix[j] = a^{sigma(0)} r_1 a^{sigma(1)} ... r_j a^{sigma(j)}
    std::vector<A> prefix(n + 1, a.ring_zero());
    auto recompute = [&](int from) {
        for (int j = from; j <= n; ++j) {
            if (j == 0)
                prefix[0] = pw[sigma[0]];
            else
                prefix[j] = prefix[j - 1] * rs[j - 1] * pw[sigma[j]];
        }
    };
    recompute(0);
    A acc = prefix[n];
    int sign = 1;
    for (;;) {
        int v = -1;
        for (int w = n; w >= 0; --w) {
            int t = pos[w] + dir[w];
            if (t < 0 || t > n) continue;
            if (sigma[t] < w) {
                v = w;
                break;
            }
        }
        if (v < 0) break;
        int p = pos[v], q = p + dir[v];
        std::swap(sigma[p], sigma[q]);
        pos[sigma[p]] = p;
        pos[sigma[q]] = q;
        for (int w = v + 1; w <= n; ++w) dir[w] = -dir[w];
        sign = -sign;
        recompute(std::min(p, q));
        acc = sign > 0 ? acc + prefix[n] : acc - prefix[n];
    }
    return acc;
}

template <AlgebraElement A>
A eval_gn(const A& a, const std::vector<A>& rs, bool allow_large = false) {
    return eval_gn(a, std::span<const A>(rs), allow_large);
}

enum class DegreeVerdict { certainly_greater, probably_at_most };

/// Outcome of the randomized bounded-degree test. probably_at_most carries
/// the trial count so reports stay honestly uncertain; certainly_greater
/// carries the witnessing tuple.
struct DegreeTestResult {
    DegreeVerdict verdict;
    int n;
    std::size_t trials_requested;
    std::size_t trials_run;
    std::uint64_t seed;
    std::optional<std::vector<Matrix>> witness;
};

/// A nonzero g_n value over any sampled tuple proves degree > n; all-zero
/// over `trials` tuples yields the probabilistic verdict.
DegreeTestResult degree_at_most(const Matrix& a, int n, std::size_t trials, std::uint64_t seed,
                                bool allow_large = false);

struct NonvanishingResult {
    bool found;
    std::size_t attempts;
    std::uint64_t seed;
    std::vector<Matrix> ys;  // invertible assignment substituted into f
    std::vector<Matrix> xs;  // g_n parameter tuple
    std::optional<Matrix> value;  // nonzero g_n(f(ys), xs) when found
};

/// Demonstrates g_n(f(y), x) != 0 by evaluation over M_model_size(field).
/// Exhaustion is not a proof of vanishing.
NonvanishingResult gn_nonvanishing_witness(const LaurentExpr& f, int n, int model_size, const Field& field,
                                           std::size_t budget, std::uint64_t seed, bool allow_large = false);

}  // namespace msf

#endif
