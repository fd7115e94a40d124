// Test-only oracles, kept independent of the library's evaluation paths.

#ifndef MAXSUBFIELD_TESTS_ORACLES_HPP
#define MAXSUBFIELD_TESTS_ORACLES_HPP

#include <algorithm>
#include <numeric>
#include <vector>

#include "maxsubfield/expr.hpp"

namespace msf::oracles {

inline int permutation_sign(const std::vector<int>& perm) {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

/// Naive lexicographic g_n: every permutation term rebuilt from scratch, no
/// prefix sharing. Summed over the lex-index range [from, to) so merge
/// properties can be checked; pass the full range for the plain oracle.
template <AlgebraElement A>
A eval_gn_lex_range(const A& a, const std::vector<A>& rs, std::size_t from, std::size_t to) {
    int n = static_cast<int>(rs.size());
    std::vector<A> pw;
    pw.push_back(a.ring_one());
    for (int i = 1; i <= n; ++i) pw.push_back(pw.back() * a);
    std::vector<int> perm(n + 1);
    std::iota(perm.begin(), perm.end(), 0);
    A acc = a.ring_zero();
    std::size_t index = 0;
    do {
        if (index >= from && index < to) {
            A term = pw[perm[0]];
            for (int j = 1; j <= n; ++j) term = term * rs[j - 1] * pw[perm[j]];
            acc = permutation_sign(perm) > 0 ? acc + term : acc - term;
        }
        ++index;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

template <AlgebraElement A>
A eval_gn_naive(const A& a, const std::vector<A>& rs) {
    std::size_t total = 1;
    for (std::size_t i = 2; i <= rs.size() + 1; ++i) total *= i;
    return eval_gn_lex_range(a, rs, 0, total);
}

}  // namespace msf::oracles

#endif
