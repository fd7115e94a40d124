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

#include "maxsubfield/gn.hpp"

namespace msf {

DegreeTestResult degree_at_most(const Matrix& a, int n, std::size_t trials, std::uint64_t seed,
                                bool allow_large) {
    if (trials < 1) throw math_error("trials must be >= 1");
    if (n < 1) throw math_error("n must be >= 1");
    Rng rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<Matrix> rs;
        rs.reserve(n);
        for (int i = 0; i < n; ++i) rs.push_back(Matrix::random(a.size(), a.field(), rng));
        Matrix v = eval_gn(a, rs, allow_large);
        if (!v.is_zero())
            return DegreeTestResult{DegreeVerdict::certainly_greater, n, trials, t + 1, seed, std::move(rs)};
    }
    return DegreeTestResult{DegreeVerdict::probably_at_most, n, trials, trials, seed, std::nullopt};
}

NonvanishingResult gn_nonvanishing_witness(const LaurentExpr& f, int n, int model_size, const Field& field,
                                           std::size_t budget, std::uint64_t seed, bool allow_large) {
    if (n < 1) throw math_error("n must be >= 1");
    if (model_size < 1) throw math_error("model size must be >= 1");
    if (f.is_zero()) throw math_error("the zero polynomial vanishes identically");
    LaurentExpr fe = f.field() == field ? f : f.embed(field);
    int arity = std::max(fe.max_var(), 1);
    Rng rng(seed);
    for (std::size_t attempt = 0; attempt < budget; ++attempt) {
        std::vector<Matrix> ys;
        ys.reserve(arity);
        for (int i = 0; i < arity; ++i) ys.push_back(Matrix::random_invertible(model_size, field, rng));
        Matrix value = evaluate(fe, ys);
        std::vector<Matrix> xs;
        xs.reserve(n);
        for (int i = 0; i < n; ++i) xs.push_back(Matrix::random(model_size, field, rng));
        Matrix g = eval_gn(value, xs, allow_large);
        if (!g.is_zero())
            return NonvanishingResult{true, attempt + 1, seed, std::move(ys), std::move(xs), std::move(g)};
    }
    return NonvanishingResult{false, budget, seed, {}, {}, std::nullopt};
}

}  // namespace msf
