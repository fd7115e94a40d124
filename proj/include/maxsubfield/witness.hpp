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

#ifndef MAXSUBFIELD_WITNESS_HPP
#define MAXSUBFIELD_WITNESS_HPP

#include <utility>
#include <variant>

#include "maxsubfield/expr.hpp"
#include "maxsubfield/poly.hpp"
#include "maxsubfield/quaternion.hpp"

namespace msf {

/// Spectrum data (a_1..a_s, b_1..b_s) behind P_m and Q_m.
/// Constraints: a_i, b_i outside {0,1}; char != 2: +-a_1..+-a_s pairwise
/// distinct and b_1, b_1^-1, ..., b_s, b_s^-1 pairwise distinct with
/// b_i != -1; char 2: a_i pairwise distinct nonzero.
struct SpectrumParams {
    int m = 0;
    int s = 0;
    Field field;
    std::vector<FieldElement> a_values;
    std::vector<FieldElement> b_values;
    std::uint64_t seed = kDefaultSeed;
};

/// Canonical greedy choice (smallest admissible candidates in the fixed
/// enumeration order), verified post-hoc; throws math_error with the minimum
/// usable field size when the field cannot satisfy the constraints. The seed
/// is echoed into the params for reporting.
SpectrumParams choose_spectrum(int m, const Field& field, std::uint64_t seed);

/// Post-hoc constraint verifier (doubles as the test oracle).
bool spectrum_constraints_ok(const SpectrumParams& params);

/// P_m = diag(A_1..A_s[, 0]) with A_i = [[a_i, 1], [0, -a_i]]; algebraic of
/// degree exactly m.
Matrix build_Pm(const SpectrumParams& params);
/// Q_m = diag(B_1..B_s[, 1]) with B_i = diag(b_i, b_i^-1); algebraic of
/// degree exactly m and invertible.
Matrix build_Qm(const SpectrumParams& params);

enum class Centrality { noncentral_certain, appears_central };

struct CentralityReport {
    Centrality verdict;
    std::size_t trials_run = 0;
    std::uint64_t seed = 0;
    std::vector<Matrix> witness;  // tuple with non-scalar value, when certain
    Matrix value;
};

/// Any non-scalar value of f on M_2 proves non-centrality; an all-central
/// sample of `trials` tuples yields only the probabilistic verdict.
CentralityReport noncentral_on_M2(const MultilinearTable& f, const Field& field, std::size_t trials,
                                  std::uint64_t seed);

/// Matrices T_1..T_n with f(T_1..T_n) = A, A trace-zero (Kanel-Belov +
/// Malev + Rowen image theorem made effective at desk scale). The slot-1 map
/// T_1 |-> f(T_1, tail) is linear; tails are sampled diagonal in the frame
/// that makes A a hollow companion matrix, where that operator acts
/// invertibly on the antidiagonal plane. Results are re-verified by
/// evaluation before being returned.
std::vector<Matrix> multilinear_preimage_2x2(const MultilinearTable& f, const Matrix& A, std::uint64_t seed,
                                             std::size_t retries);

/// Matrices S_1..S_n in SL_2 with w(S_1..S_n) = B, for split B with
/// trace != +-2. Trace matching runs over one-parameter transvection
/// families S_1(t) = [[1,t],[0,1]] S_1 whose trace polynomial is recovered
/// exactly and solved for t; the matched value is conjugated onto B through
/// eigenvector bases (word maps are conjugation-equivariant).
std::vector<Matrix> word_preimage_sl2(const Word& w, const Matrix& B, std::uint64_t seed, std::size_t budget);

enum class PadKind { zero, one };

/// Lifts s per-block 2x2 assignments of common arity n to an m x m
/// assignment via T_j = diag(T_{1j}, ..., T_{sj}[, pad]); evaluation then
/// produces the block diagonal of the per-block values.
std::vector<Matrix> assemble_block_witness(const std::vector<std::vector<Matrix>>& blocks, int m, PadKind pad);

struct MatrixModel {
    int m = 0;
    Field field;
};

struct QuatModel {
    std::shared_ptr<const QuaternionAlgebra> algebra;
};

using Model = std::variant<MatrixModel, QuatModel>;

mpz_class model_dimension(const Model& model);
std::string model_to_string(const Model& model);

struct Budgets {
    std::size_t trials = 100;     // sampling budget (centrality, quaternion search, audits)
    std::size_t retries = 10;     // linear-solve preimage resamples
    std::size_t budget = 10000;   // word-search evaluation budget
};

struct WitnessReport {
    std::string expression;  // canonical text
    std::string kind;        // "multilinear" | "word"
    Model model;
    std::string division_evidence;  // quaternion models: "preset" | "heuristic(<bound>)"
    std::variant<std::vector<Matrix>, std::vector<Quaternion>> assignment;
    std::variant<Matrix, Quaternion> value;
    DegreeCertificate certificate;
    bool maximal = false;  // certificate.degree^2 == dim_F(model)
    mpz_class model_dim;
    std::uint64_t seed = 0;
    Budgets budgets;
    std::vector<std::string> caveats;
};

/// The end-to-end construction behind the main theorems: matrix models
/// realize P_m (multilinear route) or Q_m (word route) through spectrum
/// choice, 2x2 preimages and block assembly, then certify degree m;
/// quaternion models sample assignments until the value is non-central and
/// certify degree 2. `maximal` follows the dimension criterion
/// dim_F K = sqrt(dim_F D).
WitnessReport maximal_subfield_witness(const Model& model, const LaurentExpr& expr, std::uint64_t seed,
                                       const Budgets& budgets = {});

struct AuditReport {
    std::string expression;
    Model model;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    int max_degree_observed = 0;  // d-hat
    mpz_class model_dim;
    bool bound_holds = false;   // dim <= d-hat^2
    bool equality = false;      // dim == d-hat^2
    bool insufficient = false;  // d-hat^2 < dim: sampling missed the guaranteed degree-m value
    std::vector<std::size_t> degree_histogram;  // index = degree
};

/// Samples values of expr and reports the largest observed algebraic degree
/// d-hat together with the dimension bound check dim <= d-hat^2.
AuditReport degree_bound_audit(const Model& model, const LaurentExpr& expr, std::size_t trials,
                               std::uint64_t seed);

// --- SL_2 helpers shared with tests ---------------------------------------

Matrix random_sl2(const Field& field, Rng& rng);

/// Eigenvalues of a 2x2 matrix when they are distinct and lie in the field.
std::optional<std::pair<FieldElement, FieldElement>> split_eigenvalues(const Matrix& b);

/// g with g v g^-1 = b, where v and b are split with the same (distinct)
/// eigenvalues lam, mu.
Matrix conjugating_matrix(const Matrix& v, const Matrix& b, const FieldElement& lam, const FieldElement& mu);

}  // namespace msf

#endif
