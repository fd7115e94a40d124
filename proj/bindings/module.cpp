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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "maxsubfield/gn.hpp"
#include "maxsubfield/json_io.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

py::object json_to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::null:
            return py::none();
        case json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case json::value_t::number_integer:
            return py::int_(j.get<long long>());
        case json::value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case json::value_t::number_float:
            return py::float_(j.get<double>());
        case json::value_t::string:
            return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it) out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default:
            throw msf::math_error("unsupported JSON value");
    }
}

json py_to_json(const py::handle& obj) {
    if (obj.is_none()) return nullptr;
    if (py::isinstance<py::bool_>(obj)) return obj.cast<bool>();
    if (py::isinstance<py::int_>(obj)) return obj.cast<long long>();
    if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
    if (py::isinstance<py::list>(obj) || py::isinstance<py::tuple>(obj)) {
        json arr = json::array();
        for (const auto& item : obj) arr.push_back(py_to_json(item));
        return arr;
    }
    if (py::isinstance<py::dict>(obj)) {
        json o = json::object();
        for (const auto& item : obj.cast<py::dict>()) o[item.first.cast<std::string>()] = py_to_json(item.second);
        return o;
    }
    throw msf::math_error("unsupported Python value in matrix/element position");
}

msf::Matrix matrix_arg(const py::handle& obj, const msf::Field& f) {
    if (py::isinstance<py::str>(obj)) return msf::parse_matrix_spec(obj.cast<std::string>(), f);
    return msf::matrix_from_json(py_to_json(obj), f);
}

py::object wrap(const json& j) { return json_to_py(j); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact arithmetic for maximal subfields generated by polynomial and word values";
    m.attr("DEFAULT_SEED") = msf::kDefaultSeed;
    m.attr("SCHEMA_VERSION") = msf::kSchemaVersion;

    static py::exception<msf::parse_error> exc_parse(m, "ParseError");
    static py::exception<msf::search_exhausted> exc_exhausted(m, "SearchExhausted");
    static py::exception<msf::math_error> exc_math(m, "MathError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const msf::parse_error& e) {
            exc_parse(e.what());
        } catch (const msf::search_exhausted& e) {
            exc_exhausted(e.what());
        } catch (const msf::math_error& e) {
            exc_math(e.what());
        }
    });

    m.def(
        "parse_expr",
        [](const std::string& expr, const std::string& field) {
            msf::Field f = msf::Field::parse(field);
            msf::LaurentExpr e = msf::LaurentExpr::parse(expr, f);
            json terms = json::array();
            for (const auto& t : e.terms())
                terms.push_back(json{{"coeff", msf::element_to_json(t.coeff)}, {"word", t.word.to_string()}});
            return wrap(json{{"canonical", e.to_string()},
                             {"terms", terms},
                             {"is_polynomial", e.is_polynomial()},
                             {"is_word", e.is_word()},
                             {"max_var", e.max_var()}});
        },
        py::arg("expr"), py::arg("field") = "Q", "parse and canonicalize an expression");

    m.def(
        "evaluate",
        [](const std::string& expr, const py::list& at, const std::string& field) {
            msf::Field f = msf::Field::parse(field);
            msf::LaurentExpr e = msf::LaurentExpr::parse(expr, f);
            std::vector<msf::Matrix> tuple;
            for (const auto& item : at) tuple.push_back(matrix_arg(item, f));
            return wrap(msf::matrix_to_json(msf::evaluate(e, tuple)));
        },
        py::arg("expr"), py::arg("at"), py::arg("field") = "Q",
        "evaluate an expression at matrices (lists of rows, or shorthand strings)");

    m.def(
        "evaluate_quaternion",
        [](const std::string& expr, const py::list& at, const std::string& a, const std::string& b,
           const std::string& field) {
            msf::Field f = msf::Field::parse(field);
            auto alg = msf::QuaternionAlgebra::create(f, f.parse_element(a), f.parse_element(b));
            msf::LaurentExpr e = msf::LaurentExpr::parse(expr, f);
            std::vector<msf::Quaternion> tuple;
            for (const auto& item : at) tuple.push_back(msf::parse_quat_spec(item.cast<std::string>(), alg));
            return wrap(msf::quaternion_to_json(msf::evaluate(e, tuple)));
        },
        py::arg("expr"), py::arg("at"), py::arg("a"), py::arg("b"), py::arg("field") = "Q",
        "evaluate in the symbol algebra (a,b/F); quaternions given as 't,x,y,z' strings");

    m.def(
        "min_poly",
        [](const py::handle& matrix, const std::string& field) {
            msf::Field f = msf::Field::parse(field);
            msf::Matrix a = matrix_arg(matrix, f);
            return wrap(json{{"certificate", msf::certificate_to_json(msf::algebraic_degree(a))},
                             {"char_poly", msf::poly_to_json(msf::char_poly(a))}});
        },
        py::arg("matrix"), py::arg("field") = "Q", "minimal and characteristic polynomial");

    m.def(
        "gn_check_degree",
        [](const py::handle& matrix, int n, std::size_t trials, std::uint64_t seed, const std::string& field,
           bool allow_large) {
            msf::Field f = msf::Field::parse(field);
            msf::DegreeTestResult r = msf::degree_at_most(matrix_arg(matrix, f), n, trials, seed, allow_large);
            return wrap(json{{"verdict", r.verdict == msf::DegreeVerdict::certainly_greater
                                             ? "certainly_greater"
                                             : "probably_at_most"},
                             {"n", r.n},
                             {"trials_run", r.trials_run},
                             {"seed", r.seed}});
        },
        py::arg("matrix"), py::arg("n"), py::arg("trials") = 20, py::arg("seed") = msf::kDefaultSeed,
        py::arg("field") = "Q", py::arg("allow_large") = false,
        "probabilistic bounded-degree test via g_n");

    m.def(
        "gn_nonvanishing",
        [](const std::string& expr, int n, int model_size, std::size_t budget, std::uint64_t seed,
           const std::string& field) {
            msf::Field f = msf::Field::parse(field);
            msf::LaurentExpr e = msf::LaurentExpr::parse(expr, f);
            msf::NonvanishingResult r = msf::gn_nonvanishing_witness(e, n, model_size, f, budget, seed);
            json doc{{"found", r.found}, {"attempts", r.attempts}, {"seed", r.seed}};
            if (r.found) doc["value"] = msf::matrix_to_json(*r.value);
            return wrap(doc);
        },
        py::arg("expr"), py::arg("n"), py::arg("model_size") = 2, py::arg("budget") = 200,
        py::arg("seed") = msf::kDefaultSeed, py::arg("field") = "Q",
        "search assignments with g_n(f(ys), xs) != 0");

    m.def(
        "build_pm",
        [](int mm, const std::string& field, std::uint64_t seed) {
            msf::Field f = msf::Field::parse(field);
            msf::SpectrumParams p = msf::choose_spectrum(mm, f, seed);
            msf::Matrix mat = msf::build_Pm(p);
            return wrap(json{{"matrix", msf::matrix_to_json(mat)},
                             {"certificate", msf::certificate_to_json(msf::algebraic_degree(mat))}});
        },
        py::arg("m"), py::arg("field") = "Q", py::arg("seed") = msf::kDefaultSeed,
        "P_m with its degree certificate");

    m.def(
        "build_qm",
        [](int mm, const std::string& field, std::uint64_t seed) {
            msf::Field f = msf::Field::parse(field);
            msf::SpectrumParams p = msf::choose_spectrum(mm, f, seed);
            msf::Matrix mat = msf::build_Qm(p);
            return wrap(json{{"matrix", msf::matrix_to_json(mat)},
                             {"certificate", msf::certificate_to_json(msf::algebraic_degree(mat))}});
        },
        py::arg("m"), py::arg("field") = "Q", py::arg("seed") = msf::kDefaultSeed,
        "Q_m with its degree certificate");

    m.def(
        "preimage",
        [](const std::string& expr, const py::handle& target, const std::string& field, std::uint64_t seed,
           std::size_t retries) {
            msf::Field f = msf::Field::parse(field);
            msf::LaurentExpr e = msf::LaurentExpr::parse(expr, f);
            auto classified = msf::MultilinearTable::classify(e, e.max_var());
            if (std::holds_alternative<msf::MultilinearTable::Rejection>(classified))
                throw msf::math_error("expression is not multilinear: " +
                                      std::get<msf::MultilinearTable::Rejection>(classified).reason);
            auto tuple = msf::multilinear_preimage_2x2(std::get<msf::MultilinearTable>(classified),
                                                       matrix_arg(target, f), seed, retries);
            json assignment = json::array();
            for (const auto& t : tuple) assignment.push_back(msf::matrix_to_json(t));
            return wrap(json{{"assignment", assignment}, {"verified", true}});
        },
        py::arg("expr"), py::arg("target"), py::arg("field") = "Q", py::arg("seed") = msf::kDefaultSeed,
        py::arg("retries") = 10, "solve f(T_1..T_n) = A on 2x2 matrices, trace(A) = 0");

    m.def(
        "word_preimage",
        [](const std::string& word, const py::handle& target, const std::string& field, std::uint64_t seed,
           std::size_t budget) {
            msf::Field f = msf::Field::parse(field);
            msf::LaurentExpr e = msf::LaurentExpr::parse(word, f);
            if (!e.is_word()) throw msf::math_error("expression is not a group word");
            auto tuple = msf::word_preimage_sl2(e.word(), matrix_arg(target, f), seed, budget);
            json assignment = json::array();
            for (const auto& t : tuple) assignment.push_back(msf::matrix_to_json(t));
            return wrap(json{{"assignment", assignment}, {"verified", true}});
        },
        py::arg("word"), py::arg("target"), py::arg("field") = "Q", py::arg("seed") = msf::kDefaultSeed,
        py::arg("budget") = 10000, "solve w(S_1..S_n) = B in SL_2 for split B, trace outside {2,-2}");

    m.def(
        "max_subfield",
        [](const std::string& model, const std::string& expr, const std::string& field, std::uint64_t seed,
           std::size_t trials, std::size_t retries, std::size_t budget) {
            msf::Field f = msf::Field::parse(field);
            msf::Budgets budgets{trials, retries, budget};
            msf::WitnessReport rep = msf::maximal_subfield_witness(msf::parse_model_spec(model, f),
                                                                   msf::LaurentExpr::parse(expr, f), seed, budgets);
            return wrap(msf::witness_report_to_json(rep));
        },
        py::arg("model"), py::arg("expr"), py::arg("field") = "Q", py::arg("seed") = msf::kDefaultSeed,
        py::arg("trials") = 100, py::arg("retries") = 10, py::arg("budget") = 10000,
        "construct a maximal-subfield generator from polynomial or word values");

    m.def(
        "audit_bound",
        [](const std::string& model, const std::string& expr, const std::string& field, std::size_t trials,
           std::uint64_t seed) {
            msf::Field f = msf::Field::parse(field);
            msf::AuditReport rep = msf::degree_bound_audit(msf::parse_model_spec(model, f),
                                                           msf::LaurentExpr::parse(expr, f), trials, seed);
            return wrap(msf::audit_report_to_json(rep));
        },
        py::arg("model"), py::arg("expr"), py::arg("field") = "Q", py::arg("trials") = 100,
        py::arg("seed") = msf::kDefaultSeed, "sample value degrees and check dim <= d^2");

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "dev";
#endif
}
