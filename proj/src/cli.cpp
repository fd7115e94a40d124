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

#include "maxsubfield/cli.hpp"

#include <CLI11.hpp>

#include "maxsubfield/gn.hpp"
#include "maxsubfield/json_io.hpp"

namespace msf::cli {

namespace {

using nlohmann::json;

struct Common {
    std::string field_desc = "Q";
    std::uint64_t seed = kDefaultSeed;
    bool json_out = false;

    Field field() const { return Field::parse(field_desc); }
    void attach(CLI::App* cmd) {
        cmd->add_option("--field", field_desc, "field descriptor: Q | Fp:<p> | F2k:<k> | Fpk:<p>:<k>")
            ->capture_default_str();
        cmd->add_option("--seed", seed, "RNG seed; identical flags and seed give byte-identical output")
            ->capture_default_str();
        cmd->add_flag("--json", json_out, "emit exactly one JSON document on stdout");
    }
};

void emit(const Common& c, std::ostream& out, const json& doc, const std::string& human) {
    if (c.json_out)
        out << doc.dump() << "\n";
    else
        out << human;
}

json command_doc(const std::string& command, const Common& c, json result) {
    return json{{"schema_version", kSchemaVersion},
                {"command", command},
                {"seed", c.seed},
                {"result", std::move(result)}};
}

std::string matrix_human(const Matrix& m) { return m.to_string(); }

// ---- subcommand setup -------------------------------------------------------

struct Invocation {
    std::ostream& out;
    int exit_code = kOk;
};

void setup_parse(CLI::App& app, std::shared_ptr<Common> c, Invocation* inv) {
    auto cmd = app.add_subcommand("parse", "parse an expression and print its canonical form");
    auto expr_text = std::make_shared<std::string>();
    cmd->add_option("--expr", *expr_text, "expression per the published grammar")->required();
    c->attach(cmd);
    cmd->callback([c, expr_text, inv] {
        Field f = c->field();
        LaurentExpr e = LaurentExpr::parse(*expr_text, f);
        json terms = json::array();
        for (const auto& t : e.terms())
            terms.push_back(json{{"coeff", element_to_json(t.coeff)}, {"word", t.word.to_string()}});
        json result{{"canonical", e.to_string()},  {"field", field_to_json(f)},
                    {"terms", terms},              {"is_polynomial", e.is_polynomial()},
                    {"is_word", e.is_word()},      {"max_var", e.max_var()}};
        emit(*c, inv->out, command_doc("parse", *c, result), e.to_string() + "\n");
    });
}

void setup_eval(CLI::App& app, std::shared_ptr<Common> c, Invocation* inv) {
    auto cmd = app.add_subcommand("eval", "evaluate an expression at matrices or quaternions");
    auto expr_text = std::make_shared<std::string>();
    auto model_spec = std::make_shared<std::string>("matrix");
    auto at = std::make_shared<std::vector<std::string>>();
    cmd->add_option("--expr", *expr_text, "expression to evaluate")->required();
    cmd->add_option("--model", *model_spec, "matrix (size from the arguments) or quat:<a>,<b>")
        ->capture_default_str();
    cmd->add_option("--at", *at, "assignment for x1, x2, ... (repeat the flag per variable)")->required();
    c->attach(cmd);
    cmd->callback([c, expr_text, model_spec, at, inv] {
        Field f = c->field();
        LaurentExpr e = LaurentExpr::parse(*expr_text, f);
        if (model_spec->rfind("quat:", 0) == 0) {
            auto model = std::get<QuatModel>(parse_model_spec(*model_spec, f));
            std::vector<Quaternion> tuple;
            for (const auto& spec : *at) tuple.push_back(parse_quat_spec(spec, model.algebra));
            Quaternion v = evaluate(e, tuple);
            json result{{"expression", e.to_string()},
                        {"model", model_to_json(model)},
                        {"value", quaternion_to_json(v)}};
            emit(*c, inv->out, command_doc("eval", *c, result), v.to_string() + "\n");
        } else {
            std::vector<Matrix> tuple;
            for (const auto& spec : *at) tuple.push_back(parse_matrix_spec(spec, f));
            for (const auto& m : tuple)
                if (m.size() != tuple.front().size()) throw math_error("assignment matrices must share one size");
            Matrix v = evaluate(e, tuple);
            json result{{"expression", e.to_string()},
                        {"model", json{{"type", "matrix"}, {"m", v.size()}, {"field", field_to_json(f)}}},
                        {"value", matrix_to_json(v)}};
            emit(*c, inv->out, command_doc("eval", *c, result), matrix_human(v) + "\n");
        }
    });
}

void setup_minpoly(CLI::App& app, std::shared_ptr<Common> c, Invocation* inv) {
    auto cmd = app.add_subcommand("minpoly", "minimal and characteristic polynomial of a matrix");
    auto spec = std::make_shared<std::string>();
    cmd->add_option("--matrix", *spec, "matrix (shorthand or JSON)")->required();
    c->attach(cmd);
    cmd->callback([c, spec, inv] {
        Field f = c->field();
        Matrix m = parse_matrix_spec(*spec, f);
        DegreeCertificate cert = algebraic_degree(m);
        Poly cp = char_poly(m);
        json result{{"matrix", matrix_to_json(m)},
                    {"field", field_to_json(f)},
                    {"certificate", certificate_to_json(cert)},
                    {"char_poly", poly_to_json(cp)}};
        emit(*c, inv->out, command_doc("minpoly", *c, result),
             "min poly: " + cert.minimal_polynomial.to_string() + " (degree " + std::to_string(cert.degree) +
                 ")\nchar poly: " + cp.to_string() + "\n");
    });
}

void setup_gn_check(CLI::App& app, std::shared_ptr<Common> c, Invocation* inv) {
    auto cmd = app.add_subcommand(
        "gn-check", "bounded-degree test via g_n (--matrix) or a g_n non-vanishing witness (--expr)");
    auto n = std::make_shared<int>(1);
    auto spec = std::make_shared<std::string>();
    auto expr_text = std::make_shared<std::string>();
    auto trials = std::make_shared<std::size_t>(20);
    auto budget = std::make_shared<std::size_t>(200);
    auto model_size = std::make_shared<int>(2);
    auto allow_large = std::make_shared<bool>(false);
    cmd->add_option("--n", *n, "degree level to test")->required();
    auto mopt = cmd->add_option("--matrix", *spec, "matrix whose degree is tested");
    auto eopt = cmd->add_option("--expr", *expr_text, "Laurent polynomial for the non-vanishing search");
    cmd->add_option("--trials", *trials, "tuples sampled in the degree test")->capture_default_str();
    cmd->add_option("--budget", *budget, "assignments sampled in the non-vanishing search")->capture_default_str();
    cmd->add_option("--model-size", *model_size, "matrix size of the evaluation model (--expr mode)")
        ->capture_default_str();
    cmd->add_flag("--allow-large-n", *allow_large, "lift the n <= 8 factorial guard");
    mopt->excludes(eopt);
    c->attach(cmd);
    cmd->callback([c, n, spec, expr_text, trials, budget, model_size, allow_large, inv] {
        Field f = c->field();
        if (!spec->empty()) {
            Matrix a = parse_matrix_spec(*spec, f);
            DegreeTestResult r = degree_at_most(a, *n, *trials, c->seed, *allow_large);
            json result{{"mode", "degree"},
                        {"n", r.n},
                        {"verdict", r.verdict == DegreeVerdict::certainly_greater ? "certainly_greater"
                                                                                  : "probably_at_most"},
                        {"trials_requested", r.trials_requested},
                        {"trials_run", r.trials_run},
                        {"field", field_to_json(f)},
                        {"seed", r.seed}};
            if (r.witness) {
                json w = json::array();
                for (const auto& m : *r.witness) w.push_back(matrix_to_json(m));
                result["witness"] = w;
            }
            emit(*c, inv->out, command_doc("gn-check", *c, result),
                 std::string(r.verdict == DegreeVerdict::certainly_greater ? "certainly_greater"
                                                                           : "probably_at_most") +
                     " (n = " + std::to_string(r.n) + ", trials = " + std::to_string(r.trials_run) + ")\n");
        } else if (!expr_text->empty()) {
            LaurentExpr e = LaurentExpr::parse(*expr_text, f);
            NonvanishingResult r = gn_nonvanishing_witness(e, *n, *model_size, f, *budget, c->seed, *allow_large);
            json result{{"mode", "nonvanishing"}, {"n", *n},          {"found", r.found},
                        {"attempts", r.attempts}, {"seed", r.seed},   {"field", field_to_json(f)},
                        {"model_size", *model_size}};
            if (r.found) {
                json ys = json::array(), xs = json::array();
                for (const auto& m : r.ys) ys.push_back(matrix_to_json(m));
                for (const auto& m : r.xs) xs.push_back(matrix_to_json(m));
                result["ys"] = ys;
                result["xs"] = xs;
                result["value"] = matrix_to_json(*r.value);
            }
            emit(*c, inv->out, command_doc("gn-check", *c, result),
                 r.found ? "witness found after " + std::to_string(r.attempts) + " attempts\n"
                         : "exhausted after " + std::to_string(r.attempts) + " attempts (not a vanishing proof)\n");
            if (!r.found) inv->exit_code = kExhausted;
        } else {
            throw CLI::ValidationError("gn-check", "one of --matrix or --expr is required");
        }
    });
}

void setup_build(CLI::App& app, std::shared_ptr<Common> c, Invocation* inv, bool pm) {
    auto cmd = app.add_subcommand(pm ? "build-pm" : "build-qm",
                                  pm ? "build P_m and certify its algebraic degree"
                                     : "build Q_m and certify its algebraic degree");
    auto m = std::make_shared<int>(0);
    cmd->add_option("--m", *m, "target size m >= 2")->required();
    c->attach(cmd);
    cmd->callback([c, m, inv, pm] {
        Field f = c->field();
        SpectrumParams params = choose_spectrum(*m, f, c->seed);
        Matrix mat = pm ? build_Pm(params) : build_Qm(params);
        DegreeCertificate cert = algebraic_degree(mat);
        json spectrum{{"m", params.m}, {"s", params.s}};
        json av = json::array(), bv = json::array();
        for (const auto& a : params.a_values) av.push_back(element_to_json(a));
        for (const auto& b : params.b_values) bv.push_back(element_to_json(b));
        spectrum["a_values"] = av;
        spectrum["b_values"] = bv;
        json result{{"matrix", matrix_to_json(mat)},
                    {"field", field_to_json(f)},
                    {"spectrum", spectrum},
                    {"certificate", certificate_to_json(cert)},
                    {"char_poly", poly_to_json(char_poly(mat))}};
        emit(*c, inv->out, command_doc(pm ? "build-pm" : "build-qm", *c, result),
             matrix_human(mat) + "\nmin poly: " + cert.minimal_polynomial.to_string() + " (degree " +
                 std::to_string(cert.degree) + ")\n");
    });
}

void setup_preimage(CLI::App& app, std::shared_ptr<Common> c, Invocation* inv) {
    auto cmd = app.add_subcommand("preimage", "solve f(T_1..T_n) = A on M_2 for multilinear f, trace(A) = 0");
    auto expr_text = std::make_shared<std::string>();
    auto target = std::make_shared<std::string>();
    auto retries = std::make_shared<std::size_t>(10);
    cmd->add_option("--expr", *expr_text, "multilinear polynomial")->required();
    cmd->add_option("--target", *target, "trace-zero 2x2 target matrix")->required();
    cmd->add_option("--retries", *retries, "tail resamples before giving up")->capture_default_str();
    c->attach(cmd);
    cmd->callback([c, expr_text, target, retries, inv] {
        Field f = c->field();
        LaurentExpr e = LaurentExpr::parse(*expr_text, f);
        auto classified = MultilinearTable::classify(e, e.max_var());
        if (std::holds_alternative<MultilinearTable::Rejection>(classified)) {
            const auto& rej = std::get<MultilinearTable::Rejection>(classified);
            throw math_error("expression is not multilinear: " + rej.reason + " (term " + rej.offending_term +
                             ")");
        }
        const auto& table = std::get<MultilinearTable>(classified);
        Matrix A = parse_matrix_spec(*target, f);
        std::vector<Matrix> tuple = multilinear_preimage_2x2(table, A, c->seed, *retries);
        json assignment = json::array();
        for (const auto& t : tuple) assignment.push_back(matrix_to_json(t));
        json result{{"expression", e.to_string()},   {"target", matrix_to_json(A)},
                    {"assignment", assignment},      {"field", field_to_json(f)},
                    {"verified", true},              {"retries", *retries}};
        std::string human = "preimage found (verified by re-evaluation):\n";
        for (std::size_t i = 0; i < tuple.size(); ++i)
            human += "T" + std::to_string(i + 1) + " = " + matrix_human(tuple[i]) + "\n";
        emit(*c, inv->out, command_doc("preimage", *c, result), human);
    });
}

void setup_word_preimage(CLI::App& app, std::shared_ptr<Common> c, Invocation* inv) {
    auto cmd = app.add_subcommand("word-preimage",
                                  "solve w(S_1..S_n) = B in SL_2 for a non-trivial word and split B");
    auto word_text = std::make_shared<std::string>();
    auto target = std::make_shared<std::string>();
    auto budget = std::make_shared<std::size_t>(10000);
    cmd->add_option("--word", *word_text, "group word (single monomial with coefficient 1)")->required();
    cmd->add_option("--target", *target, "SL_2 target with trace outside {2,-2}, split over the field")
        ->required();
    cmd->add_option("--budget", *budget, "word-evaluation budget")->capture_default_str();
    c->attach(cmd);
    cmd->callback([c, word_text, target, budget, inv] {
        Field f = c->field();
        LaurentExpr e = LaurentExpr::parse(*word_text, f);
        if (!e.is_word()) throw math_error("expression is not a group word (single term with coefficient 1)");
        Matrix B = parse_matrix_spec(*target, f);
        std::vector<Matrix> tuple = word_preimage_sl2(e.word(), B, c->seed, *budget);
        json assignment = json::array();
        for (const auto& t : tuple) assignment.push_back(matrix_to_json(t));
        json result{{"word", e.to_string()},      {"target", matrix_to_json(B)},
                    {"assignment", assignment},   {"field", field_to_json(f)},
                    {"verified", true},           {"budget", *budget}};
        std::string human = "SL_2 preimage found (verified by re-evaluation):\n";
        for (std::size_t i = 0; i < tuple.size(); ++i)
            human += "S" + std::to_string(i + 1) + " = " + matrix_human(tuple[i]) + "\n";
        emit(*c, inv->out, command_doc("word-preimage", *c, result), human);
    });
}

void setup_max_subfield(CLI::App& app, std::shared_ptr<Common> c, Invocation* inv) {
    auto cmd = app.add_subcommand("max-subfield",
                                  "construct a value generating a maximal subfield, with certificate");
    auto model_spec = std::make_shared<std::string>();
    auto expr_text = std::make_shared<std::string>();
    auto budgets = std::make_shared<Budgets>();
    cmd->add_option("--model", *model_spec, "matrix:<m> or quat:<a>,<b>")->required();
    cmd->add_option("--expr", *expr_text, "multilinear polynomial or non-trivial word")->required();
    cmd->add_option("--trials", budgets->trials, "sampling budget")->capture_default_str();
    cmd->add_option("--retries", budgets->retries, "preimage retries")->capture_default_str();
    cmd->add_option("--budget", budgets->budget, "word-search budget")->capture_default_str();
    c->attach(cmd);
    cmd->callback([c, model_spec, expr_text, budgets, inv] {
        Field f = c->field();
        Model model = parse_model_spec(*model_spec, f);
        LaurentExpr e = LaurentExpr::parse(*expr_text, f);
        WitnessReport rep = maximal_subfield_witness(model, e, c->seed, *budgets);
        std::string human = "model: " + model_to_string(rep.model) + "\nkind: " + rep.kind +
                            "\nmin poly: " + rep.certificate.minimal_polynomial.to_string() + " (degree " +
                            std::to_string(rep.certificate.degree) + ")\nmaximal: " +
                            (rep.maximal ? "true" : "false") + "\n";
        emit(*c, inv->out, command_doc("max-subfield", *c, witness_report_to_json(rep)), human);
    });
}

void setup_audit(CLI::App& app, std::shared_ptr<Common> c, Invocation* inv) {
    auto cmd = app.add_subcommand("audit-bound",
                                  "sample value degrees and check the dimension bound dim <= d^2");
    auto model_spec = std::make_shared<std::string>();
    auto expr_text = std::make_shared<std::string>();
    auto trials = std::make_shared<std::size_t>(100);
    cmd->add_option("--model", *model_spec, "matrix:<m> or quat:<a>,<b>")->required();
    cmd->add_option("--expr", *expr_text, "expression whose values are sampled")->required();
    cmd->add_option("--trials", *trials, "number of sampled assignments")->capture_default_str();
    c->attach(cmd);
    cmd->callback([c, model_spec, expr_text, trials, inv] {
        Field f = c->field();
        Model model = parse_model_spec(*model_spec, f);
        LaurentExpr e = LaurentExpr::parse(*expr_text, f);
        AuditReport rep = degree_bound_audit(model, e, *trials, c->seed);
        std::string human = "model: " + model_to_string(rep.model) + "\nd-hat: " +
                            std::to_string(rep.max_degree_observed) + "\ndim <= d-hat^2: " +
                            (rep.bound_holds ? std::string("holds") : std::string("not certified")) +
                            (rep.equality ? " (equality)" : "") +
                            (rep.insufficient ? " (insufficient sampling)" : "") + "\n";
        emit(*c, inv->out, command_doc("audit-bound", *c, audit_report_to_json(rep)), human);
    });
}

json error_doc(const std::string& type, const std::string& message) {
    return json{{"schema_version", kSchemaVersion}, {"error", json{{"type", type}, {"message", message}}}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact arithmetic for maximal subfields generated by polynomial and word values"};
    app.require_subcommand(1);
    auto common = std::make_shared<Common>();
    Invocation inv{out};

    setup_parse(app, common, &inv);
    setup_eval(app, common, &inv);
    setup_minpoly(app, common, &inv);
    setup_gn_check(app, common, &inv);
    setup_build(app, common, &inv, true);
    setup_build(app, common, &inv, false);
    setup_preimage(app, common, &inv);
    setup_word_preimage(app, common, &inv);
    setup_max_subfield(app, common, &inv);
    setup_audit(app, common, &inv);

    std::vector<std::string> argv_store;
    argv_store.push_back("maxsubfield");
    for (const auto& a : args) argv_store.push_back(a);
    std::vector<const char*> argv;
    for (const auto& s : argv_store) argv.push_back(s.c_str());

    auto report = [&](const std::string& type, const std::string& message, int code) {
        if (common->json_out)
            out << error_doc(type, message).dump() << "\n";
        else
            err << "error (" << type << "): " << message << "\n";
        return code;
    };

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        return report("usage", e.what(), kUsageError);
    } catch (const parse_error& e) {
        return report("syntax", e.what(), kUsageError);
    } catch (const search_exhausted& e) {
        return report("exhausted", e.what(), kExhausted);
    } catch (const math_error& e) {
        return report("precondition", e.what(), kPreconditionError);
    } catch (const std::exception& e) {
        return report("internal", e.what(), kInternalError);
    }
    return inv.exit_code;
}

}  // namespace msf::cli
