#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "maxsubfield/cli.hpp"
#include "maxsubfield/json_io.hpp"

using namespace msf;
using nlohmann::json;

namespace {
struct CliResult {
    int code;
    std::string out;
    std::string err;
    json doc() const { return json::parse(out); }
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}
}  // namespace

TEST_CASE("parse subcommand canonicalizes") {
    CliResult r = run_cli({"parse", "--expr", "x2*x1 - x1*x2 + x1*x2", "--json"});
    CHECK(r.code == cli::kOk);
    json doc = r.doc();
    CHECK(doc["schema_version"] == kSchemaVersion);
    CHECK(doc["command"] == "parse");
    CHECK(doc["result"]["canonical"] == "x2*x1");
    CHECK(doc["result"]["is_word"] == true);

    CliResult human = run_cli({"parse", "--expr", "x1*x2 - x2*x1"});
    CHECK(human.code == cli::kOk);
    CHECK(human.out == "x1*x2 - x2*x1\n");
}

TEST_CASE("eval subcommand evaluates at shorthand matrices") {
    CliResult r = run_cli({"eval", "--expr", "x1*x2 - x2*x1", "--at", "diag:1,0", "--at", "e12", "--json"});
    CHECK(r.code == cli::kOk);
    json value = r.doc()["result"]["value"];
    CHECK(value["n"] == 2);
    CHECK(value["entries"] == json::array({"0", "1", "0", "0"}));
}

TEST_CASE("eval in a quaternion model") {
    CliResult r = run_cli({"eval", "--expr", "x1*x2 - x2*x1", "--model", "quat:-1,-1", "--at", "0,1,0,0",
                           "--at", "0,0,1,0", "--json"});
    CHECK(r.code == cli::kOk);
    json value = r.doc()["result"]["value"];
    CHECK(value["z"] == "2");  // [i, j] = 2k
    CHECK(value["t"] == "0");
}

TEST_CASE("minpoly subcommand") {
    CliResult r = run_cli({"minpoly", "--matrix", "identity3", "--json"});
    CHECK(r.code == cli::kOk);
    CHECK(r.doc()["result"]["certificate"]["degree"] == 1);

    CliResult c = run_cli({"minpoly", "--matrix", "companion:-2,0,0", "--json"});
    CHECK(c.doc()["result"]["certificate"]["degree"] == 3);
    CHECK(c.doc()["result"]["certificate"]["min_poly"]["text"] == "x^3 - 2");
}

TEST_CASE("gn-check degree mode on the identity") {
    CliResult r = run_cli({"gn-check", "--n", "1", "--matrix", "identity2", "--json"});
    CHECK(r.code == cli::kOk);
    json res = r.doc()["result"];
    CHECK(res["verdict"] == "probably_at_most");
    CHECK(res["trials_run"].get<int>() >= 1);
    CHECK(res["seed"] == kDefaultSeed);
}

TEST_CASE("gn-check nonvanishing mode exhausts honestly") {
    // every 2x2 matrix has degree <= 2, so the level-2 search must exhaust
    CliResult r = run_cli({"gn-check", "--n", "2", "--expr", "x1", "--budget", "30", "--field", "Fp:10007",
                           "--json"});
    CHECK(r.code == cli::kExhausted);
    CHECK(r.doc()["result"]["found"] == false);

    CliResult found = run_cli({"gn-check", "--n", "1", "--expr", "x1*x2 - x2*x1", "--field", "Fp:10007",
                               "--json"});
    CHECK(found.code == cli::kOk);
    CHECK(found.doc()["result"]["found"] == true);
}

TEST_CASE("build-pm emits the matrix and a degree-m certificate") {
    CliResult r = run_cli({"build-pm", "--m", "4", "--field", "Q", "--json"});
    CHECK(r.code == cli::kOk);
    json res = r.doc()["result"];
    CHECK(res["certificate"]["degree"] == 4);
    CHECK(res["matrix"]["n"] == 4);
    CHECK(res["spectrum"]["a_values"] == json::array({"2", "3"}));

    CliResult q3 = run_cli({"build-qm", "--m", "3", "--field", "Q", "--json"});
    CHECK(q3.doc()["result"]["certificate"]["degree"] == 3);
    CHECK(q3.doc()["result"]["matrix"]["entries"] == json::array({"2", "0", "0", "0", "1/2", "0", "0", "0", "1"}));
}

TEST_CASE("preimage subcommand verifies its output") {
    CliResult r = run_cli({"preimage", "--expr", "x1*x2 - x2*x1", "--target", "e12", "--field", "Fp:10007",
                           "--json"});
    CHECK(r.code == cli::kOk);
    json res = r.doc()["result"];
    CHECK(res["verified"] == true);
    CHECK(res["assignment"].size() == 2);

    // nonzero trace: precondition violation, exit 4
    CliResult bad = run_cli({"preimage", "--expr", "x1*x2 - x2*x1", "--target", "identity2", "--json"});
    CHECK(bad.code == cli::kPreconditionError);
    CHECK(bad.doc()["error"]["type"] == "precondition");
}

TEST_CASE("word-preimage subcommand") {
    CliResult r = run_cli({"word-preimage", "--word", "x1*x2*x1^-1*x2^-1", "--target", "diag:2,5004",
                           "--field", "Fp:10007", "--json"});
    CHECK(r.code == cli::kOk);
    CHECK(r.doc()["result"]["verified"] == true);

    CliResult bad = run_cli({"word-preimage", "--word", "x1", "--target", "identity2", "--json"});
    CHECK(bad.code == cli::kPreconditionError);
}

TEST_CASE("max-subfield over the Hamilton quaternions (spec headline example)") {
    CliResult r = run_cli({"max-subfield", "--model", "quat:-1,-1", "--expr", "x1*x2-x2*x1", "--json"});
    CHECK(r.code == cli::kOk);
    json res = r.doc()["result"];
    CHECK(res["certificate"]["degree"] == 2);
    CHECK(res["maximal"] == true);
    CHECK(res["model"]["division"] == "preset");
    CHECK(res["value"]["z"] == "2");
}

TEST_CASE("max-subfield matrix models") {
    CliResult r = run_cli({"max-subfield", "--model", "matrix:3", "--expr", "x1*x2-x2*x1", "--field", "Q",
                           "--json"});
    CHECK(r.code == cli::kOk);
    CHECK(r.doc()["result"]["certificate"]["degree"] == 3);
    CHECK(r.doc()["result"]["maximal"] == true);
}

TEST_CASE("audit-bound reports equality for the commutator on M_2") {
    CliResult r = run_cli({"audit-bound", "--model", "matrix:2", "--expr", "x1*x2-x2*x1", "--field",
                           "Fp:10007", "--trials", "50", "--json"});
    CHECK(r.code == cli::kOk);
    json res = r.doc()["result"];
    CHECK(res["max_degree_observed"] == 2);
    CHECK(res["equality"] == true);
}

TEST_CASE("identical flags and seed give byte-identical JSON") {
    std::vector<std::vector<std::string>> invocations = {
        {"parse", "--expr", "x1*x2 - x2*x1", "--json"},
        {"eval", "--expr", "x1*x2 - x2*x1", "--at", "diag:1,0", "--at", "e12", "--json"},
        {"minpoly", "--matrix", "companion:-2,0,0", "--json"},
        {"gn-check", "--n", "1", "--matrix", "identity2", "--json"},
        {"build-pm", "--m", "4", "--json"},
        {"build-qm", "--m", "5", "--json"},
        {"preimage", "--expr", "x1*x2 - x2*x1", "--target", "e12", "--field", "Fp:10007", "--json"},
        {"word-preimage", "--word", "x1*x2*x1^-1*x2^-1", "--target", "diag:2,5004", "--field", "Fp:10007",
         "--json"},
        {"max-subfield", "--model", "quat:-1,-1", "--expr", "x1*x2-x2*x1", "--json"},
        {"max-subfield", "--model", "matrix:2", "--expr", "x1*x2-x2*x1", "--field", "Fp:10007", "--json"},
        {"audit-bound", "--model", "matrix:2", "--expr", "x1*x2-x2*x1", "--field", "Fp:10007", "--trials",
         "25", "--json"},
    };
    for (const auto& args : invocations) {
        CliResult first = run_cli(args);
        CliResult second = run_cli(args);
        CHECK(first.code == second.code);
        CHECK(first.out == second.out);
    }
    // and a different seed changes randomized outputs deterministically
    CliResult seeded1 = run_cli({"audit-bound", "--model", "matrix:2", "--expr", "x1*x2-x2*x1", "--field",
                                 "Fp:10007", "--trials", "25", "--seed", "99", "--json"});
    CliResult seeded2 = run_cli({"audit-bound", "--model", "matrix:2", "--expr", "x1*x2-x2*x1", "--field",
                                 "Fp:10007", "--trials", "25", "--seed", "99", "--json"});
    CHECK(seeded1.out == seeded2.out);
}

TEST_CASE("emitted witnesses re-verify through the eval round trip") {
    CliResult r = run_cli({"max-subfield", "--model", "matrix:2", "--expr", "x1*x2-x2*x1", "--field",
                           "Fp:10007", "--json"});
    REQUIRE(r.code == cli::kOk);
    json res = r.doc()["result"];
    std::vector<std::string> args = {"eval", "--expr", res["expression"].get<std::string>(), "--field",
                                     "Fp:10007", "--json"};
    for (const auto& m : res["assignment"]) {
        args.push_back("--at");
        args.push_back(m.dump());
    }
    CliResult check = run_cli(args);
    REQUIRE(check.code == cli::kOk);
    CHECK(check.doc()["result"]["value"] == res["value"]);
}

TEST_CASE("usage and syntax errors exit with status 2") {
    CliResult unknown = run_cli({"no-such-command"});
    CHECK(unknown.code == cli::kUsageError);
    CliResult missing = run_cli({"parse"});
    CHECK(missing.code == cli::kUsageError);
    CliResult syntax = run_cli({"parse", "--expr", "x1 +", "--json"});
    CHECK(syntax.code == cli::kUsageError);
    CHECK(syntax.doc()["error"]["type"] == "syntax");
    CliResult badfield = run_cli({"parse", "--expr", "x1", "--field", "Fp:10006"});
    CHECK(badfield.code == cli::kPreconditionError);  // composite modulus is a math precondition
}

TEST_CASE("help is printed on request") {
    CliResult help = run_cli({"--help"});
    CHECK(help.code == cli::kOk);
    CHECK(help.out.find("max-subfield") != std::string::npos);
}
