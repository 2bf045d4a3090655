#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "mcc/cli.hpp"

using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = mcc::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
    args.insert(args.begin(), {"--format", "json"});
    const auto r = run(args);
    REQUIRE(r.code == 0);
    return json::parse(r.out);
}

json error_of(const Result& r) {
    CHECK(r.out.empty());
    CHECK(r.err.find('\n') == r.err.size() - 1);
    return json::parse(r.err);
}

}  // namespace

TEST_CASE("betti") {
    const auto j = run_json({"betti", "--space", "S", "--r", "3"});
    CHECK(j["schema_version"] == "1");
    CHECK(j["command"] == "betti");
    CHECK(j["r"] == 3);
    const json expected = {1, 0, 2, 0, 6, 0, 10, 0, 16, 0, 19, 0, 22, 0, 19, 0, 16, 0, 10, 0, 6, 0, 2, 0, 1};
    CHECK(j["payload"]["coefficients"] == expected);
    CHECK(j["payload"]["euler"] == 130);
    CHECK(j["payload"]["palindromic"] == true);

    const auto m = run_json({"betti", "--space", "M", "--r", "1"});
    CHECK(m["payload"]["coefficients"] == json({1, 0, 1, 0, 2, 0, 1, 0, 1}));

    const auto bad = run({"betti", "--space", "S", "--r", "2"});
    CHECK(bad.code == mcc::cli::kUsage);
    CHECK(error_of(bad)["error"] == "InvalidArgument");

    const auto table = run({"betti", "--space", "S", "--r", "3", "--format", "table"});
    CHECK(table.code == 0);
    CHECK(table.out.find("  12  22\n") != std::string::npos);
    CHECK(table.out.find("\033[") == std::string::npos);
}

TEST_CASE("terms") {
    const auto j = run_json({"terms", "--r", "3", "--reconstruct"});
    int ok = 0, literal = 0;
    for (const auto& t : j["payload"]["terms"]) {
        ok += t["reconstruction"] == "ok";
        literal += t["reconstruction"] == "literal-only";
    }
    CHECK(ok == 5);
    CHECK(literal == 1);
    CHECK(run_json({"terms", "--r", "4"})["payload"]["sum_check"] == "OK");
    CHECK(run({"terms", "--r", "0"}).code == mcc::cli::kUsage);
}

TEST_CASE("eval") {
    CHECK(run_json({"eval", "--expr", "Gr(2,r+1)", "--r", "3"})["payload"]["coefficients"] ==
          json({1, 0, 1, 0, 2, 0, 1, 0, 1}));
    CHECK(run_json({"eval", "--expr", "blowup(P(2),center=pt,codim=2)", "--r", "1"})["payload"]["coefficients"] ==
          json({1, 0, 2, 0, 1}));
    const auto bad = run({"eval", "--expr", "P(", "--r", "3"});
    CHECK(bad.code == mcc::cli::kUsage);
    const auto e = error_of(bad);
    CHECK(e["error"] == "ParseError");
    CHECK(e["offset"] == 2);
    CHECK(run({"eval", "--expr-file", "/nonexistent.msd", "--r", "3"}).code == mcc::cli::kUsage);
}

TEST_CASE("walls and classify") {
    CHECK(run_json({"walls", "--factors", "sym:3,copies:2|sym:1,copies:4"})["payload"]["walls"] == json({"1", "3"}));
    CHECK(run_json({"walls", "--factors", "sym:1,copies:1|sym:2,copies:2"})["payload"]["walls"] == json({"1/2"}));
    const auto c = run_json({"classify", "--factors", "sym:3,copies:2|sym:1,copies:1", "--point",
                             "z0^3; z0^2*z1 | z1", "--lambda", "2"});
    CHECK(c["payload"]["verdict"] == "Stable");
    CHECK(c["payload"]["witness"]["orders"] == json({2, 0}));
    const auto scan = run_json({"walls", "--factors", "sym:3,copies:2|sym:1,copies:1", "--point",
                                "z0^3; z0^2*z1 | z1", "--samples", "1/2,1,2,3,4"});
    std::vector<std::string> verdicts;
    for (const auto& s : scan["payload"]["scan"]) verdicts.push_back(s["verdict"]);
    CHECK(verdicts == std::vector<std::string>{"Unstable", "StrictlySemistable", "Stable", "StrictlySemistable",
                                               "Unstable"});
    CHECK(run({"walls", "--factors", "sym:3,copies"}).code == mcc::cli::kUsage);
    CHECK(run({"classify", "--factors", "sym:3,copies:2|sym:1,copies:1", "--point", "z0^3 | z1"}).code ==
          mcc::cli::kUsage);
}

TEST_CASE("stab and hilb") {
    const auto s = run_json({"stab", "--sheaf", "line:[0,-1,-1]"});
    CHECK(s["payload"]["verdict"] == "Unstable");
    CHECK(s["payload"]["destabilizer"] == "line:[0]");
    CHECK(s["payload"]["destabilizer_hilbert"] == "m+1");
    CHECK(run_json({"stab", "--sheaf", "abs:3m+1;quot:m+1,2m+1"})["payload"]["verdict"] == "Stable");
    const auto h = run_json({"hilb", "--ideal", "x2^2,x2*x3,x3^2", "--vars", "4"});
    CHECK(h["payload"]["hilbert_polynomial"] == "3m+1");
    CHECK(h["payload"]["dimension"] == 1);
    CHECK(run({"stab", "--sheaf", "line:["}).code == mcc::cli::kUsage);
    CHECK(run({"hilb", "--ideal", "x9", "--vars", "3"}).code == mcc::cli::kUsage);
}

TEST_CASE("verify") {
    const auto ok = run({"verify", "--rmax", "4"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("PASS A1 ") != std::string::npos);
    CHECK(ok.out.find("FAIL") == std::string::npos);
    const auto bad = run({"verify", "--rmax", "4", "--reference-table", MCC_FIXTURES "/betti_r3_perturbed.txt"});
    CHECK(bad.code == mcc::cli::kVerificationFailed);
    CHECK(bad.out.rfind("FAIL A1 ", 0) == 0);
    CHECK(bad.out.find("FAIL A2") == std::string::npos);
    CHECK(run({"verify", "--reference-table", MCC_FIXTURES "/betti_r3.txt", "--rmax", "3"}).code == 0);
}

TEST_CASE("usage errors and determinism") {
    CHECK(run({}).code == mcc::cli::kUsage);
    CHECK(run({"frobnicate"}).code == mcc::cli::kUsage);
    CHECK(run({"--format", "xml", "betti", "--space", "S", "--r", "3"}).code == mcc::cli::kUsage);
    CHECK(run({"betti", "--r", "3"}).code == mcc::cli::kUsage);
    CHECK(run({"--help"}).code == 0);
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"--format", "json", "terms", "--r", "5", "--reconstruct"},
             {"betti", "--space", "S", "--r", "7", "--format", "latex"},
             {"--format", "json", "walls", "--factors", "sym:2,copies:3|sym:3,copies:1"}}) {
        const auto a = run(args), b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}
