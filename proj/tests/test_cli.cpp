#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
// Drives the installed executable through a shell, the way a user would.
#include <sys/wait.h>

#include <cstdio>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "support/oracles.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

// Runs `romanus_cli <args>`; captures stdout (plus stderr when merged).
RunResult run(const std::string& args, bool merge_stderr = false) {
    std::string cmd = std::string(ROMANUS_CLI_PATH) + " " + args;
    cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";
    FILE* f = popen(cmd.c_str(), "r");
    REQUIRE(f != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, f)) > 0) r.output.append(buf, n);
    int status = pclose(f);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string strip(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    return s;
}

json run_json(const std::string& args) {
    RunResult r = run(args);
    CAPTURE(args);
    CAPTURE(r.output);
    REQUIRE(r.exit_code == 0);
    json env = json::parse(r.output);
    REQUIRE(env.contains("command"));
    REQUIRE(env.contains("inputs"));
    REQUIRE(env.contains("result"));
    REQUIRE(env.contains("certified_digits"));
    return env;
}

}  // namespace

TEST_CASE("top level: version, help, and missing subcommand") {
    RunResult v = run("--version");
    CHECK(v.exit_code == 0);
    CHECK(strip(v.output) == "1.0.0");
    CHECK(run("--help").exit_code == 0);
    CHECK(run("", true).exit_code == 2);          // a subcommand is required
    CHECK(run("frobnicate", true).exit_code == 2);
}

TEST_CASE("gen") {
    RunResult q = run("--quiet gen 45 --monic --dialect stevin");
    CHECK(q.exit_code == 0);
    CHECK(strip(q.output) == oracle::fig1_stevin());

    RunResult pretty = run("gen 5 --monic");
    CHECK(pretty.exit_code == 0);
    CHECK(strip(pretty.output) == "p5(x) = 5x - 5x^3 + x^5");
    RunResult t5 = run("gen 5");
    CHECK(strip(t5.output) == "T5(x) = 5x - 20x^3 + 16x^5");

    json env = run_json("--json gen 45 --monic --coeffs");
    CHECK(env["command"] == "gen");
    CHECK(env["inputs"]["n"] == 45);
    CHECK(env["result"]["degree"] == 45);
    REQUIRE(env["result"]["coefficients"].size() == 46);
    CHECK(env["result"]["coefficients"][15] == "-232676280");
    CHECK(env["result"]["coefficients"][45] == "1");
    CHECK(env["certified_digits"].is_null());

    CHECK(run("gen 3000", true).exit_code == 2);   // above the degree cap
    CHECK(run("gen -- -1", true).exit_code == 2);  // negative degree
    CHECK(run("gen 5 --dialect cossic", true).exit_code == 2);
}

TEST_CASE("eval") {
    RunResult r = run("--quiet eval 'sqrt(2+sqrt(2))' -d 20");
    CHECK(r.exit_code == 0);
    CHECK(strip(r.output) == oracle::kTwoCosPi8D20);

    RunResult pretty = run("eval '√(2)' -d 5");
    CHECK(pretty.exit_code == 0);
    CHECK(strip(pretty.output) == "sqrt(2) = 1.41421");

    json env = run_json("--json eval 'sqrt(2)' -d 20");
    CHECK(env["result"]["value"] == oracle::kSqrt2D20);
    CHECK(env["certified_digits"] == 20);

    RunResult bad = run("eval 'sqrt(2'", true);
    CHECK(bad.exit_code == 2);
    CHECK(bad.output.find("error (syntax)") != std::string::npos);
    CHECK(bad.output.find("byte") != std::string::npos);
    RunResult dom = run("eval 'sqrt(1-2)'", true);
    CHECK(dom.exit_code == 1);
    CHECK(dom.output.find("error (domain)") != std::string::npos);
    CHECK(run("eval 'sqrt(2)' -d 0", true).exit_code == 2);  // digits below range
}

TEST_CASE("solve") {
    json env = run_json("--json solve 45 --rhs 'sqrt(2+sqrt(2))'");
    const json& res = env["result"];
    CHECK(res["rhs_angle"] == "3/8");
    CHECK(res["counts"]["positive"] == 23);
    CHECK(res["counts"]["negative"] == 22);
    REQUIRE(res["roots"].size() == 45);
    int idx = res["smallest_positive_index"].get<int>();
    REQUIRE(idx >= 0);
    CHECK(res["roots"][idx]["angle"] == "1/120");
    CHECK(res["roots"][idx]["value"] == oracle::kEx3RootD30);
    CHECK(res["roots"][idx]["radical"].is_string());

    RunResult pretty = run("solve 2 --rhs 0 -d 20");
    CHECK(pretty.exit_code == 0);
    CHECK(pretty.output.find("2 distinct roots: 1 positive, 0 zero, 1 negative") !=
          std::string::npos);
    CHECK(pretty.output.find("<- smallest positive") != std::string::npos);

    CHECK(run("solve 45 --rhs 3", true).exit_code == 1);       // |b| > 2: range
    CHECK(run("solve 45 --rhs '3/2'", true).exit_code == 1);   // recognition
    CHECK(run("solve 513 --rhs 1", true).exit_code == 2);      // bad degree: invalid
    CHECK(run("solve 45 --rhs 'sqrt('", true).exit_code == 2); // syntax
    CHECK(run("solve 45 --rhs 1 --max-q 1", true).exit_code == 2);
}

TEST_CASE("solve-numeric") {
    RunResult q = run("--quiet solve-numeric 3 --rhs-decimal 0");
    CHECK(q.exit_code == 0);
    CHECK(q.output.find(oracle::kSqrt3D30) != std::string::npos);
    CHECK(q.output.find(std::string("-") + oracle::kSqrt3D30) != std::string::npos);

    json env = run_json("--json solve-numeric 2 --rhs-decimal 0 -d 20");
    CHECK(env["result"]["roots"][1]["value"] == oracle::kSqrt2D20);

    CHECK(run("solve-numeric 3 --rhs-decimal 2.5", true).exit_code == 1);
    CHECK(run("solve-numeric 3 --rhs-decimal abc", true).exit_code == 2);
}

TEST_CASE("tower") {
    RunResult q = run("--quiet tower --angle 1/96 --func sin");
    CHECK(q.exit_code == 0);
    CHECK(strip(q.output) == "sqrt(2 - sqrt(2 + sqrt(2 + sqrt(2 + sqrt(3)))))");

    RunResult pretty = run("tower --angle 1/32 --func cos -d 20");
    CHECK(pretty.exit_code == 0);
    CHECK(pretty.output.find("2*cos(pi*1/32) = sqrt(2 + sqrt(2 + sqrt(2 + sqrt(2))))") !=
          std::string::npos);

    CHECK(run("tower --angle 1/7", true).exit_code == 1);   // unsupported family
    CHECK(run("tower --angle 3/4", true).exit_code == 1);   // beyond pi/2
    CHECK(run("tower --angle abc", true).exit_code == 2);   // malformed angle
    CHECK(run("tower --angle 1/0", true).exit_code == 2);   // zero denominator
    CHECK(run("tower --angle 1/8 --func tan", true).exit_code == 2);
}

TEST_CASE("classify and chain") {
    CHECK(strip(run("--quiet classify --angle 1/675").output) == "needs-cubic-and-quintic");
    CHECK(strip(run("--quiet classify --angle 1/96").output) == "square-roots-only");
    CHECK(strip(run("--quiet classify --angle 1/600").output) == "needs-quintic");
    json cls = run_json("--json classify --angle 1/7");
    CHECK(cls["result"]["classification"] == "out-of-scope");
    CHECK(run("classify --angle 1/0", true).exit_code == 2);

    CHECK(strip(run("--quiet chain 675").output) == "3,3,3,5,5");
    CHECK(strip(run("chain 45").output) == "T45 = T3 . T3 . T5");
    json ch = run_json("--json chain 300");
    CHECK(ch["result"]["factors"] == json::array({2, 2, 3, 5, 5}));
    CHECK(run("chain 0", true).exit_code == 2);
}

TEST_CASE("pi") {
    RunResult q = run("--quiet pi --sides 96 -d 30 --perimeter");
    CHECK(q.exit_code == 0);
    CHECK(strip(q.output) == oracle::kPerim96D30);
    RunResult approx = run("--quiet pi --sides 96 -d 20");
    CHECK(strip(approx.output) == oracle::kPiApprox96D20);
    json env = run_json("--json pi --sides 6 -d 10");
    CHECK(env["result"]["value"] == "3.0000000000");
    CHECK(run("pi --sides 7", true).exit_code == 1);
    CHECK(run("pi --sides 2", true).exit_code == 1);
}

TEST_CASE("verify-romanus") {
    CHECK(strip(run("--quiet verify-romanus --example 1").output) == "pass");
    CHECK(strip(run("--quiet verify-romanus --example 2").output) == "fail");

    json env = run_json("--json verify-romanus --example 2 -d 19");
    const json& res = env["result"];
    CHECK(res["pass"] == false);
    CHECK(res["rhs"]["value"] == oracle::kEx2RhsD19);
    REQUIRE(res["mismatch"].is_object());
    CHECK(res["mismatch"]["lhs_at_claimed"] == oracle::kEx2LhsAtClaimedD19);
    CHECK(res["mismatch"]["alternative"]["value"] == oracle::kEx2AlternativeD19);
    CHECK(res["mismatch"]["alternative"]["matches"] == false);
    CHECK(res["mismatch"]["corrected"]["angle"] == "15/64");
    CHECK(res["mismatch"]["corrected"]["confirmed"] == true);
    CHECK(res["solution"]["angle"] == "1/192");

    json main_env = run_json("--json verify-romanus --example main");
    CHECK(main_env["result"]["pass"] == true);
    CHECK(main_env["result"]["solution"]["classification"] == "needs-cubic-and-quintic");
    CHECK(main_env["result"]["solution"]["polygon_sides"] == 675);
    CHECK(main_env["result"]["solution"]["radical"].is_null());
    CHECK(main_env["result"]["claimed"].is_null());
    CHECK(main_env["result"]["mismatch"].is_null());

    RunResult pretty = run("verify-romanus --example 2 -d 19");
    CHECK(pretty.exit_code == 0);
    CHECK(pretty.output.find("example 2: FAIL") != std::string::npos);
    CHECK(pretty.output.find(oracle::kEx2LhsAtClaimedD19) != std::string::npos);
    CHECK(pretty.output.find("corrected rhs") != std::string::npos);

    CHECK(run("verify-romanus --example 4", true).exit_code == 2);
    CHECK(run("verify-romanus", true).exit_code == 2);  // --example is required
}

TEST_CASE("gift") {
    json env = run_json("--json gift");
    const json& res = env["result"];
    REQUIRE(res["components"].size() == 5);
    CHECK(res["components"][0]["name"] == "A");
    CHECK(res["components"][0]["angle"] == "1/120");
    CHECK(res["components"][0]["radical"].is_string());
    CHECK(res["components"][4]["name"] == "E");
    CHECK(res["components"][4]["radical"].is_null());
    CHECK(res["components"][4]["value"] == oracle::kGiftE_D21);
    REQUIRE(res["equations"].size() == 5);
    CHECK(res["equations"][0]["equation"] == "B = 5*A - 5*A^3 + A^5");
    std::string bound = res["equations"][0]["residual_bound"].get<std::string>();
    CHECK(bound.rfind("<= 1e-", 0) == 0);
    CHECK(std::stoi(bound.substr(6)) >= 16);

    RunResult pretty = run("gift");
    CHECK(pretty.exit_code == 0);
    CHECK(pretty.output.find("C^2 + D^2 = 4") != std::string::npos);

    CHECK(run("gift -d 10", true).exit_code == 2);  // below the minimum digits
}

TEST_CASE("convert") {
    RunResult r = run("convert '9(1) - 30(3) + 27(5) - 9(7) + 1(9)' --from stevin --to viete");
    CHECK(r.exit_code == 0);
    CHECK(strip(r.output) == "9N - 30C + 27QC - 9QQC + 1CCC");

    RunResult back = run("convert '9N - 30C + 27QC - 9QQC + 1CCC' --from viete --to modern");
    CHECK(strip(back.output) == "9x - 30x^3 + 27x^5 - 9x^7 + x^9");

    CHECK(run("convert '1' --from modern --to viete", true).exit_code == 1);
    CHECK(run("convert '45*' --from modern --to stevin", true).exit_code == 2);
    CHECK(run("convert '1N' --from klingon --to modern", true).exit_code == 2);
}

TEST_CASE("json error envelope goes to stderr") {
    RunResult merged = run("--json eval 'sqrt(2'", true);
    CHECK(merged.exit_code == 2);
    json env = json::parse(merged.output);
    CHECK(env["error"]["status"] == "syntax");
    CHECK(env["error"].contains("offset"));
    // Nothing on stdout in the failure case.
    RunResult out_only = run("--json eval 'sqrt(2'");
    CHECK(out_only.output.empty());
}
