#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

// End-to-end runs of the installed command-line tool against the data files.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args, bool merge_stderr = false) {
    std::string cmd = std::string(DIAGCAT_CLI_PATH) + " " + args +
                      (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.output.append(buf, n);
    int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data(const std::string& name) {
    return std::string(DIAGCAT_DATA_DIR) + "/" + name;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("snf prints the decomposition and is byte-deterministic") {
    auto r1 = run("snf " + data("matrix_2x2.json"));
    CHECK(r1.exit_code == 0);
    CHECK(contains(r1.output, "\"diagonal\""));
    CHECK(contains(r1.output, "\"rank\": 2"));
    auto r2 = run("snf " + data("matrix_2x2.json"));
    CHECK(r1.output == r2.output);
}

TEST_CASE("snf reports parse diagnostics with a nonzero exit code") {
    auto r = run("snf " + data("malformed.json"), true);
    CHECK(r.exit_code != 0);
    CHECK(contains(r.output, "error:"));
}

TEST_CASE("end computes the stage commutant with stage selection") {
    auto full = run("end " + data("rep_c2.json"));
    CHECK(full.exit_code == 0);
    CHECK(contains(full.output, "\"dim\": 2"));
    // dropping the swap loop enlarges the commutant to all of M2
    auto small = run("end " + data("rep_c2.json") + " --stage identity-only");
    CHECK(small.exit_code == 0);
    CHECK(contains(small.output, "\"dim\": 4"));
}

TEST_CASE("end rejects unknown stages, listing the valid ones") {
    auto r = run("end " + data("rep_c2.json") + " --stage nope", true);
    CHECK(r.exit_code == 2);
    CHECK(contains(r.output, "identity-only"));
}

TEST_CASE("end rejects a mismatched ring flag") {
    auto r = run("end " + data("rep_c2.json") + " --ring Q", true);
    CHECK(r.exit_code == 2);
    CHECK(contains(r.output, "ring"));
}

TEST_CASE("hom reports the endomorphism group of the tautological object") {
    auto r = run("hom " + data("rep_c2.json") + " p p");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "\"freeRank\": 2"));
}

TEST_CASE("homology of the circle") {
    auto r = run("homology " + data("pair_circle.json"));
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "\"H1\""));
    CHECK(contains(r.output, "\"freeRank\": 1"));
}

TEST_CASE("les-check passes on the interval triple") {
    auto r = run("les-check " + data("triple_interval.json"));
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "\"pass\": true"));
}

TEST_CASE("criterion verdict drives the exit code") {
    std::string base = "criterion " + data("rep_c2.json") + " " + data("target_c2_scalar.json");
    auto pass = run(base + " " + data("maps_sum.json"));
    CHECK(pass.exit_code == 0);
    CHECK(contains(pass.output, "\"overall\": \"PASS\""));
    auto fail = run(base + " " + data("maps_projection.json"));
    CHECK(fail.exit_code == 1);
    CHECK(contains(fail.output, "\"overall\": \"FAIL\""));
    CHECK(contains(fail.output, "\"basisIndex\""));
    CHECK(contains(fail.output, "\"kernelGen\""));
}

TEST_CASE("tower reports the rank trace along the chain") {
    auto r = run("tower " + data("rep_c2.json") + " " + data("chain_c2.json"));
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "\"imageRanks\""));
    CHECK(contains(r.output, "\"dims\""));
    // the swap arrow cuts M2 down to the group algebra
    CHECK(contains(r.output, "4"));
    CHECK(contains(r.output, "2"));
}

TEST_CASE("tower rejects a non-increasing chain") {
    auto r = run("tower " + data("rep_c2.json") + " " + data("chain_bad.json"), true);
    CHECK(r.exit_code == 2);
    CHECK(contains(r.output, "error:"));
}

TEST_CASE("--out writes the report to a file; --quiet silences the summary") {
    std::string path = "cli_out_tmp.json";
    auto r = run("snf " + data("matrix_2x2.json") + " --out " + path);
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "diagonal (2, 4)"));  // human summary on stdout
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream s;
    s << in.rdbuf();
    CHECK(contains(s.str(), "\"diagonal\""));
    auto q = run("snf " + data("matrix_2x2.json") + " --out " + path + " --quiet");
    CHECK(q.exit_code == 0);
    CHECK(q.output.empty());
    std::remove(path.c_str());
}
