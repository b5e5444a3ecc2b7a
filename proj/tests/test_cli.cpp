#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qpoints/cli.hpp"
#include "qpoints/parser.hpp"

using namespace qpoints;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string golden_path(const std::string& name) {
    return std::string(QPOINTS_GOLDEN_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void check_transcript(const CliResult& r, const std::string& golden_name) {
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(r.out == slurp(golden_path(golden_name)));
}

}  // namespace

TEST_CASE("golden: example prints the built-in matrix file") {
    check_transcript(run_cli({"example"}), "example.txt");
}

TEST_CASE("golden: components of the example matrix, text") {
    check_transcript(run_cli({"components", golden_path("example.qm")}),
                     "components_example.txt");
}

TEST_CASE("golden: components of the example matrix, JSON") {
    check_transcript(run_cli({"components", golden_path("example.qm"), "--json"}),
                     "components_example.json");
}

TEST_CASE("golden: components after the degeneration, JSON") {
    check_transcript(run_cli({"components", golden_path("degenerate.qm"), "--json"}),
                     "components_degenerate.json");
}

TEST_CASE("golden: gen sign piped into components via stdin") {
    const auto gen = run_cli({"gen", "sign", "--n", "3"});
    REQUIRE(gen.code == 0);
    check_transcript(run_cli({"components", "-"}, gen.out), "components_sign3.txt");
}

TEST_CASE("golden: membership of [1:1:0:1] in the example variety") {
    check_transcript(
        run_cli({"membership", golden_path("example.qm"), "--point", "1,1,0,1"}),
        "membership_example.txt");
}

TEST_CASE("golden: localization of the example matrix at index 0") {
    check_transcript(run_cli({"localize", golden_path("example.qm"), "--at", "0"}),
                     "localize_example.txt");
}

TEST_CASE("output is deterministic across repeated runs") {
    const std::vector<std::string> args{"components", golden_path("example.qm"), "--json"};
    const auto first = run_cli(args);
    const auto second = run_cli(args);
    CHECK(first.code == second.code);
    CHECK(first.out == second.out);
}

TEST_CASE("membership answers in pts for a supported point") {
    const auto r = run_cli({"membership", golden_path("example.qm"), "--point", "1,0,0,x"});
    CHECK(r.code == 0);
    CHECK(r.out == "in pts\n");
}

TEST_CASE("delete prints the reindexed matrix with its index map") {
    const auto r = run_cli({"delete", golden_path("example.qm"), "--at", "3"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "# original indices: 0 1 2\n"
          "n = 2\n"
          "q 0 1 = a\n"
          "q 0 2 = b\n"
          "q 1 2 = a^-1*b\n");
}

TEST_CASE("verify reports three-way agreement") {
    const auto r = run_cli({"verify", golden_path("example.qm")});
    CHECK(r.code == 0);
    CHECK(r.out.find("P(0,1,2)\n") != std::string::npos);
    CHECK(r.out.find("verified: clique, recursive and brute-force algorithms agree\n") !=
          std::string::npos);
}

TEST_CASE("--verify adds the agreement line without changing the component list") {
    const auto plain = run_cli({"components", golden_path("example.qm")});
    const auto verified = run_cli({"components", golden_path("example.qm"), "--verify"});
    CHECK(verified.code == 0);
    CHECK(verified.out.substr(0, plain.out.size()) == plain.out);
    CHECK(verified.out.find("verified:") != std::string::npos);
}

TEST_CASE("--threads does not change the output") {
    const auto gen = run_cli({"gen", "random", "--n", "6", "--seed", "11"});
    const auto sequential = run_cli({"components", "-"}, gen.out);
    const auto parallel = run_cli({"components", "-", "--threads", "4"}, gen.out);
    CHECK(sequential.code == 0);
    CHECK(parallel.out == sequential.out);
}

TEST_CASE("gen output always re-parses: gen | components pipelines") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto gen =
            run_cli({"gen", "random", "--n", "5", "--seed", std::to_string(seed)});
        REQUIRE(gen.code == 0);
        const auto q = parse_matrix_file(gen.out);
        CHECK(format_matrix_file(q) == gen.out);
        const auto comps = run_cli({"components", "-", "--verify"}, gen.out);
        CHECK(comps.code == 0);
    }
}

TEST_CASE("gen rank1 defaults to symbolic weights and is rank one") {
    const auto r = run_cli({"gen", "rank1", "--n", "3"});
    REQUIRE(r.code == 0);
    const auto q = parse_matrix_file(r.out);
    CHECK(is_rank_one(q));
    const auto comps = run_cli({"components", "-"}, r.out);
    CHECK(comps.out.find("full space: yes\n") != std::string::npos);
}

TEST_CASE("gen rank1 accepts explicit weights") {
    const auto r = run_cli({"gen", "rank1", "--n", "2", "--weights", "1,a,a^2"});
    REQUIRE(r.code == 0);
    CHECK(r.out ==
          "n = 2\n"
          "q 0 1 = a^-1\n"
          "q 0 2 = a^-2\n"
          "q 1 2 = a^-1\n");
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"bogus"}).code == 2);
    CHECK(run_cli({"components"}).code == 2);             // missing file
    CHECK(run_cli({"membership", "-"}).code == 2);        // missing --point
    CHECK(run_cli({"gen", "flat", "--n", "2"}).code == 2);
    CHECK(run_cli({"gen", "sign"}).code == 2);            // missing --n
    CHECK(run_cli({"components", "-", "--max-components", "0"}).code == 2);
    CHECK(run_cli({"components", "-", "--threads", "0"}).code == 2);
    const auto r = run_cli({"bogus"});
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("malformed matrix text exits 2, domain errors exit 1") {
    CHECK(run_cli({"components", "-"}, "garbage\n").code == 2);
    CHECK(run_cli({"components", "-"}, "n = 1\nq 0 1 = a^\n").code == 2);
    CHECK(run_cli({"components", "-"}, "n = 1\nq 0 1 = 0\n").code == 1);
    CHECK(run_cli({"components", "-"}, "n = 1\n").code == 1);             // missing entry
    CHECK(run_cli({"components", "-"}, "n = 1\nq 0 1 = a\nq 0 1 = a\n").code == 1);
    CHECK(run_cli({"delete", "-", "--at", "5"}, "n = 1\nq 0 1 = a\n").code == 1);
    CHECK(run_cli({"components", "missing-file.qm"}).code == 1);
    CHECK(run_cli({"gen", "rank1", "--n", "3", "--weights", "1,a"}).code == 1);
    const auto r = run_cli({"components", "-"}, "n = 1\nq 0 1 = 0\n");
    CHECK(r.err.find("error:") == 0);
}

TEST_CASE("component cap on the command line") {
    const auto gen = run_cli({"gen", "sign", "--n", "3"});
    CHECK(run_cli({"components", "-", "--max-components", "6"}, gen.out).code == 0);
    const auto capped = run_cli({"components", "-", "--max-components", "5"}, gen.out);
    CHECK(capped.code == 1);
    CHECK(capped.err.find("more than 5 components") != std::string::npos);
}

TEST_CASE("help exits 0") {
    const auto r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("components") != std::string::npos);
}

TEST_CASE("membership rejects the all-zero point as a domain error") {
    CHECK(run_cli({"membership", "-", "--point", "0,0"}, "n = 1\nq 0 1 = a\n").code == 1);
}
