#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "frc/cli.hpp"
#include "frc/frc_format.hpp"
#include "frc/generator.hpp"
#include "frc/report.hpp"

using namespace frc;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    args.insert(args.begin(), "frc");
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string corpus_file(const std::string& name) {
    const auto dir = fs::temp_directory_path() / "frc_cli_tests";
    fs::create_directories(dir);
    const auto path = dir / (name + ".frc");
    std::ofstream(path) << write_frc(*corpus_code(name));
    return path.string();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("reconstruct --mode exact on table1") {
    const auto r = cli({"reconstruct", corpus_file("table1"), "--mode", "exact"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "k* exact = 2\nk_FR exact = 5\n");
}

TEST_CASE("reconstruct with traces") {
    const auto r = cli({"reconstruct", corpus_file("table2"), "--trace"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("k* greedy = 3") != std::string::npos);
    CHECK(r.out.find("k* trace: seed 1, completed, counter 3") != std::string::npos);
    CHECK(r.out.find("k* trace: seed 4, completed, counter 3") != std::string::npos);
}

TEST_CASE("rate") {
    const auto file = corpus_file("table1");
    auto r = cli({"rate", file, "-k", "3"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "4\n");
    r = cli({"rate", file, "--profile"});
    CHECK(r.out == "2 3 4 6 8 8 8\n");
    CHECK(cli({"rate", file}).code == kExitUsage);
    CHECK(cli({"rate", file, "-k", "3", "--profile"}).code == kExitUsage);
    CHECK(cli({"rate", file, "-k", "9"}).code == kExitUsage);
    CHECK(cli({"rate", file, "-k", "4", "--cap", "10"}).code == kExitCap);
}

TEST_CASE("analyze and --strict") {
    const auto t3 = corpus_file("table3");
    auto r = cli({"analyze", t3, "--strict"});
    CHECK(r.code == kExitValidation);
    CHECK(r.err.find("packet 5 replication 1 != 2") != std::string::npos);
    CHECK(r.out.empty());

    r = cli({"--strict", "analyze", corpus_file("table1")});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("delta: 4") != std::string::npos);
    CHECK(r.out.find("eq1 residual: 0") != std::string::npos);

    r = cli({"analyze", t3});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("packet 5 replication 1 != 2") != std::string::npos);
}

TEST_CASE("repair") {
    auto r = cli({"repair", corpus_file("m11x8"), "--node", "5"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "node 5 (alpha_i = 4): d_greedy = 2, d_exact = 2; groups {1,4}@1 {2,3}@9\n");

    const auto t3 = corpus_file("table3");
    r = cli({"repair", t3, "--node", "2"});
    CHECK(r.code == kExitInfeasible);
    CHECK(r.err.find("packet(s) 5") != std::string::npos);

    r = cli({"repair", t3});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("node 2 (alpha_i = 4): unrepairable") != std::string::npos);

    r = cli({"repair", corpus_file("m11x8"), "--node", "5", "--cap", "5"});
    CHECK(r.code == kExitCap);
    CHECK(cli({"repair", t3, "--node", "9"}).code == kExitUsage);
    CHECK(cli({"repair", t3, "--mode", "fast"}).code == kExitUsage);
}

TEST_CASE("matrix, generate, corpus") {
    auto r = cli({"matrix", corpus_file("table1")});
    CHECK(r.code == kExitOk);
    CHECK(r.out.substr(0, 16) == "1 0 0 0 0 1 1 1\n");

    r = cli({"generate", "--n", "4", "--theta", "6", "--rho", "2", "--strong", "--seed", "3"});
    CHECK(r.code == kExitOk);
    CHECK(parse_frc(r.out) == generate_strong({4, 6, 2, 3, GenKind::strong}));
    CHECK(cli({"generate", "--n", "4", "--theta", "7", "--rho", "2", "--strong"}).code == kExitUsage);

    r = cli({"corpus", "table1"});
    CHECK(r.out == "FRC1\n7 8 3\n1 6 7 8\n1 2 7 8\n1 2 3 8\n2 3 4 7\n3 4 5\n4 5 6\n5 6\n");
    CHECK(cli({"corpus", "nope"}).code == kExitUsage);
    CHECK(cli({"corpus", "--list"}).out == "table1\ntable2\ntable3\nm11x8\n");
}

TEST_CASE("usage errors") {
    CHECK(cli({}).code == kExitUsage);
    CHECK(cli({"bogus"}).code == kExitUsage);
    CHECK(cli({"analyze", "/nonexistent/file.frc"}).code == kExitUsage);
    CHECK(cli({"--help"}).code == kExitOk);

    const auto dir = fs::temp_directory_path() / "frc_cli_tests";
    fs::create_directories(dir);
    std::ofstream(dir / "bad.frc") << "FRC1\n2 3 2\n3 2\n1 2 3\n";
    const auto r = cli({"analyze", (dir / "bad.frc").string()});
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find("packets not ascending, line 3") != std::string::npos);
}

TEST_CASE("--json output is the library report") {
    const auto file = corpus_file("table1");
    const auto r = cli({"reconstruct", file, "--mode", "both", "--json"});
    REQUIRE(r.code == kExitOk);

    ToolMetadata meta;
    meta.command = "reconstruct";
    meta.mode = "both";
    auto expected = base_report(*corpus_code("table1"), meta);
    expected.degrees = degree_report(*corpus_code("table1"), DegreeMode::both);
    CHECK(r.out == serialize(expected));

    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["format"] == 1);
    CHECK(j["degrees"]["k_star_exact"] == 2);
    CHECK(j["degrees"]["k_fr_greedy"] == 3);
    CHECK(j["params"]["delta"] == 4);
    CHECK(j["validation"]["eq1_residual"] == 0);
}

TEST_CASE("--json repair and rate sections") {
    auto r = cli({"repair", corpus_file("table3"), "--json"});
    REQUIRE(r.code == kExitOk);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["repair"]["nodes"][1]["repairable"] == false);
    CHECK(j["repair"]["nodes"][1]["unrepairable_packets"] == nlohmann::json::array({5}));
    CHECK(j["validation"]["ok"] == false);

    r = cli({"rate", corpus_file("table1"), "--profile", "--json"});
    j = nlohmann::json::parse(r.out);
    CHECK(j["rate_profile"] == nlohmann::json::array({2, 3, 4, 6, 8, 8, 8}));
}

}  // TEST_SUITE
