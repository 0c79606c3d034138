// End-to-end tests that drive the installed binary through a shell, checking
// exit codes, output formats, and agreement with the library.

#include <catch_amalgamated.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "graphcode/constructions.hpp"
#include "graphcode/storage_code.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string output; // stdout + stderr interleaved
};

fs::path temp_file(const std::string& tag) {
    static int counter = 0;
    return fs::temp_directory_path() /
           ("graphcode_cli_test_" + std::to_string(::getpid()) + "_" + tag + "_" +
            std::to_string(counter++));
}

RunResult run_cli(const std::string& args) {
    const fs::path capture = temp_file("capture");
    const std::string cmd =
        std::string(GRAPHCODE_CLI_PATH) + " " + args + " > " + capture.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(capture);
    std::ostringstream os;
    os << in.rdbuf();
    result.output = os.str();
    fs::remove(capture);
    return result;
}

std::string write_temp(const std::string& tag, const std::string& content) {
    const fs::path path = temp_file(tag);
    std::ofstream(path) << content;
    return path.string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

TEST_CASE("cli requires a subcommand") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("cli construct writes the edge list") {
    const RunResult r = run_cli("construct clique 19 5");
    CHECK(r.exit_code == 0);
    CHECK(r.output == graphcode::clique_partition(19, 5).to_edge_list_text());

    const RunResult dot = run_cli("construct chain 10 3 --format dot");
    CHECK(dot.exit_code == 0);
    CHECK(dot.output.find("graph G {") != std::string::npos);

    const RunResult k = run_cli("construct complete 5");
    CHECK(k.exit_code == 0);
    CHECK(k.output == graphcode::complete(5).to_edge_list_text());
}

TEST_CASE("cli construct rejects bad parameters with exit 2") {
    CHECK(run_cli("construct clique 19").exit_code == 2);        // missing r
    CHECK(run_cli("construct clique 10 20").exit_code == 2);     // r out of range
    CHECK(run_cli("construct pentagram 10 3").exit_code == 2);   // unknown family
    CHECK(run_cli("construct clique ten 5").exit_code == 2);     // non-numeric n
}

TEST_CASE("cli analyze reports rate and bounds") {
    const std::string graph = write_temp("clique", "");
    REQUIRE(run_cli("construct clique 19 5 --out " + graph).exit_code == 0);

    const RunResult r = run_cli("analyze " + graph);
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["n"] == 19);
    CHECK(j["max_degree"] == 5);
    CHECK(j["connected"] == false);
    CHECK(j["rank"] == 4);
    CHECK(j["dimension"] == 15);
    CHECK(j["rate_num"] == 15);
    CHECK(j["rate_den"] == 19);
    CHECK(j["lower_num"] == 15);
    CHECK(j["upper_num"] == 16);
    fs::remove(graph);
}

TEST_CASE("cli analyze handles degree-1 graphs without capacity bounds") {
    const std::string graph = write_temp("matching", "4 2\n1 2\n3 4\n");
    const RunResult r = run_cli("analyze " + graph);
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["max_degree"] == 1);
    CHECK(j["rank"] == 2);
    CHECK(j["lower_num"].is_null());
    CHECK(j["upper_den"].is_null());
    fs::remove(graph);
}

TEST_CASE("cli file errors exit 3, model violations exit 4") {
    CHECK(run_cli("analyze /nonexistent/graph.txt").exit_code == 3);

    const std::string malformed = write_temp("malformed", "3 1\n1\n");
    CHECK(run_cli("analyze " + malformed).exit_code == 3);
    fs::remove(malformed);

    const std::string bad_label = write_temp("badlabel", "3 1\n1 9\n");
    CHECK(run_cli("analyze " + bad_label).exit_code == 3);
    fs::remove(bad_label);

    const std::string isolated = write_temp("isolated", "3 1\n1 2\n");
    CHECK(run_cli("analyze " + isolated).exit_code == 4);
    CHECK(run_cli("certify " + isolated).exit_code == 4);
    fs::remove(isolated);
}

TEST_CASE("cli certify prints the witness and the rate bound") {
    const std::string graph = write_temp("clique", "");
    REQUIRE(run_cli("construct clique 19 5 --out " + graph).exit_code == 0);

    const RunResult r = run_cli("certify " + graph);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"size\": 4") != std::string::npos);
    CHECK(r.output.find("pick (1, 1) covers rows 1 2 3 4 5 6") != std::string::npos);
    CHECK(r.output.find("verified=true") != std::string::npos);
    CHECK(r.output.find("rate <= 15/19") != std::string::npos);

    const RunResult quiet = run_cli("certify --json " + graph);
    CHECK(quiet.exit_code == 0);
    CHECK(quiet.output.find("verified=") == std::string::npos);
    CHECK_FALSE(nlohmann::json::parse(quiet.output, nullptr, /*allow_exceptions=*/false)
                    .is_discarded());
    fs::remove(graph);
}

TEST_CASE("cli enumerate honours the limit") {
    const std::string graph = write_temp("k4", "");
    REQUIRE(run_cli("construct complete 4 --out " + graph).exit_code == 0);

    const RunResult r = run_cli("enumerate " + graph + " --limit 8");
    CHECK(r.exit_code == 0);
    std::istringstream lines(r.output);
    std::vector<std::string> words;
    for (std::string line; std::getline(lines, line);) words.push_back(line);
    REQUIRE(words.size() == 8);
    CHECK(words.front() == "0000");

    CHECK(run_cli("enumerate " + graph + " --limit 7").exit_code == 2);
    CHECK(run_cli("enumerate " + graph).exit_code == 2); // --limit is required
    fs::remove(graph);
}

TEST_CASE("cli simulate summarizes and is deterministic") {
    const std::string graph = write_temp("chain", "");
    REQUIRE(run_cli("construct chain 20 4 --out " + graph).exit_code == 0);

    const RunResult r = run_cli("simulate " + graph + " --failures 100 --seed 7");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("failures=100") != std::string::npos);
    CHECK(r.output.find("correct=true") != std::string::npos);

    const std::string rep1 = temp_file("rep1").string();
    const std::string rep2 = temp_file("rep2").string();
    CHECK(run_cli("simulate " + graph + " --failures 100 --seed 7 --json --out " + rep1)
              .exit_code == 0);
    CHECK(run_cli("simulate " + graph + " --failures 100 --seed 7 --json --out " + rep2)
              .exit_code == 0);
    const std::string body1 = slurp(rep1);
    CHECK(body1 == slurp(rep2));

    const auto j = nlohmann::json::parse(body1);
    CHECK(j["n"] == 20);
    CHECK(j["seed"] == 7);
    CHECK(j["rng"] == "mt19937_64");
    CHECK(j["events"].size() == 100);
    CHECK(j["all_correct"] == true);
    fs::remove(graph);
    fs::remove(rep1);
    fs::remove(rep2);
}

TEST_CASE("cli simulate flags corruption with exit 4") {
    const std::string graph = write_temp("k3", "");
    REQUIRE(run_cli("construct complete 3 --out " + graph).exit_code == 0);

    const RunResult r =
        run_cli("simulate " + graph + " --failures 20 --seed 3 --message 10 --corrupt 1");
    CHECK(r.exit_code == 4);
    CHECK(r.output.find("correct=false") != std::string::npos);
    fs::remove(graph);
}

TEST_CASE("cli sweep emits one row per n and skips n=2 with a warning") {
    const RunResult r = run_cli("sweep --n-min 2 --n-max 12 --r-rule const:3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("skipping n = 2") != std::string::npos);

    std::istringstream lines(r.output);
    std::vector<std::string> rows;
    for (std::string line; std::getline(lines, line);)
        if (!line.empty() && line.find("skipping") == std::string::npos) rows.push_back(line);
    REQUIRE(rows.size() == 11); // header + n = 3..12
    CHECK(rows.front() ==
          "n,r,p,rank_achieved,rate_achieved,lower_bound,upper_bound,"
          "connected_rank,connected_rate,rate_float");
    // n=12, r=3: exact rate 3/4 on both constructions' grid row.
    CHECK(rows.back().rfind("12,3,3,3,3/4,3/4,3/4,", 0) == 0);

    CHECK(run_cli("sweep --n-min 5 --n-max 4").exit_code == 2);
    CHECK(run_cli("sweep --n-min 5 --n-max 10 --r-rule fib").exit_code == 2);
}

TEST_CASE("cli pipeline agrees with the library") {
    const std::string graph = write_temp("chain23", "");
    REQUIRE(run_cli("construct chain 23 5 --out " + graph).exit_code == 0);

    const graphcode::StorageCode code =
        graphcode::build_code(graphcode::connected_chain(23, 5));

    const RunResult analyzed = run_cli("analyze " + graph);
    REQUIRE(analyzed.exit_code == 0);
    const auto j = nlohmann::json::parse(analyzed.output);
    CHECK(j["rank"] == code.rank);
    CHECK(j["rate_num"] == code.rate.num());
    CHECK(j["connected"] == true);

    const std::string cert_file = temp_file("cert").string();
    REQUIRE(run_cli("certify --json " + graph + " --out " + cert_file).exit_code == 0);
    const auto cj = nlohmann::json::parse(slurp(cert_file));
    CHECK(cj["size"].get<std::size_t>() <= code.rank);
    CHECK(cj["size"].get<std::size_t>() >= 23 / 6);
    fs::remove(graph);
    fs::remove(cert_file);
}
