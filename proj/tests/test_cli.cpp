// End-to-end tests for the command line front end: the exit code contract,
// report determinism across seeds and worker counts, and the shape of each
// output format.
#include "spinsh/spinsh.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

struct RunResult {
    int code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(SPINSH_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t n = 0;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string without_timestamp(const std::string& text) {
    std::istringstream in(text);
    std::string line, kept;
    while (std::getline(in, line))
        if (line.find("\"timestamp\"") == std::string::npos) kept += line + "\n";
    return kept;
}

} // namespace

TEST_CASE("verify runs the full catalog cleanly") {
    const auto r = run_cli("verify --lmax 4 --pairs 6 --jobs 2");
    CHECK(r.code == 0);
    CHECK(r.output.find("summary:") != std::string::npos);
    CHECK(r.output.find(" 0 failed") != std::string::npos);
}

TEST_CASE("reports are byte-identical apart from the timestamp") {
    const std::string base =
        "verify --lmax 3 --pairs 5 --seed 7 --format json --out ";
    const std::string fa = "/tmp/spinsh_report_a.json";
    const std::string fb = "/tmp/spinsh_report_b.json";
    const std::string fc = "/tmp/spinsh_report_c.json";
    CHECK(run_cli(base + fa + " --jobs 1").code == 0);
    CHECK(run_cli(base + fb + " --jobs 1").code == 0);
    CHECK(run_cli(base + fc + " --jobs 4").code == 0);

    const auto a = read_file(fa);
    CHECK(without_timestamp(a) == without_timestamp(read_file(fb)));
    CHECK(without_timestamp(a) == without_timestamp(read_file(fc)));

    const auto doc = nlohmann::json::parse(a);
    CHECK(doc["meta"]["seed"] == 7);
    CHECK(doc["meta"]["l_max"] == 3);
    CHECK(doc["summary"]["failed"] == 0);
    CHECK(doc["summary"]["total"] ==
          doc["cases"].size());
    for (const auto& c : doc["cases"]) {
        CHECK(c.contains("id"));
        CHECK(c.contains("params"));
        CHECK(c.contains("residual"));
        CHECK(c["verdict"] == "pass");
    }
    for (const auto& f : {fa, fb, fc}) std::remove(f.c_str());
}

TEST_CASE("usage errors exit with code 2") {
    const std::vector<std::string> bad = {
        "frobnicate",
        "verify --format yaml",
        "verify --filter 'nosuch*'",
        "extract",
        "extract --theorem bogus.id",
        "extract --theorem scalar.classic",
    };
    for (const auto& args : bad) {
        CAPTURE(args);
        CHECK(run_cli(args).code == 2);
    }
    CHECK(run_cli("extract --theorem scalar.classic").output.find(
              "nothing to extract") != std::string::npos);
}

TEST_CASE("numeric failures exit with code 1") {
    const auto v = run_cli("verify --filter scalar.classic --lmax 4 --tol 1e-20");
    CHECK(v.code == 1);
    CHECK(v.output.find("FAIL") != std::string::npos);
    CHECK(run_cli("extract --theorem spin1.same-l --lmax 2 --tol 1e-20").code ==
          1);
}

TEST_CASE("help exits cleanly and names the subcommands") {
    const auto r = run_cli("--help");
    CHECK(r.code == 0);
    for (const char* word : {"verify", "list", "extract"}) {
        CAPTURE(word);
        CHECK(r.output.find(word) != std::string::npos);
    }
}

TEST_CASE("list prints the whole catalog with citations") {
    const auto r = run_cli("list");
    CHECK(r.code == 0);
    CHECK(r.output.find("spin32.delta3") != std::string::npos);
    CHECK(r.output.find("eq:add3hal4") != std::string::npos);

    const auto filtered = run_cli("list --filter 'spin32.*'");
    CHECK(filtered.code == 0);
    CHECK(filtered.output.find("spin32.delta3") != std::string::npos);
    CHECK(filtered.output.find("scalar.classic") == std::string::npos);

    const auto index =
        nlohmann::json::parse(run_cli("list --format json").output);
    REQUIRE(index.is_array());
    CHECK(index.size() == spinsh::catalog::registry().size());
    for (const auto& entry : index) {
        CHECK(entry.contains("id"));
        CHECK(entry.contains("family"));
        CHECK(entry.contains("mode"));
        CHECK(entry.contains("citation"));
    }
}

TEST_CASE("extract tabulates coefficients over the whole domain") {
    const auto text = run_cli("extract --theorem scalar.ladder --lmax 4");
    CHECK(text.code == 0);
    CHECK(text.output.find("C_{t,2}") != std::string::npos);
    CHECK(text.output.find("6.000000000") != std::string::npos);

    const auto r = run_cli("extract --theorem spin1.same-l --lmax 3 --format json");
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["theorem"] == "spin1.same-l");
    CHECK(doc["citation"] == "eq:add1-1");
    REQUIRE(!doc["rows"].empty());
    bool traced = false;
    for (const auto& row : doc["rows"]) {
        CHECK(row["residual"].get<double>() < 1e-9);
        CHECK(row["spread"].get<double>() < 1e-8);
        if (row["params"]["l"] == 2 && row["params"]["j"] == "2") {
            CHECK(std::abs(row["coefficients"]["C_0"].get<double>() -
                           1.0 / 3.0) < 1e-9);
            traced = true;
        }
    }
    CHECK(traced);
}
