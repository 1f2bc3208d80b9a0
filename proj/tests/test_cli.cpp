#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(PERIBAND_CLI_PATH) + " " + args + " 2>&1";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) r.output.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("list-builtins") {
    const auto r = run("list-builtins");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("z_pendant") != std::string::npos);
    CHECK(r.output.find("hexagonal") != std::string::npos);
}

TEST_CASE("analyze json output") {
    const auto r = run("analyze --builtin z_pendant --format json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["beta"] == "2/3");
    CHECK(j["all_passed"] == true);
}

TEST_CASE("analyze text output") {
    const auto r = run("analyze --builtin triangular");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("precise_point=none") != std::string::npos);
    CHECK(r.output.find("all passed: yes") != std::string::npos);
}

TEST_CASE("analyze a graph file") {
    const std::string path = "cli_test_graph.tmp";
    {
        std::ofstream f(path);
        f << "dim 1\nvertex a\nvertex b\nedge a b 0\nedge a a 1\n";
    }
    const auto r = run("analyze --file " + path + " --format json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["beta"] == "2/3");
    std::remove(path.c_str());
}

TEST_CASE("missing input file exits 1") {
    const auto r = run("analyze --file missing.graph");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("error") != std::string::npos);
}

TEST_CASE("invalid graph file exits 1") {
    const std::string path = "cli_bad_graph.tmp";
    {
        std::ofstream f(path);
        f << "dim 2\nvertex a\nedge a b 0 0\n";
    }
    const auto r = run("analyze --file " + path);
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("undeclared vertex") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("bands sweep along a path") {
    const auto r = run("bands --builtin z1_lattice --path 0:3.141592653589793 --samples 5");
    CHECK(r.exit_code == 0);
    // header + 5 rows; lambda = -cos over {0, pi/4, pi/2, 3pi/4, pi}
    CHECK(r.output.find("s,theta1,lambda1") != std::string::npos);
    CHECK(r.output.find("-1") != std::string::npos);
    int lines = 0;
    for (char c : r.output)
        if (c == '\n') ++lines;
    CHECK(lines == 6);
}

TEST_CASE("bands requires a path") {
    const auto r = run("bands --builtin z1_lattice");
    CHECK(r.exit_code != 0);
}

TEST_CASE("bands dimension mismatch exits 1") {
    const auto r = run("bands --builtin hexagonal --path 0:3.14");
    CHECK(r.exit_code == 1);
}

TEST_CASE("verify passes on builtins") {
    const auto hex = run("verify --builtin hexagonal --oracle-n 6");
    CHECK(hex.exit_code == 0);
    CHECK(hex.output.find("VERIFY PASS") != std::string::npos);

    const auto c4 = run("verify --builtin c4_pendant_chain");
    CHECK(c4.exit_code == 0);

    const auto pendant = run("verify --builtin z_pendant --grid 8");
    CHECK(pendant.exit_code == 0);
}

TEST_CASE("json report read back from the binary is byte-stable") {
    const auto first = run("analyze --builtin hexagonal --format json");
    REQUIRE(first.exit_code == 0);
    auto j = nlohmann::ordered_json::parse(first.output);
    std::string again = j.dump(2);
    again.push_back('\n');
    CHECK(again == first.output);
}
