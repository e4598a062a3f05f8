// test_cli.cpp - argument parsing, config merging, drivers and emitted files
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "cli.hpp"
#include "dtrain/errors.hpp"

using namespace dtrain;
using dtrain::cli::parse_counts;
using dtrain::cli::run_cli;

namespace {

namespace fs = std::filesystem;

std::string fresh_dir(const char* name) {
    const fs::path dir = fs::path("/tmp") / (std::string("dtrain_cli_") + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir.string();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int count_lines(const std::string& text) {
    int lines = 0;
    for (const char c : text) {
        if (c == '\n') {
            ++lines;
        }
    }
    return lines;
}

void write_config(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out.good());
    out << body;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("count specifications") {
    const std::vector<int> range = parse_counts("10:300:log16");
    CHECK(range.front() == 10);
    CHECK(range.back() == 300);
    CHECK(int(range.size()) <= 16);
    CHECK(parse_counts("4,8,2") == (std::vector<int>{2, 4, 8}));
    CHECK(parse_counts("5,5") == std::vector<int>{5});
    CHECK(parse_counts("7") == std::vector<int>{7});
    CHECK_THROWS_AS(parse_counts(""), DomainError);
    CHECK_THROWS_AS(parse_counts("4:8"), DomainError);
    CHECK_THROWS_AS(parse_counts("4:8:lin3"), DomainError);
    CHECK_THROWS_AS(parse_counts("9:3:log4"), DomainError);
    CHECK_THROWS_AS(parse_counts("0,4"), DomainError);
    CHECK_THROWS_AS(parse_counts("abc"), DomainError);
}

TEST_CASE("usage errors exit with code two") {
    CHECK(run_cli({}) == 2);
    CHECK(run_cli({"single", "--switching", "heaviside", "--gamma", "1", "--s", "1"}) == 2);
    CHECK(run_cli({"single", "--switching", "gaussian", "--gamma", "1", "--s", "1",
                   "--n", "4,8"}) == 2);
    CHECK(run_cli({"single", "--bogus"}) == 2);
    CHECK(run_cli({"single", "--switching", "nonsense", "--gamma", "1", "--s", "1",
                   "--n", "4,8"}) == 2);
}

TEST_CASE("single sweep writes a stable report") {
    const std::string dir = fresh_dir("single");
    const std::vector<std::string> args = {"single", "--switching", "heaviside",
                                           "--gamma", "1",     "--s",  "1",
                                           "--n",     "4,8,16,32", "--out", dir,
                                           "--plot"};
    REQUIRE(run_cli(args) == 0);
    const std::string csv_path = dir + "/pe_heaviside.csv";
    const std::string csv = read_file(csv_path);
    CHECK(count_lines(csv) == 5);
    CHECK(csv.rfind("N,value_re,value_im,exact_re,exact_im,rel_error\n", 0) == 0);
    const std::string svg = read_file(dir + "/pe_heaviside.svg");
    CHECK(svg.find("<svg") != std::string::npos);

    REQUIRE(run_cli(args) == 0);
    CHECK(read_file(csv_path) == csv);
    CHECK(read_file(dir + "/pe_heaviside.svg") == svg);
}

TEST_CASE("config files merge under command-line overrides") {
    const std::string dir = fresh_dir("config");
    const std::string config = dir + "/run.cfg";
    write_config(config, "mode = single\n"
                         "switching = heaviside\n"
                         "gamma = 1\n"
                         "s = 1\n"
                         "n = 4,8\n"
                         "out = " + dir + "\n");
    REQUIRE(run_cli({"--config", config}) == 0);
    CHECK(count_lines(read_file(dir + "/pe_heaviside.csv")) == 3);

    REQUIRE(run_cli({"--config", config, "--n", "4,8,16,32"}) == 0);
    CHECK(count_lines(read_file(dir + "/pe_heaviside.csv")) == 5);
}

TEST_CASE("config files are validated") {
    const std::string dir = fresh_dir("badconfig");
    const std::string unknown = dir + "/unknown.cfg";
    write_config(unknown, "mode = single\nwibble = 3\n");
    CHECK(run_cli({"--config", unknown}) == 2);

    const std::string malformed = dir + "/malformed.cfg";
    write_config(malformed, "mode single\n");
    CHECK(run_cli({"--config", malformed}) == 2);

    CHECK(run_cli({"--config", dir + "/missing.cfg"}) == 2);
}

TEST_CASE("pair sweep rejects unsupported parameters") {
    CHECK(run_cli({"pair", "--gamma", "1", "--d", "1.0", "--r", "0.1", "--n", "1,2"}) == 2);
    CHECK(run_cli({"pair", "--switching", "gaussian", "--gamma", "1", "--d", "1.2",
                   "--r", "0.1", "--n", "1,2"}) == 2);
}

TEST_CASE("pair sweep writes all three reports") {
    const std::string dir = fresh_dir("pair");
    REQUIRE(run_cli({"pair", "--gamma", "1", "--d", "1.2", "--r", "0.1",
                     "--n", "1,2,3,4,6,8", "--out", dir}) == 0);
    for (const char* stem : {"l_ii", "l_ab", "m"}) {
        const std::string csv = read_file(dir + "/" + stem + ".csv");
        CHECK(count_lines(csv) == 7);
    }
}

TEST_CASE("lemma battery runs at configurable depth") {
    CHECK(run_cli({"rs-verify"}) == 0);
    CHECK(run_cli({"rs-verify", "--levels", "2"}) == 0);
    CHECK(run_cli({"rs-verify", "--levels", "0"}) == 2);
    CHECK(run_cli({"rs-verify", "--levels", "9"}) == 2);
}

TEST_CASE("unreachable tolerances exit with code three") {
    const std::string dir = fresh_dir("tolfail");
    CHECK(run_cli({"single", "--switching", "heaviside", "--gamma", "1", "--s", "1",
                   "--n", "4,8", "--tol", "1e-30", "--out", dir}) == 3);
}

TEST_CASE("unwritable output locations exit with code two") {
    CHECK(run_cli({"single", "--switching", "heaviside", "--gamma", "1", "--s", "1",
                   "--n", "4,8", "--out", "/proc/dtrain_nope"}) == 2);
}

} // TEST_SUITE
