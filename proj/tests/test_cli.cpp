// End-to-end tests of the command-line surface: subcommands, output
// formats, the exit-code contract, env overrides and config files.

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout only
};

std::string cli_path() {
    const char* path = std::getenv("LEHMERK_CLI_BIN");
    REQUIRE(path != nullptr);
    return path;
}

RunResult run(const std::string& args) {
    std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    while (std::size_t n = fread(buffer, 1, sizeof(buffer), pipe)) result.output.append(buffer, n);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

} // namespace

TEST_CASE("phi subcommand") {
    auto r = run("phi --field -1 --d 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "8\n");

    CHECK(run("phi --field -1 --d 1").output == "1\n");

    auto checked = run("phi --field -1 --d 15 --check");
    CHECK(checked.exit_code == 0);
    CHECK(checked.output == "128\noracle OK\n");
}

TEST_CASE("oracle cap env override") {
    std::string cmd = "env LEHMERK_ORACLE_CAP=10 " + cli_path() +
                      " phi --field -1 --d 15 --check 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buffer[4096];
    while (std::size_t n = fread(buffer, 1, sizeof(buffer), pipe)) output.append(buffer, n);
    int status = pclose(pipe);
    CHECK(WEXITSTATUS(status) == 0);
    CHECK(output == "128\n"); // value printed, oracle skipped
}

TEST_CASE("split subcommand") {
    CHECK(run("split --field -1 --p 7").output == "inert\n");
    CHECK(run("split --field -1 --p 5").output == "split\n");
    CHECK(run("split --field -1 --p 2").output == "ramified\n");
    CHECK(run("split --field -1 --p 9").exit_code == 1);
    CHECK(run("split --field 1 --p 7").exit_code == 1);
}

TEST_CASE("classify subcommand and formats") {
    auto csv = run("classify --field -1 --max 10");
    CHECK(csv.exit_code == 0);
    std::istringstream in(csv.output);
    std::string line;
    std::getline(in, line);
    CHECK(line ==
          "d,squarefree,phi,phiK,splitting,irreducible,divides,realizable,normal,lehmer,strongly_lehmer");
    int rows = 0;
    std::string row5;
    while (std::getline(in, line)) {
        if (line.rfind("5,", 0) == 0) row5 = line;
        ++rows;
    }
    CHECK(rows == 9);
    CHECK(row5 == "5,1,4,16,split,0,0,0,0,1,0");

    auto jsonl = run("classify --field -1 --max 4 --format jsonl");
    CHECK(jsonl.exit_code == 0);
    CHECK(jsonl.output.find("\"phiK\"") != std::string::npos);

    auto table = run("classify --field -1 --max 4 --format table");
    CHECK(table.exit_code == 0);

    CHECK(run("classify --field -1 --max 4 --format xml").exit_code == 1);
    CHECK(run("classify --field 12 --max 4").exit_code == 1);
    CHECK(run("classify --field -1 --max 4 --out /nonexistent/dir/x.csv").exit_code == 3);
}

TEST_CASE("classify output is byte-identical across thread counts") {
    auto dir = std::filesystem::temp_directory_path() / "lehmerk_cli_test";
    std::filesystem::create_directories(dir);
    auto one = dir / "t1.csv";
    auto eight = dir / "t8.csv";
    CHECK(run("classify --field -1 --max 500 --threads 1 --out " + one.string()).exit_code == 0);
    CHECK(run("classify --field -1 --max 500 --threads 8 --out " + eight.string()).exit_code == 0);
    auto a = slurp(one);
    auto b = slurp(eight);
    CHECK(!a.empty());
    CHECK(a == b);
    std::filesystem::remove_all(dir);
}

TEST_CASE("verify subcommand") {
    auto pass = run("verify --suite lemma1 --field -1 --max 60");
    CHECK(pass.exit_code == 0);
    CHECK(pass.output.find("PASS") != std::string::npos);

    CHECK(run("verify --suite embedding --field -3 --max 2000").exit_code == 0);
    CHECK(run("verify --suite unknown --field -1").exit_code == 1);
    CHECK(run("verify --field -1").exit_code == 1); // missing --suite
    auto listed = run("verify --list");
    CHECK(listed.exit_code == 0);
    CHECK(listed.output.find("theorem1") != std::string::npos);
}

TEST_CASE("crt subcommand") {
    auto r = run("crt --field -1 --m 3 --n 5");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("PASS") != std::string::npos);
    CHECK(run("crt --field -1 --m 4 --n 6").exit_code == 1);
}

TEST_CASE("scan-ratio subcommand") {
    auto r = run("scan-ratio --w 3 --l 1/1 --max 100000");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "3\nhypothesis l < w/phi(w): true\n");

    auto empty = run("scan-ratio --w 15 --l 1/1 --max 100000");
    CHECK(empty.exit_code == 0);
    CHECK(empty.output == "hypothesis l < w/phi(w): true\n");

    auto sharp = run("scan-ratio --w 3 --l 2/1 --max 10000");
    CHECK(sharp.exit_code == 0);
    CHECK(sharp.output == "hypothesis l < w/phi(w): false\n");

    CHECK(run("scan-ratio --w 12 --l 1/1 --max 100").exit_code == 1);
}

TEST_CASE("zeta subcommand") {
    auto r = run("zeta --s 2 --tol 1/100");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("lower") != std::string::npos);
    CHECK(r.output.find("upper") != std::string::npos);
    CHECK(run("zeta --s 1").exit_code == 1);
}

TEST_CASE("config file supplies defaults, flags win") {
    auto dir = std::filesystem::temp_directory_path() / "lehmerk_cli_cfg";
    std::filesystem::create_directories(dir);
    auto cfg = dir / "run.cfg";
    {
        std::ofstream out(cfg);
        out << "[classify]\nfield=-1\nmax=4\n";
    }
    auto from_cfg = run("--config " + cfg.string() + " classify");
    CHECK(from_cfg.exit_code == 0);
    CHECK(from_cfg.output.find("\n4,") != std::string::npos);
    CHECK(from_cfg.output.find("\n5,") == std::string::npos);

    auto overridden = run("--config " + cfg.string() + " classify --max 6");
    CHECK(overridden.exit_code == 0);
    CHECK(overridden.output.find("\n6,") != std::string::npos);
    std::filesystem::remove_all(dir);
}

TEST_CASE("usage errors") {
    CHECK(run("").exit_code == 1);
    CHECK(run("nosuchcommand").exit_code == 1);
    CHECK(run("phi --field -1").exit_code == 1); // missing --d
    CHECK(run("--help").exit_code == 0);
}
