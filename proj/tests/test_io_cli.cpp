#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "partlog/cache.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace partlog;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

// Run the CLI with a private cache dir; capture stdout+stderr.
RunResult run_cli(const std::string& args, const std::string& cache_dir) {
    const std::string cmd = "PARTLOG_CACHE_DIR=" + cache_dir + " " + std::string(PARTLOG_CLI_PATH) +
                            " " + args + " 2>&1";
    std::array<char, 4096> buffer{};
    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buffer.data(), buffer.size(), pipe)) result.output += buffer.data();
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::filesystem::path temp_dir(const std::string& tag) {
    auto dir = std::filesystem::temp_directory_path() /
               ("partlog-test-" + tag + "-" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    return dir;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("cache file round-trips byte-identically") {
    const auto dir = temp_dir("roundtrip");
    const ExactSequence seq = generate(PartitionFamily::parse("frac:-1/2"), 40);
    const auto path = dir / "frac.seq";
    write_sequence_file(path, seq);
    const ExactSequence back = read_sequence_file(path);
    CHECK(back.label() == seq.label());
    CHECK(back.start_index() == seq.start_index());
    CHECK(back.size() == seq.size());
    for (std::size_t i = 0; i <= 40; ++i) CHECK(back.at(i) == seq.at(i));
    const auto path2 = dir / "frac2.seq";
    write_sequence_file(path2, back);
    CHECK(slurp(path) == slurp(path2));
    std::filesystem::remove_all(dir);
}

TEST_CASE("cache header and truncation errors") {
    const auto dir = temp_dir("badcache");
    {
        std::ofstream out(dir / "bad.seq");
        out << "not-a-header\n1\n";
    }
    CHECK_THROWS_AS(read_sequence_file(dir / "bad.seq"), std::runtime_error);
    {
        std::ofstream out(dir / "short.seq");
        out << "partlog-seq v1 family=p start=0 count=5\n1\n1\n";
    }
    CHECK_THROWS_AS(read_sequence_file(dir / "short.seq"), std::runtime_error);
    CHECK_THROWS_AS(read_sequence_file(dir / "missing.seq"), std::runtime_error);
    std::filesystem::remove_all(dir);
}

TEST_CASE("cached_generate reuses covering runs") {
    const auto dir = temp_dir("cachedgen");
    const CacheConfig config{dir};
    const auto family = PartitionFamily::parse("p");
    cached_generate(config, family, 50);
    const auto path = cache_path(config, "p");
    const auto stamp1 = std::filesystem::last_write_time(path);
    const ExactSequence again = cached_generate(config, family, 30);  // covered: no rewrite
    CHECK(std::filesystem::last_write_time(path) == stamp1);
    CHECK(again.covers(50));
    cached_generate(config, family, 80);  // extension rewrites
    CHECK(read_sequence_file(path).covers(80));
    std::filesystem::remove_all(dir);
}

TEST_CASE("cli: threshold prints the settled index") {
    const auto dir = temp_dir("cli-threshold");
    const auto r = run_cli("threshold --family p --horizon 200", dir.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("candidate_N = 25") != std::string::npos);
    std::filesystem::remove_all(dir);
}

TEST_CASE("cli: gen writes the distinct-parts cache file with 448 at n=33") {
    const auto dir = temp_dir("cli-gen");
    const auto r = run_cli("gen --family distinct --upto 33", dir.string());
    CHECK(r.exit_code == 0);
    const ExactSequence seq = read_sequence_file(cache_path(CacheConfig{dir}, "distinct"));
    CHECK(seq.at(33) == Rational(448));
    // line for n = 33 is the header plus 34 values: last line
    std::ifstream in(cache_path(CacheConfig{dir}, "distinct"));
    std::string line, last;
    while (std::getline(in, line))
        if (!line.empty()) last = line;
    CHECK(last == "448");
    std::filesystem::remove_all(dir);
}

TEST_CASE("cli: verify BessenrodtOno matches; verify honors exit-code contract") {
    const auto dir = temp_dir("cli-verify");
    const auto ok = run_cli("verify --table BessenrodtOno", dir.string());
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("match") != std::string::npos);
    // m=5 block corners: honest mismatch, exit 1
    const auto mismatch = run_cli("verify --table Table4_mary --m 5 --box 1..60x1..60", dir.string());
    CHECK(mismatch.exit_code == 1);
    CHECK(mismatch.output.find("missing") != std::string::npos);
    std::filesystem::remove_all(dir);
}

TEST_CASE("cli: scan json is deterministic and csv has the documented header") {
    const auto dir = temp_dir("cli-scan");
    const std::string args = "scan --family p --box 2..10x2..10 --json";
    const auto first = run_cli(args, dir.string());
    const auto second = run_cli(args, dir.string());
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);
    CHECK(first.output.find("\"command\": \"scan\"") != std::string::npos);

    const auto csv = run_cli("scan --family p --box 2..4x2..4 --csv", dir.string());
    CHECK(csv.exit_code == 0);
    CHECK(csv.output.rfind("a,b,verdict\n", 0) == 0);
    CHECK(csv.output.find("2,2,failure") != std::string::npos);
    std::filesystem::remove_all(dir);
}

TEST_CASE("cli: condition and example subcommands") {
    const auto dir = temp_dir("cli-cond");
    const auto cond = run_cli("condition --family p --N 25 --k 0 --M 25 --json", dir.string());
    CHECK(cond.exit_code == 0);
    CHECK(cond.output.find("\"d\": 2") != std::string::npos);
    const auto ex = run_cli("example --kind periodic2343", dir.string());
    CHECK(ex.exit_code == 0);
    std::filesystem::remove_all(dir);
}

TEST_CASE("cli: usage errors exit 2") {
    const auto dir = temp_dir("cli-usage");
    CHECK(run_cli("scan --family p", dir.string()).exit_code == 2);           // missing --box
    CHECK(run_cli("scan --family nope --box 1..2x1..2", dir.string()).exit_code == 2);
    CHECK(run_cli("threshold --family p --horizon 10 --mode sideways", dir.string()).exit_code == 2);
    CHECK(run_cli("nonsense", dir.string()).exit_code == 2);
    std::filesystem::remove_all(dir);
}
