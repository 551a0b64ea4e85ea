#include <doctest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

// Runs the CLI through the shell; stderr is discarded.
Run run(const std::string& args)
{
    const std::string cmd = std::string("\"") + MONORES_CLI + "\" " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data(const char* name) { return std::string("\"") + MONORES_TEST_DATA + "/" + name + "\""; }

fs::path scratch(const char* name)
{
    const auto dir = fs::temp_directory_path() / "monores_cli_test";
    fs::create_directories(dir);
    const auto p = dir / name;
    fs::remove(p);
    return p;
}

}  // namespace

TEST_CASE("mingens minimalizes and both input formats agree")
{
    const auto r = run("mingens --ideal \"x1^2, x1^3*x2, x2^2, x1*x2\"");
    CHECK(r.code == 0);
    CHECK(r.out == "vars: 2\nx2^2\nx1*x2\nx1^2\n");
    const auto text = run("mingens --format json " + data("ex.txt"));
    const auto json = run("mingens --format json " + data("ex.json"));
    CHECK(text.code == 0);
    CHECK(text.out == json.out);
}

TEST_CASE("betti totals of the worked example")
{
    for (const char* method : {"faces", "interval", "agreement"}) {
        const auto r = run(std::string("betti --format json --method ") + method + " " + data("ex.txt"));
        REQUIRE(r.code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j.at("totals") == nlohmann::json{5, 9, 7, 2});
    }
}

TEST_CASE("json output is byte-identical across runs")
{
    for (const std::string args : {"verify --format json", "complex --format json --kind scarf",
                                   "betti --format json --field 2", "complex --kind graph --format dot"}) {
        const auto a = run(args + " " + data("xyz.txt"));
        const auto b = run(args + " " + data("xyz.txt"));
        CHECK(a.code == b.code);
        CHECK(!a.out.empty());
        CHECK(a.out == b.out);
    }
    CHECK(run("conjecture --format json --trials 8 --seed 11").out ==
          run("conjecture --format json --trials 8 --seed 11").out);
}

TEST_CASE("exit codes")
{
    CHECK(run("verify " + data("ex.txt")).code == 0);
    CHECK(run("mingens --ideal \"x1^\"").code == 2);
    CHECK(run("mingens --ideal \"x1 + x2\"").code == 2);
    CHECK(run("no-such-command").code == 2);
    CHECK(run("betti --method bogus " + data("ex.txt")).code == 2);
    CHECK(run("betti --cap-lattice 2 " + data("ex.txt")).code == 3);
    CHECK(run("complex --kind taylor --cap-faces 4 " + data("ex.txt")).code == 3);
    // xyz has a non-minimal Buchberger complex, so the face count is refused
    CHECK(run("betti --method faces " + data("xyz.txt")).code == 4);
    CHECK(run("betti --method interval " + data("xyz.txt")).code == 0);
    CHECK(run("ibar --ideal \"x1*x2, x1*x3\"").code == 5);
    CHECK(run("ibar --ideal \"x1^2*x2, x2^3, x1*x3^2\"").code == 0);
}

TEST_CASE("verify detects a dropped facet")
{
    const auto r = run("verify --format json --drop-facet 0 " + data("ex.txt"));
    CHECK(r.code == 1);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("all_passed") == false);
    bool witnessed = false;
    for (const auto& c : j.at("checks"))
        if (c.at("name") == "buchberger:acyclic_over_Q" && c.at("status") == "fail")
            witnessed = c.contains("witness");
    CHECK(witnessed);
}

TEST_CASE("random ideals feed into verify")
{
    const auto file = scratch("random.json");
    for (int seed = 0; seed < 5; ++seed) {
        const auto args = "random --format json --n 4 --gens 6 --maxdeg 3 --seed " + std::to_string(seed);
        const auto r = run(args);
        REQUIRE(r.code == 0);
        CHECK(run(args).out == r.out);
        std::ofstream(file) << r.out;
        CHECK(run("verify \"" + file.string() + "\"").code == 0);
    }
    CHECK(run("random --mode strongly-generic --n 3 --gens 5 --maxdeg 6 --seed 2").code == 0);
    // strongly generic sampling needs at least r distinct exponents per variable
    CHECK(run("random --mode strongly-generic --n 3 --gens 5 --maxdeg 4").code == 2);
}

TEST_CASE("conjecture log is deterministic and replays")
{
    const auto a = scratch("a.jsonl"), b = scratch("b.jsonl");
    const std::string common = "conjecture --trials 25 --n 4 --gens 7 --maxdeg 4 --seed 42 --log ";
    CHECK(run(common + "\"" + a.string() + "\"").code == 0);
    CHECK(run(common + "\"" + b.string() + "\"").code == 0);

    auto strip = [](const fs::path& p) {
        std::ifstream in(p);
        std::string line, out;
        while (std::getline(in, line)) {
            auto j = nlohmann::json::parse(line);
            j.erase("timestamp");
            out += j.dump() + "\n";
        }
        return out;
    };
    const auto sa = strip(a);
    CHECK(sa == strip(b));
    CHECK(std::count(sa.begin(), sa.end(), '\n') == 25);

    const auto replay = run("conjecture --replay \"" + a.string() + "\"");
    CHECK(replay.code == 0);
    CHECK(replay.out.find("mismatches: 0") != std::string::npos);

    // a tampered verdict is reported as a mismatch
    std::ifstream in(a);
    std::string first;
    std::getline(in, first);
    auto j = nlohmann::json::parse(first);
    j["verdict"] = "candidate";
    const auto bad = scratch("bad.jsonl");
    std::ofstream(bad) << j.dump() << '\n';
    CHECK(run("conjecture --replay \"" + bad.string() + "\"").code == 1);
}
