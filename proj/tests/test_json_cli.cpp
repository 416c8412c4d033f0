#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "upbw/json_io.hpp"

using namespace upbw;
using io::json;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

// Runs the installed binary with the given arguments, capturing stdout.
CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(UPBW_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult r;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::filesystem::path scratch_dir() {
    static const std::filesystem::path dir = [] {
        const auto p = std::filesystem::temp_directory_path() /
                       ("upbw_test_" + std::to_string(getpid()));
        std::filesystem::create_directories(p);
        return p;
    }();
    return dir;
}

std::string write_scratch(const std::string& name, const std::string& text) {
    const auto path = scratch_dir() / name;
    std::ofstream out(path);
    out << text;
    return path.string();
}

}  // namespace

TEST_CASE("scalar, vector, and matrix values survive a round trip") {
    const cplx z(0.125, -3.5);
    CHECK(io::complex_from_json(io::complex_to_json(z)) == z);

    CVector v(3);
    v << cplx(1.0, 0.0), cplx(-0.25, 0.75), cplx(0.0, -2.0);
    const CVector v2 = io::vector_from_json(io::vector_to_json(v));
    CHECK((v - v2).cwiseAbs().maxCoeff() == 0.0);

    CMatrix m(2, 3);
    m << cplx(1, 2), cplx(3, 4), cplx(5, 6), cplx(-1, 0), cplx(0, 1), cplx(0.5, -0.5);
    const CMatrix m2 = io::matrix_from_json(io::matrix_to_json(m));
    CHECK((m - m2).cwiseAbs().maxCoeff() == 0.0);

    // Doubles re-parse exactly because serialization uses shortest round-trip.
    const double awkward = 0.1 + 0.2;
    json j = awkward;
    CHECK(json::parse(j.dump()).get<double>() == awkward);
}

TEST_CASE("product families serialize losslessly") {
    Upb p = build_pyramid();
    p.label = "pyramid";
    const json j = io::upb_to_json(p);
    const Upb q = io::upb_from_json(j);
    CHECK(q.label == "pyramid");
    CHECK(q.idx == p.idx);
    REQUIRE(q.size() == p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        CHECK((q.states[i].alpha - p.states[i].alpha).cwiseAbs().maxCoeff() == 0.0);
        CHECK((q.states[i].beta - p.states[i].beta).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("malformed family documents are rejected") {
    json ok = io::upb_to_json(build_pyramid());

    json no_dims = ok;
    no_dims.erase("dims");
    CHECK_THROWS_AS(io::upb_from_json(no_dims), std::invalid_argument);

    json short_dims = ok;
    short_dims["dims"] = json::array({3});
    CHECK_THROWS_AS(io::upb_from_json(short_dims), std::invalid_argument);

    json no_states = ok;
    no_states.erase("states");
    CHECK_THROWS_AS(io::upb_from_json(no_states), std::invalid_argument);

    json bad_factor = ok;
    bad_factor["states"][0]["alpha"] = json::array({json::array({1.0, 0.0})});
    CHECK_THROWS_AS(io::upb_from_json(bad_factor), std::invalid_argument);

    json bad_complex = ok;
    bad_complex["states"][0]["alpha"][0] = json::array({1.0});
    CHECK_THROWS_AS(io::upb_from_json(bad_complex), std::invalid_argument);
}

TEST_CASE("deterministic dumps end in exactly one newline") {
    const json j = io::upb_to_json(build_pyramid());
    const std::string a = io::dump_deterministic(j);
    const std::string b = io::dump_deterministic(j);
    CHECK(a == b);
    REQUIRE(!a.empty());
    CHECK(a.back() == '\n');
    CHECK(a[a.size() - 2] != '\n');
}

TEST_CASE("cli epsilon reproduces the certified bound") {
    const CliResult r = run_cli("epsilon --upb pyramid --restarts 8 --iters 200");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    const double closed =
        (4.0 + std::sqrt(2.0) - std::sqrt(5.0) - std::sqrt(10.0)) / 9.0;
    CHECK(std::abs(doc["lower"].get<double>() - closed) < 1e-10);
    CHECK(doc["upper"].get<double>() >= closed);
}

TEST_CASE("cli output is byte-for-byte deterministic") {
    const std::string args = "epsilon --upb pyramid --seed 5 --restarts 8 --iters 200";
    const CliResult r1 = run_cli(args);
    const CliResult r2 = run_cli(args);
    REQUIRE(r1.exit_code == 0);
    CHECK(r1.out == r2.out);
}

TEST_CASE("a built family can be re-read and certified from file") {
    const std::string path = (scratch_dir() / "pyramid.json").string();
    const CliResult built = run_cli("build --upb pyramid -o " + path);
    REQUIRE(built.exit_code == 0);

    const std::string common = " --seed 3 --restarts 8 --iters 200";
    const CliResult direct = run_cli("report --upb pyramid" + common);
    const CliResult loaded = run_cli("report --upb file:" + path + common);
    REQUIRE(direct.exit_code == 0);
    REQUIRE(loaded.exit_code == 0);

    const json a = json::parse(direct.out);
    const json b = json::parse(loaded.out);
    // Everything except the echoed configuration must agree exactly.
    for (const char* key : {"upb", "validation", "state", "epsilon", "witness", "map"})
        CHECK(a.at(key) == b.at(key));
    CHECK(a["map"]["certificates"]["granted"].get<bool>());
}

TEST_CASE("cli exit codes distinguish failure classes") {
    // A repeated member invalidates the family.
    Upb dup = build_pyramid();
    dup.states[1] = dup.states[0];
    const std::string bad = write_scratch("dup.json",
                                           io::dump_deterministic(io::upb_to_json(dup)));
    CHECK(run_cli("validate --upb file:" + bad).exit_code == 1);

    CHECK(run_cli("validate --upb nosuchfamily").exit_code == 3);
    CHECK(run_cli("validate --upb file:/nonexistent/path.json").exit_code == 3);

    const std::string garbled = write_scratch("garbled.json", "{not json");
    CHECK(run_cli("validate --upb file:" + garbled).exit_code == 3);
}
