#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "lexgb/errors.hpp"
#include "lexgb/io.hpp"
#include "lexgb/subres.hpp"

using namespace lexgb;
using namespace lexgb::testing;
namespace fs = std::filesystem;

namespace {

const fs::path& workdir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / ("lexgb_cli_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string path(const std::string& name) { return (workdir() / name).string(); }

// Runs the CLI with stdout in `out` and stderr discarded; returns the exit code.
int cli(const std::string& args, const std::string& out = "stdout.txt") {
    const std::string cmd = std::string(LEXGB_CLI_PATH) + " " + args + " > " + path(out) + " 2> " + path("stderr.txt");
    const int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

BiPoly ylin(const UniPoly& c) { return BiPoly(c.prime(), {c, UniPoly::constant(c.prime(), 1)}); }

Problem intro_problem() {
    const UniPoly X = U(P16, {0, 1});
    const BiPoly a = ylin(X) * BiPoly::y(P16) * ylin(U(P16, {1, 1})) * ylin(U(P16, {-1}));
    const BiPoly b = ylin(X) * ylin(U(P16, {1, -1}));
    return Problem{P16, a, b, U(P16, {0, 0, 1}), ModulusPolicy::Given};
}

}  // namespace

TEST_CASE("problem and result files round trip") {
    const Problem pb = intro_problem();
    const Problem back = parse_problem(serialize_problem(pb));
    CHECK(back.a == pb.a);
    CHECK(back.b == pb.b);
    CHECK(*back.T == *pb.T);
    CHECK(back.policy == ModulusPolicy::Given);
    const Result r = compute_problem(pb);
    const Result rb = parse_result(serialize_result(r));
    REQUIRE(rb.members.size() == r.members.size());
    CHECK(rb.members[0].basis.polys() == r.members[0].basis.polys());
    CHECK(rb.members[0].modulus == r.members[0].modulus);
    CHECK(*rb.T == *r.T);
    CHECK_THROWS_AS(parse_problem("{\"p\": 7, \"a\": [[1]]}"), ParseError);
    CHECK_THROWS_AS(parse_problem("{\"p\": 8, \"a\": [[1]], \"b\": [[1]]}"), ParseError);
    CHECK_THROWS_AS(parse_problem("[1, 2"), ParseError);
    CHECK_THROWS_AS(parse_policy("fastest"), ParseError);
}

TEST_CASE("compute and verify the intro system") {
    write_file(path("intro.json"), serialize_problem(intro_problem()));
    REQUIRE(cli("compute --in " + path("intro.json") + " --out " + path("intro_res.json")) == 0);
    const Result r = parse_result(read_file(path("intro_res.json")));
    REQUIRE(r.members.size() == 1);
    CHECK(r.members[0].basis.elems.size() == 3);
    CHECK(cli("verify --problem " + path("intro.json") + " --result " + path("intro_res.json"), "verify.txt") == 0);
    CHECK(read_file(path("verify.txt")).find("OK") != std::string::npos);

    // Dropping the middle element leaves a lexGB of a larger ideal.
    Result bad = r;
    bad.members[0].basis.elems.erase(bad.members[0].basis.elems.begin() + 1);
    write_file(path("bad_res.json"), serialize_result(bad));
    CHECK(cli("verify --problem " + path("intro.json") + " --result " + path("bad_res.json"), "verify_bad.txt") == 4);
    CHECK(read_file(path("verify_bad.txt")).find("FAILED") != std::string::npos);
}

TEST_CASE("modulus policies") {
    // y^3 + (x-1) y^2 + x(x+1) y + x  and  y^3 - y^2 + y - x, no T.
    const Problem pb{P16, B(P16, {{0, 1}, {0, 1, 1}, {-1, 1}, {1}}), B(P16, {{0, -1}, {1}, {-1}, {1}}), std::nullopt,
                     ModulusPolicy::Resultant};
    write_file(path("pair.json"), serialize_problem(pb));
    for (const std::string pol : {"resultant", "sqf-split"}) {
        const std::string res = path("pair_" + pol + ".json");
        REQUIRE(cli("compute --in " + path("pair.json") + " --policy " + pol + " --out " + res) == 0);
        CHECK(cli("verify --problem " + path("pair.json") + " --result " + res) == 0);
        const Result r = parse_result(read_file(res));
        REQUIRE(r.T.has_value());
        CHECK(*r.T == monic(resultant_y(pb.a, pb.b)));
    }
    CHECK(cli("compute --in " + path("pair.json") + " --policy given") == 3);
}

TEST_CASE("first row under the resultant policy") {
    REQUIRE(cli("gen --family 1 --index 1 --out " + path("f11.json")) == 0);
    REQUIRE(cli("compute --in " + path("f11.json") + " --policy resultant --out " + path("f11_res.json")) == 0);
    const Result r = parse_result(read_file(path("f11_res.json")));
    REQUIRE(r.T.has_value());
    UniPoly repeated = UniPoly::constant(P16, 1);
    for (const SqfFactor& f : sqf_decomposition(*r.T))
        if (f.e > 1) repeated = repeated * f.r;
    int over_repeated = 0;
    for (const ResultMember& m : r.members) over_repeated += !gcd(m.basis.h1(), repeated).is_one();
    // Two local members plus the triangular one over the simple roots.
    CHECK(r.members.size() == 3);
    CHECK(over_repeated == 2);
}

TEST_CASE("stats reproduces the first row") {
    REQUIRE(cli("gen --family 1 --index 1 --out " + path("row1.json")) == 0);
    REQUIRE(cli("stats --in " + path("row1.json"), "stats.txt") == 0);
    const std::string out = read_file(path("stats.txt"));
    CHECK(out.find("241\t10\t24\t266\t") != std::string::npos);
    CHECK(out.find("\t171\t95\t47.50\t2\t(8.50)\t") != std::string::npos);
}

TEST_CASE("generation is byte deterministic") {
    REQUIRE(cli("gen --family 1 --index 3 --out " + path("g1.json")) == 0);
    REQUIRE(cli("gen --family 1 --index 3 --out " + path("g2.json")) == 0);
    CHECK(read_file(path("g1.json")) == read_file(path("g2.json")));
    REQUIRE(cli("--seed 9 gen --family random --index 2 --prime 101 --out " + path("r1.json")) == 0);
    REQUIRE(cli("--seed 9 gen --family random --index 2 --prime 101 --out " + path("r2.json")) == 0);
    CHECK(read_file(path("r1.json")) == read_file(path("r2.json")));
    const Problem pb = parse_problem(read_file(path("r1.json")));
    CHECK(pb.p.value() == 101);
    CHECK(pb.T.has_value());
}

TEST_CASE("exit codes") {
    write_file(path("broken.json"), "{\"p\": 65521, \"a\": [[1, 2]");
    CHECK(cli("compute --in " + path("broken.json")) == 2);
    CHECK(cli("compute --in " + path("missing_file.json")) != 0);
    CHECK(cli("gen --family 7") == 2);
    CHECK(cli("frobnicate") == 2);
    CHECK(cli("bench --family 1 --indices 3-1") == 2);

    // a = x y + x is nilpotent modulo x^2.
    Problem nil{P16, B(P16, {{0, 1}, {0, 1}}), BiPoly::y(P16), U(P16, {0, 0, 1}), ModulusPolicy::Given};
    write_file(path("nil.json"), serialize_problem(nil));
    CHECK(cli("compute --in " + path("nil.json")) == 3);

    Problem no_t = intro_problem();
    no_t.T.reset();
    write_file(path("no_t.json"), serialize_problem(no_t));
    CHECK(cli("compute --in " + path("no_t.json")) == 3);
}

TEST_CASE("bench writes a CSV") {
    REQUIRE(cli("bench --family 1 --indices 1 --reps 1 --csv " + path("bench.csv")) == 0);
    const std::string csv = read_file(path("bench.csv"));
    CHECK(csv.rfind("case,policy,phase,median_us\n", 0) == 0);
    CHECK(csv.find("f1-1,given,total,") != std::string::npos);
    CHECK(csv.find("f1-1,sqf-split,") != std::string::npos);
}
