#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <string>

#include "pldig/domination.hpp"
#include "pldig/fixtures.hpp"
#include "pldig/io.hpp"
#include "pldig/pld.hpp"

#include "oracles.hpp"

using nlohmann::json;

namespace {

struct CliResult {
    int status = -1;
    std::string out;
};

CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    std::string cmd = env_prefix + std::string(PLDIG_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = "/tmp/" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("cli lists the fixtures") {
    auto r = run_cli("fixtures");
    REQUIRE(r.status == 0);
    auto j = json::parse(r.out);
    REQUIRE(j.is_array());
    CHECK(j.size() == 8);
    CHECK(j[0]["name"] == "fig1");
    CHECK(j[0]["vertices"] == 6);
    CHECK(j[0]["arcs"] == 12);
}

TEST_CASE("cli kernel and semikernel queries") {
    auto r = run_cli("kernels --fixture fig2_left --k 2 --l 2");
    REQUIRE(r.status == 0);
    auto j = json::parse(r.out);
    CHECK(j["count"] == 3);
    CHECK(j["sets"] == json::parse("[[1],[2,4],[3]]"));

    auto s = run_cli("semikernels --fixture fig4_right");
    REQUIRE(s.status == 0);
    auto js = json::parse(s.out);
    CHECK(js["count"] == 8);

    auto empty = run_cli("kernels --fixture fig3 --k 2 --l 1");
    REQUIRE(empty.status == 0);
    CHECK(json::parse(empty.out)["count"] == 0);
}

TEST_CASE("cli grundy enumeration") {
    auto r = run_cli("grundy --fixture fig5_left --k 2 --l 2");
    REQUIRE(r.status == 0);
    auto j = json::parse(r.out);
    CHECK(j["count"] == 6);
    bool found = false;
    for (const auto& g : j["labelings"])
        if (g == json::parse(R"({"1":2,"2":0,"3":1,"4":0})")) found = true;
    CHECK(found);
}

TEST_CASE("cli fibonacci agrees with the library") {
    auto d = pldig::fixture("fig2_left").digraph;
    auto with_empty = run_cli("fibonacci --fixture fig2_left");
    REQUIRE(with_empty.status == 0);
    CHECK(json::parse(with_empty.out)["fibonacci"] == pldig::fibonacci_number(d));
    auto skipped = run_cli("fibonacci --fixture fig2_left --exclude-empty");
    REQUIRE(skipped.status == 0);
    CHECK(json::parse(skipped.out)["fibonacci"] == pldig::fibonacci_number(d) - 1);
}

TEST_CASE("cli pld construction") {
    auto r = run_cli("build-pld --fixture fig1");
    REQUIRE(r.status == 0);
    auto j = json::parse(r.out);
    CHECK(j["vertices"] == 9);
    CHECK(j["arcs"].size() == 18);
    CHECK(j.contains("map"));

    auto ld = run_cli("line-digraph --fixture fig2_left");
    REQUIRE(ld.status == 0);
    auto jl = json::parse(ld.out);
    auto right = pldig::fixture("fig2_right").digraph;
    REQUIRE(jl["arcs"].size() == right.arcs().size());
    for (std::size_t i = 0; i < right.arcs().size(); ++i) {
        CHECK(jl["arcs"][i][0] == right.arcs()[i].tail + 1);
        CHECK(jl["arcs"][i][1] == right.arcs()[i].head + 1);
    }
}

TEST_CASE("cli reads edge lists and dot, writes dot") {
    auto path = write_temp("pldig_cli_digon.txt", "2 2\n1 2\n2 1\n");
    auto r = run_cli("kernels --input " + path + " --k 2 --l 1");
    REQUIRE(r.status == 0);
    CHECK(json::parse(r.out)["sets"] == json::parse("[[1],[2]]"));

    auto dot = run_cli("export-dot --input " + path);
    REQUIRE(dot.status == 0);
    auto back = pldig::parse_dot(dot.out);
    CHECK(back.arcs() == pldig::ArcSet{{0, 1}, {1, 0}});

    auto dot_path = write_temp("pldig_cli_digon.dot", dot.out);
    auto again = run_cli("fibonacci --input " + dot_path);
    REQUIRE(again.status == 0);
    CHECK(json::parse(again.out)["fibonacci"] == 3);
}

TEST_CASE("cli --output writes the payload to a file") {
    std::string path = "/tmp/pldig_cli_out.json";
    std::remove(path.c_str());
    auto r = run_cli("kernels --fixture fig2_left --k 2 --l 2 --output " + path);
    REQUIRE(r.status == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    REQUIRE(in.good());
    json j;
    in >> j;
    CHECK(j["count"] == 3);
}

TEST_CASE("cli errors are machine readable and exit 2") {
    auto both = run_cli("kernels --fixture fig1 --input /tmp/nope --k 2 --l 1");
    CHECK(both.status == 2);
    CHECK(json::parse(both.out)["error"]["kind"] == "OptionConflict");

    auto neither = run_cli("kernels --k 2 --l 1");
    CHECK(neither.status == 2);
    CHECK(json::parse(neither.out)["error"]["kind"] == "OptionConflict");

    auto unknown = run_cli("semikernels --fixture fig9");
    CHECK(unknown.status == 2);
    CHECK(json::parse(unknown.out)["error"]["kind"] == "UnknownFixture");

    auto badk = run_cli("kernels --fixture fig1 --k 1 --l 1");
    CHECK(badk.status == 2);
    CHECK(json::parse(badk.out)["error"]["kind"] == "InvalidArgument");

    auto path = write_temp("pldig_cli_path.txt", "3 2\n1 2\n2 3\n");
    auto degree = run_cli("line-digraph --input " + path);
    CHECK(degree.status == 2);
    CHECK(json::parse(degree.out)["error"]["kind"] == "MinInDegreeZero");

    auto badflag = run_cli("fixtures --bogus");
    CHECK(badflag.status == 2);
    CHECK(json::parse(badflag.out)["error"]["kind"] == "InvalidArgument");

    auto nosub = run_cli("");
    CHECK(nosub.status == 2);

    auto badparse = write_temp("pldig_cli_bad.txt", "2 1\n1 9\n");
    auto parse = run_cli("kernels --input " + badparse + " --k 2 --l 1");
    CHECK(parse.status == 2);
    CHECK(json::parse(parse.out)["error"]["kind"] == "ParseError");
}

TEST_CASE("cli campaign runs and reports violations through the exit code") {
    std::string base = "campaign --trials 3 --max-n 4 --p 0.3 --seed 7 --pld-cap 50 "
                       "--pld-vertex-cap 16 --grundy-cap 2000";
    auto clean = run_cli(base + " --grid 2:1");
    REQUIRE(clean.status == 0);
    auto j = json::parse(clean.out);
    CHECK(j["config"]["seed"] == 7);
    CHECK(j["config"]["kl_grid"] == json::parse("[[2,1]]"));

    auto rerun = run_cli(base + " --grid 2:1");
    CHECK(rerun.out == clean.out);

    auto violating = run_cli(
        "campaign --trials 25 --max-n 5 --p 0.35 --seed 5 --pld-cap 60 "
        "--grundy-cap 2000 --grid 3:1,3:2");
    CHECK(violating.status == 1);
    auto jv = json::parse(violating.out);
    long long total = 0;
    for (const auto& row : jv["per_theorem"]) total += row["violation_count"].get<long long>();
    CHECK(total > 0);

    auto fixtures_only = run_cli("campaign --fixtures --grid 2:1,2:2 --pld-cap 60");
    CHECK(fixtures_only.status == 0);
    CHECK(json::parse(fixtures_only.out)["truncated"] == true);
}

TEST_CASE("cli campaign seed falls back to the environment") {
    auto r = run_cli("campaign --trials 2 --max-n 4 --grid 2:1", "PLDIG_SEED=99 ");
    REQUIRE(r.status == 0);
    CHECK(json::parse(r.out)["config"]["seed"] == 99);
}
