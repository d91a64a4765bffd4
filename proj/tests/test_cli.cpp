#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "mpg/named_graphs.hpp"
#include "mpg/planar_code.hpp"

using namespace mpg;
using nlohmann::json;

namespace {

std::string g_binary;

struct RunResult {
    int exit_code = -1;
    std::vector<json> lines;  // per-graph records
    json report;              // trailing run report
};

RunResult run(const std::string& args) {
    std::string out_path = "cli_stdout.tmp";
    int rc = std::system((g_binary + " " + args + " > " + out_path + " 2>/dev/null").c_str());
    RunResult res;
    res.exit_code = WEXITSTATUS(rc);
    std::ifstream in(out_path);
    std::string line;
    std::vector<json> all;
    while (std::getline(in, line))
        if (!line.empty()) all.push_back(json::parse(line));
    if (!all.empty()) {
        res.report = all.back();
        all.pop_back();
        res.lines = std::move(all);
    }
    std::remove(out_path.c_str());
    return res;
}

std::string slurp_stdout(const std::string& args) {
    std::string out_path = "cli_raw.tmp";
    std::system((g_binary + " " + args + " > " + out_path + " 2>/dev/null").c_str());
    std::ifstream in(out_path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::remove(out_path.c_str());
    return ss.str();
}

void write_adj(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    write_adjlist(out, {g});
}

}  // namespace

TEST_CASE("poly emits coefficients and evaluation") {
    write_adj("cli_k4.adj", complete_graph(4));
    RunResult res = run("poly --input cli_k4.adj --format adjlist --eval 4 --oracle");
    CHECK(res.exit_code == 0);
    REQUIRE(res.lines.size() == 1);
    CHECK(res.lines[0]["coefficients"] == json({"0", "-6", "11", "-6", "1"}));
    CHECK(res.lines[0]["eval"]["value"] == "24");
    CHECK(res.report["command"] == "poly");
    CHECK(res.report["failures"].empty());
    std::remove("cli_k4.adj");
}

TEST_CASE("poly rejects malformed input") {
    std::ofstream("cli_bad.adj") << "this is not a graph\n";
    CHECK(run("poly --input cli_bad.adj --format adjlist").exit_code != 0);
    CHECK(run("poly --input cli_no_such_file.adj").exit_code != 0);
    std::remove("cli_bad.adj");
}

TEST_CASE("generate then poly round trip") {
    RunResult gen = run("generate --order-max 7 --out cli_seven.pc");
    CHECK(gen.exit_code == 0);
    REQUIRE(gen.lines.size() == 1);
    CHECK(gen.lines[0]["classes"] == 5);

    RunResult poly = run("poly --input cli_seven.pc --eval 4");
    CHECK(poly.exit_code == 0);
    CHECK(poly.lines.size() == 5);
    for (const json& line : poly.lines) CHECK(std::stoll(line["eval"]["value"].get<std::string>()) > 0);
    std::remove("cli_seven.pc");
}

TEST_CASE("generate honors the degree filter and range guard") {
    RunResult deg4 = run("generate --order-max 6 --min-degree 4 --out cli_deg4.pc");
    CHECK(deg4.exit_code == 0);
    CHECK(deg4.lines[0]["classes"] == 1);
    CHECK(deg4.lines[0]["by_min_degree"]["3"] == 1);
    std::remove("cli_deg4.pc");
    CHECK(run("generate --order-max 30").exit_code != 0);
}

TEST_CASE("verify sweeps come back clean and deterministic") {
    RunResult res = run("verify --wheel 4 --order-max 7");
    CHECK(res.exit_code == 0);
    CHECK(res.report["failures"].empty());
    CHECK(res.report["inputs"]["checks"].get<int>() > 0);

    RunResult res5 = run("verify --wheel 5 --order-max 8");
    CHECK(res5.exit_code == 0);
    CHECK(res5.report["failures"].empty());

    // identical flags give byte-identical result lines; jobs only changes timing
    auto strip_timing = [](std::string s) {
        return s.substr(0, s.find("\"seconds\""));
    };
    std::string a = slurp_stdout("verify --wheel 4 --order-max 7 --seed 42");
    std::string b = slurp_stdout("verify --wheel 4 --order-max 7 --seed 42 --jobs 4");
    CHECK(strip_timing(a) == strip_timing(b));

    CHECK(run("verify --wheel 4 --order-max 20").exit_code != 0);
    CHECK(run("verify --wheel 3 --order-max 7").exit_code != 0);  // flag validation
}

TEST_CASE("color emits validated certificates") {
    write_planar_code_file("cli_ico.pc", {from_graph(icosahedron())});
    RunResult res = run("color --input cli_ico.pc");
    CHECK(res.exit_code == 0);
    REQUIRE(res.lines.size() == 1);
    CHECK(res.lines[0]["certificate"]["coloring"].size() == 12);
    std::remove("cli_ico.pc");

    write_adj("cli_k5.adj", complete_graph(5));
    CHECK(run("color --input cli_k5.adj --format adjlist").exit_code != 0);
    std::remove("cli_k5.adj");
}

TEST_CASE("classify reports the taxonomy") {
    write_planar_code_file("cli_mix.pc", {from_graph(complete_graph(4)), from_graph(octahedron()), from_graph(icosahedron())});
    RunResult res = run("classify --input cli_mix.pc --oracle");
    CHECK(res.exit_code == 0);
    REQUIRE(res.lines.size() == 3);
    CHECK(res.lines[0]["classification"]["verdict"] == "uniquely");
    CHECK(res.lines[1]["classification"]["verdict"] == "non-coordinated");
    CHECK(res.lines[2]["classification"]["verdict"] == "non-coordinated");
    // the icosahedron has minimum degree 5, so the obstruction scan runs
    REQUIRE(res.lines[2].contains("funnel_obstructions"));
    for (const json& o : res.lines[2]["funnel_obstructions"]) CHECK(o["obstruction"] == false);
    CHECK(!res.lines[0].contains("funnel_obstructions"));
    std::remove("cli_mix.pc");
}

TEST_CASE("poly cache file round trip") {
    write_adj("cli_oct.adj", octahedron());
    std::remove("cli_cache.txt");
    CHECK(run("poly --input cli_oct.adj --format adjlist --cache cli_cache.txt").exit_code == 0);
    std::ifstream cache("cli_cache.txt");
    CHECK(cache.good());
    RunResult warm = run("poly --input cli_oct.adj --format adjlist --cache cli_cache.txt --eval 4");
    CHECK(warm.exit_code == 0);
    CHECK(warm.lines[0]["eval"]["value"] == "96");
    std::remove("cli_oct.adj");
    std::remove("cli_cache.txt");
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli [doctest flags] <mpg binary>\n");
        return 2;
    }
    g_binary = argv[argc - 1];
    doctest::Context ctx;
    ctx.applyCommandLine(argc - 1, argv);
    return ctx.run();
}
