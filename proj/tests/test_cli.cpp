#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "upsilon/cli.hpp"
#include "upsilon/graph_io.hpp"

using namespace upsilon;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name)
{
    auto p = fs::temp_directory_path() / ("upsilon_cli_" + name);
    fs::remove_all(p);
    return p;
}

std::string slurp(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

cli::RunConfig config(std::string command)
{
    cli::RunConfig c;
    c.command = std::move(command);
    return c;
}

} // namespace

TEST(Cli, ExactOnCycle)
{
    auto path = scratch("c4.txt");
    std::ofstream(path) << "4 4\n0 1\n1 2\n2 3\n0 3\n";
    auto c = config("upsilon");
    c.input = path.string();
    auto out = cli::run(c);
    EXPECT_EQ(out.exit_code, 0);
    EXPECT_EQ(out.report["result"]["value"], 4);
    EXPECT_EQ(out.report["schema_version"], cli::schema_version);
    EXPECT_EQ(out.report["config"]["mode"], "exact");
    EXPECT_TRUE(out.report.contains("wall_clock_ms"));
    fs::remove(path);
}

TEST(Cli, TorusThenExact)
{
    auto curves = scratch("curves.json");
    auto graph = scratch("torus_graph.txt");
    auto c = config("gen-torus");
    c.height = 8;
    c.k = 1;
    c.output = curves.string();
    c.graph_output = graph.string();
    auto gen = cli::run(c);
    EXPECT_EQ(gen.report["result"]["size"], 3);
    EXPECT_EQ(nlohmann::json::parse(slurp(curves)), nlohmann::json::parse("[[0,1],[1,0],[1,1]]"));

    auto u = config("upsilon");
    u.input = graph.string();
    EXPECT_EQ(cli::run(u).report["result"]["value"], 2);
    fs::remove(curves);
    fs::remove(graph);
}

TEST(Cli, RandomAndGreedyModes)
{
    auto path = scratch("rand.txt");
    auto g = config("gen-random");
    g.n = 60;
    g.m = 240;
    g.output = path.string();
    cli::run(g);
    for (std::string mode : {"random", "greedy"}) {
        auto u = config("upsilon");
        u.input = path.string();
        u.mode = mode;
        u.trials = 20;
        auto r = cli::run(u).report["result"];
        EXPECT_GT(r["value"].get<int>(), 0);
    }
    auto bad = config("upsilon");
    bad.input = path.string();
    bad.mode = "nope";
    EXPECT_THROW(cli::run(bad), Error);
    fs::remove(path);
}

TEST(Cli, GenEnemyIsReproducible)
{
    auto a = scratch("enemy_a");
    auto b = scratch("enemy_b");
    auto c = config("gen-enemy");
    c.n = 256;
    c.delta = 16;
    c.output = a.string();
    auto ra = cli::run(c);
    c.output = b.string();
    auto rb = cli::run(c);
    EXPECT_EQ(slurp(a / "graph.txt"), slurp(b / "graph.txt"));
    EXPECT_EQ(slurp(a / "bundle.json"), slurp(b / "bundle.json"));
    EXPECT_EQ(cli::strip_timing(ra.report)["result"], cli::strip_timing(rb.report)["result"]);

    auto cert = config("certify");
    cert.bundle = a.string();
    cert.mixing_samples = 100;
    auto rc = cli::run(cert);
    EXPECT_EQ(rc.exit_code, 0);
    EXPECT_TRUE(rc.report["result"]["ok"].get<bool>());

    auto tr = config("trace");
    tr.bundle = a.string();
    tr.trials = 20;
    auto rt = cli::run(tr);
    EXPECT_EQ(rt.exit_code, 0);
    EXPECT_EQ(rt.report["result"]["traces"].size(), 2u);

    auto subset = scratch("subset.json");
    std::ofstream(subset) << "[0, 1, 2, 100]";
    tr.subset = subset.string();
    auto rs = cli::run(tr);
    EXPECT_EQ(rs.report["result"]["traces"][0]["selection_size"], 4);

    fs::remove_all(a);
    fs::remove_all(b);
    fs::remove(subset);
}

TEST(Cli, ErrorKinds)
{
    auto c = config("gen-enemy");
    c.n = 64;
    c.delta = 256;
    c.output = scratch("never").string();
    try {
        cli::run(c);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::infeasible);
    }

    auto path = scratch("loop.txt");
    std::ofstream(path) << "2 1\n1 1\n";
    auto u = config("upsilon");
    u.input = path.string();
    try {
        cli::run(u);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::invalid_graph);
    }
    fs::remove(path);

    u.input = scratch("missing.txt").string();
    try {
        cli::run(u);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::io);
    }
    EXPECT_THROW(cli::run(config("frobnicate")), Error);
}

TEST(Cli, StripTiming)
{
    nlohmann::json a = {{"result", 1}, {"wall_clock_ms", 3.5}};
    nlohmann::json b = {{"result", 1}, {"wall_clock_ms", 9.0}};
    EXPECT_NE(a, b);
    EXPECT_EQ(cli::strip_timing(a), cli::strip_timing(b));
}

TEST(Cli, ParseSweep)
{
    auto s = cli::parse_sweep("256:16,1024:64");
    ASSERT_EQ(s.size(), 2u);
    EXPECT_EQ(s[1], (std::pair<std::size_t, std::size_t>{1024, 64}));
    EXPECT_THROW(cli::parse_sweep("256-16"), Error);
    EXPECT_THROW(cli::parse_sweep("a:b"), Error);
}

TEST(Cli, ReportCsv)
{
    auto c = config("report");
    c.sweep = {{256, 16}};
    c.trials = 10;
    c.format = "csv";
    auto out = cli::run(c);
    EXPECT_EQ(out.report["result"]["rows"].size(), 1u);
    EXPECT_EQ(std::count(out.table.begin(), out.table.end(), '\n'), 2);
}
