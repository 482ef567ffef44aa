#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "upsilon/bundle_io.hpp"
#include "upsilon/enemy.hpp"
#include "upsilon/graph_io.hpp"
#include "upsilon/rng.hpp"
#include "upsilon/search.hpp"

using namespace upsilon;

namespace {

void expect_regular(const RegularBlock& b)
{
    const std::size_t sides = b.bipartite ? 2 * b.t : b.t;
    auto g = block_graph(b);
    ASSERT_EQ(g.order(), sides);
    for (Vertex v = 0; v < sides; ++v)
        EXPECT_EQ(g.degree(v), b.degree) << v;
    if (b.bipartite) {
        for (const auto& e : g.edges())
            EXPECT_TRUE(e.u < b.t && e.v >= b.t);
    }
}

/// Dense oracle for the second singular value via eigenvalues of the adjacency matrix.
double oracle_lambda2(const RegularBlock& b)
{
    auto g = block_graph(b);
    const std::size_t n = g.order();
    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
    for (const auto& e : g.edges())
        a[e.u][e.v] = a[e.v][e.u] = 1.0;
    auto ev = oracle::symmetric_eigenvalues(a);
    // Drop one eigenvalue equal to d (and, for bipartite blocks, one equal to -d).
    std::vector<double> rest;
    bool dropped_top = false, dropped_bottom = !b.bipartite;
    for (double x : ev) {
        if (!dropped_top && std::abs(x - static_cast<double>(b.degree)) < 1e-9) {
            dropped_top = true;
            continue;
        }
        if (!dropped_bottom && std::abs(x + static_cast<double>(b.degree)) < 1e-9) {
            dropped_bottom = true;
            continue;
        }
        rest.push_back(std::abs(x));
    }
    return rest.empty() ? 0.0 : *std::max_element(rest.begin(), rest.end());
}

const EnemyGraphBundle& small_bundle()
{
    static const EnemyGraphBundle bundle = assemble_enemy_graph(derive_params(256, 16), 0.1, 10, 1);
    return bundle;
}

std::filesystem::path temp_dir(const std::string& name)
{
    auto dir = std::filesystem::temp_directory_path() / ("upsilon_test_" + name);
    std::filesystem::remove_all(dir);
    return dir;
}

std::string slurp(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

} // namespace

TEST(DeriveParams, Examples)
{
    auto p = derive_params(2048, 256);
    EXPECT_EQ(p.k, 4u);
    EXPECT_EQ(p.t, 512u); // 256 == 4^4, so doubled
    EXPECT_EQ(p.vertex_count(), 2048u);
    EXPECT_EQ(p.max_degree(), 32u + 64 + 128 + 256);

    auto q = derive_params(2049, 256);
    EXPECT_EQ(q.t, 512u);

    auto r = derive_params(256, 16);
    EXPECT_EQ(r.k, 2u);
    EXPECT_EQ(r.t, 64u);
    EXPECT_EQ(r.degree(1, 2), 8u);

    auto s = derive_params(8192, 1024);
    EXPECT_EQ(s.k, 5u);
    EXPECT_EQ(s.t, 2048u);
}

TEST(DeriveParams, Infeasible)
{
    try {
        derive_params(64, 256);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::infeasible);
        EXPECT_NE(std::string(e.what()).find("t = 8"), std::string::npos);
    }
    EXPECT_THROW(derive_params(100, 3), Error);
}

TEST(Samplers, CompleteBipartite)
{
    auto b = random_regular_bipartite(4, 4, 1);
    EXPECT_EQ(b.edges.size(), 16u);
    expect_regular(b);
}

TEST(Samplers, PerfectMatchings)
{
    auto b = random_regular_bipartite(8, 1, 3);
    EXPECT_EQ(b.edges.size(), 8u);
    expect_regular(b);
    auto d = random_regular(6, 1, 3);
    EXPECT_EQ(d.edges.size(), 3u);
    expect_regular(d);
}

TEST(Samplers, FourCycle)
{
    auto d = random_regular(4, 2, 5);
    EXPECT_EQ(d.edges.size(), 4u);
    expect_regular(d);
}

TEST(Samplers, ParityAndRangeErrors)
{
    try {
        random_regular(5, 3, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::invalid_argument);
        EXPECT_NE(std::string(e.what()).find("parity"), std::string::npos);
    }
    EXPECT_THROW(random_regular(4, 4, 1), Error);
    EXPECT_THROW(random_regular_bipartite(4, 5, 1), Error);
}

TEST(Samplers, RegularAcrossDensities)
{
    for (std::size_t t : {16u, 64u}) {
        for (std::size_t d = 1; d < t; d = d * 2 + 1) {
            expect_regular(random_regular_bipartite(t, d, d));
            if ((t * d) % 2 == 0)
                expect_regular(random_regular(t, d, d));
        }
        expect_regular(random_regular_bipartite(t, t - 1, 2));
        expect_regular(random_regular(t, t - 2, 2));
    }
}

TEST(Samplers, Deterministic)
{
    EXPECT_EQ(random_regular_bipartite(64, 8, 9).edges, random_regular_bipartite(64, 8, 9).edges);
    EXPECT_EQ(random_regular(64, 8, 9).edges, random_regular(64, 8, 9).edges);
    EXPECT_NE(random_regular(64, 8, 9).edges, random_regular(64, 8, 10).edges);
}

TEST(Spectral, CompleteBipartiteHasNoSecondValue)
{
    EXPECT_NEAR(second_eigenvalue(random_regular_bipartite(4, 4, 1)), 0.0, 1e-6);
    // C4 read as a 2-regular bipartite block on 2 + 2 vertices is K_{2,2}.
    EXPECT_NEAR(second_eigenvalue(random_regular_bipartite(2, 2, 1)), 0.0, 1e-6);
}

TEST(Spectral, MatchingIsAtMostOne)
{
    EXPECT_LE(second_eigenvalue(random_regular_bipartite(8, 1, 1)), 1.0 + 1e-6);
}

TEST(Spectral, AgreesWithDenseOracle)
{
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        for (std::size_t d : {3u, 4u, 8u}) {
            auto bip = random_regular_bipartite(32, d, seed);
            EXPECT_NEAR(second_eigenvalue(bip), oracle_lambda2(bip), 1e-3 * d) << d;
            auto diag = random_regular(32, d, seed);
            EXPECT_NEAR(second_eigenvalue(diag), oracle_lambda2(diag), 1e-3 * d) << d;
        }
    }
}

TEST(Spectral, CertifyThreshold)
{
    EXPECT_NEAR(ramanujan_threshold(16), 2 * std::sqrt(15.0), 1e-12);
    EXPECT_TRUE(certify(1, 1, 16, 7.0, 0.1).certified);
    EXPECT_TRUE(certify(1, 1, 2, 2.0, 0.0).certified); // boundary is inclusive
    EXPECT_FALSE(certify(1, 1, 4, 4.0, 0.1).certified);
    auto c = certify(1, 2, 16, 7.0, 0.1, 3);
    EXPECT_EQ(c.attempts, 3u);
    EXPECT_EQ(c.i, 1u);
    EXPECT_EQ(c.j, 2u);
}

TEST(Bundle, BlocksAreRegular)
{
    const auto& b = small_bundle();
    const auto& p = b.params;
    ASSERT_EQ(b.graph.order(), p.vertex_count());
    for (std::size_t i = 1; i <= p.k; ++i) {
        for (Vertex v : b.part(i).members()) {
            for (std::size_t j = 1; j <= p.k; ++j) {
                std::size_t count = 0;
                for (Vertex w : b.graph.neighbors(v))
                    count += b.part_of(w) == j;
                EXPECT_EQ(count, p.degree(i, j));
            }
        }
        for (std::size_t j = i; j <= p.k; ++j) {
            auto block = extract_block(b, i, j);
            EXPECT_EQ(block.degree, p.degree(i, j));
            expect_regular(block);
            EXPECT_TRUE(b.certificate(i, j).certified);
            EXPECT_TRUE(b.certificate(j, i).certified);
        }
    }
    std::size_t maxdeg = 0;
    for (Vertex v = 0; v < b.graph.order(); ++v)
        maxdeg = std::max(maxdeg, b.graph.degree(v));
    EXPECT_EQ(maxdeg, p.max_degree());
}

TEST(Bundle, EdgeCountsDoubleAcrossParts)
{
    const auto& b = small_bundle();
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto sel = sample_selection(b.graph, 0.1, seed);
        std::vector<std::size_t> e(b.params.k + 1);
        for (std::size_t j = 1; j <= b.params.k; ++j)
            e[j] = edges_between(b.graph, sel, b.part(j));
        for (std::size_t j = 1; j < b.params.k; ++j)
            EXPECT_EQ(e[j + 1], 2 * e[j]);
    }
}

TEST(Bundle, MixingChecks)
{
    const auto& b = small_bundle();
    for (std::size_t i = 1; i <= b.params.k; ++i) {
        for (std::size_t j = i; j <= b.params.k; ++j) {
            auto s = sampled_mixing(b, i, j, 200, 4);
            EXPECT_EQ(s.checks, 200u);
            EXPECT_EQ(s.passed, 200u);
            EXPECT_LE(s.worst_ratio, 1.0);
        }
    }
    // Whole parts: exactly d t edges, zero deviation.
    auto whole = mixing_check(b, 1, 2, b.part(1), b.part(2));
    EXPECT_EQ(whole.edges, b.params.degree(1, 2) * b.params.t);
    EXPECT_NEAR(whole.deviation, 0.0, 1e-9);
    EXPECT_TRUE(whole.pass);
    EXPECT_THROW(mixing_check(b, 1, 2, b.part(2), b.part(2)), Error);
}

TEST(Bundle, TraceOfEmptyAndTopPart)
{
    const auto& b = small_bundle();
    auto empty = proof_trace(b, VertexSubset(b.graph.order()));
    EXPECT_FALSE(empty.j0.has_value());
    EXPECT_EQ(empty.total_unique, 0u);
    EXPECT_TRUE(empty.holds());

    auto top = proof_trace(b, b.part(b.params.k));
    ASSERT_TRUE(top.j0.has_value());
    EXPECT_EQ(*top.j0, 1u);
    EXPECT_EQ(*top.pivot, b.params.k);
    EXPECT_EQ(top.total_unique, 0u); // every vertex has many neighbors in V_k
    EXPECT_TRUE(top.holds());
}

TEST(Bundle, TraceMatchesDirectCount)
{
    const auto& b = small_bundle();
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const double p = std::ldexp(1.0, -static_cast<int>(1 + seed % 6));
        auto sel = sample_selection(b.graph, p, seed);
        auto tr = proof_trace(b, sel);
        EXPECT_EQ(tr.total_unique, unique_neighbor_count(b.graph, sel));
        EXPECT_EQ(tr.total_unique, tr.head_unique + tr.middle_unique + tr.tail_unique);
        EXPECT_TRUE(tr.holds()) << seed;
        for (std::size_t j = 1; j <= b.params.k; ++j)
            EXPECT_EQ(tr.buckets[j - 1].edges, edges_between(b.graph, sel, b.part(j)));
    }
}

TEST(Bundle, Deterministic)
{
    auto again = assemble_enemy_graph(derive_params(256, 16), 0.1, 10, 1);
    EXPECT_EQ(to_edge_list(again.graph), to_edge_list(small_bundle().graph));
    auto other = assemble_enemy_graph(derive_params(256, 16), 0.1, 10, 2);
    EXPECT_NE(to_edge_list(other.graph), to_edge_list(small_bundle().graph));
}

TEST(Bundle, CertificationFailureIsReported)
{
    // A negative slack below the Alon–Boppana floor cannot be met.
    try {
        assemble_enemy_graph(derive_params(256, 16), -0.5, 2, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::certification_failed);
    }
}

TEST(BundleIo, RoundTripIsByteIdentical)
{
    const auto& b = small_bundle();
    auto dir = temp_dir("bundle_a");
    save_bundle(dir.string(), b);
    auto loaded = load_bundle(dir.string());
    EXPECT_EQ(loaded.params.k, b.params.k);
    EXPECT_EQ(loaded.params.t, b.params.t);
    EXPECT_EQ(loaded.certificates.size(), b.certificates.size());
    EXPECT_EQ(loaded.certificates[0].lambda2, b.certificates[0].lambda2);
    auto dir2 = temp_dir("bundle_b");
    save_bundle(dir2.string(), loaded);
    EXPECT_EQ(slurp(dir / "graph.txt"), slurp(dir2 / "graph.txt"));
    EXPECT_EQ(slurp(dir / "bundle.json"), slurp(dir2 / "bundle.json"));
    std::filesystem::remove_all(dir);
    std::filesystem::remove_all(dir2);
}

TEST(BundleIo, RejectsMismatchedParts)
{
    const auto& b = small_bundle();
    auto dir = temp_dir("bundle_bad");
    save_bundle(dir.string(), b);
    auto side = bundle_sidecar(b);
    side["t"] = 32;
    std::ofstream(dir / "bundle.json") << side.dump(2);
    EXPECT_THROW(load_bundle(dir.string()), Error);
    std::filesystem::remove_all(dir);
}
