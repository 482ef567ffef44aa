#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <numeric>

#include "upsilon/search.hpp"
#include "upsilon/torus.hpp"

using namespace upsilon;

namespace {

std::vector<std::pair<std::int64_t, std::int64_t>> pairs(const std::vector<TorusCurve>& cs)
{
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (const auto& c : cs)
        out.emplace_back(c.p(), c.q());
    return out;
}

/// Independent enumeration: every primitive (p, q) with |p|, |q| <= h, folded by sign.
std::vector<std::pair<std::int64_t, std::int64_t>> slopes(std::int64_t h)
{
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (std::int64_t p = 0; p <= h; ++p)
        for (std::int64_t q = -h; q <= h; ++q)
            if (std::gcd(p, q) == 1 && (p > 0 || q == 1))
                out.emplace_back(p, q);
    return out;
}

std::uint64_t cross(std::pair<std::int64_t, std::int64_t> a, std::pair<std::int64_t, std::int64_t> b)
{
    const auto x = a.first * b.second - a.second * b.first;
    return static_cast<std::uint64_t>(x < 0 ? -x : x);
}

/// Maximum clique of the "intersects at most k times" graph by plain Bron–Kerbosch.
std::size_t oracle_max_system(std::int64_t h, std::uint64_t k)
{
    const auto s = slopes(h);
    const std::size_t n = s.size();
    std::vector<std::vector<bool>> ok(n, std::vector<bool>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            ok[a][b] = a != b && cross(s[a], s[b]) <= k;
    std::size_t best = 0;
    std::function<void(std::vector<std::size_t>, std::vector<std::size_t>, std::size_t)> bk =
        [&](std::vector<std::size_t> p, std::vector<std::size_t> x, std::size_t depth) {
            if (p.empty() && x.empty()) {
                best = std::max(best, depth);
                return;
            }
            if (depth + p.size() <= best)
                return;
            while (!p.empty()) {
                const auto v = p.back();
                std::vector<std::size_t> p2, x2;
                for (auto w : p)
                    if (ok[v][w])
                        p2.push_back(w);
                for (auto w : x)
                    if (ok[v][w])
                        x2.push_back(w);
                bk(p2, x2, depth + 1);
                p.pop_back();
                x.push_back(v);
            }
        };
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    bk(all, {}, 0);
    return best;
}

} // namespace

TEST(TorusCurveTest, Normalization)
{
    TorusCurve a(-1, 2);
    EXPECT_EQ(a.p(), 1);
    EXPECT_EQ(a.q(), -2);
    TorusCurve b(0, -1);
    EXPECT_EQ(b.q(), 1);
    EXPECT_EQ(TorusCurve(-3, -2), TorusCurve(3, 2));
    EXPECT_EQ(TorusCurve(3, -2).height(), 3);
    EXPECT_THROW(TorusCurve(0, 0), Error);
    EXPECT_THROW(TorusCurve(2, 4), Error);
}

TEST(TorusCurveTest, IntersectionNumbers)
{
    EXPECT_EQ(intersection_number({1, 0}, {0, 1}), 1u);
    EXPECT_EQ(intersection_number({1, 1}, {1, -1}), 2u);
    EXPECT_EQ(intersection_number({2, 1}, {1, 1}), 1u);
    EXPECT_EQ(intersection_number({2, 1}, {2, 1}), 0u);
}

TEST(TorusCurveTest, IsKSystem)
{
    std::vector<TorusCurve> farey{{0, 1}, {1, 0}, {1, 1}};
    EXPECT_TRUE(is_k_system(farey, 1));
    std::vector<TorusCurve> wide{{0, 1}, {1, 0}, {1, 1}, {1, -1}};
    EXPECT_FALSE(is_k_system(wide, 1));
    EXPECT_TRUE(is_k_system(wide, 2));
    std::vector<TorusCurve> repeated{{1, 0}, {-1, 0}};
    EXPECT_FALSE(is_k_system(repeated, 5));
}

TEST(TorusCurveTest, EnumerationMatchesOracle)
{
    for (std::int64_t h = 1; h <= 6; ++h) {
        auto cs = curves_up_to_height(h);
        auto mine = pairs(cs);
        auto want = slopes(h);
        std::sort(mine.begin(), mine.end());
        std::sort(want.begin(), want.end());
        EXPECT_EQ(mine, want) << h;
        EXPECT_TRUE(std::is_sorted(cs.begin(), cs.end(), curve_order));
    }
}

TEST(MaxKSystem, OneSystemsHaveThreeCurves)
{
    auto one = max_k_system(1, 1);
    EXPECT_EQ(one.size, 3u);
    EXPECT_EQ(pairs(one.witness.curves), (decltype(pairs({})){{0, 1}, {1, 0}, {1, 1}}));

    auto r = max_k_system(8, 1);
    EXPECT_EQ(r.size, 3u);
    EXPECT_TRUE(is_k_system(r.witness.curves, 1));
    // A Farey triple: pairwise determinant 1.
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = a + 1; b < 3; ++b)
            EXPECT_EQ(intersection_number(r.witness.curves[a], r.witness.curves[b]), 1u);
}

TEST(MaxKSystem, MatchesOracle)
{
    for (std::int64_t h = 1; h <= 4; ++h)
        for (std::uint64_t k = 1; k <= 3; ++k)
            EXPECT_EQ(max_k_system(h, k).size, oracle_max_system(h, k)) << h << ' ' << k;
}

TEST(MaxKSystem, TwoSystemsStabilize)
{
    const auto base = max_k_system(6, 2).size;
    EXPECT_EQ(max_k_system(7, 2).size, base);
    EXPECT_EQ(max_k_system(8, 2).size, base);
    EXPECT_EQ(base, 4u);
}

TEST(MaxKSystem, MonotoneInHeightAndK)
{
    for (std::uint64_t k = 1; k <= 3; ++k) {
        std::size_t prev = 0;
        for (std::int64_t h = 1; h <= 5; ++h) {
            auto s = max_k_system(h, k).size;
            EXPECT_GE(s, prev);
            prev = s;
        }
    }
    EXPECT_LE(max_k_system(4, 1).size, max_k_system(4, 2).size);
}

TEST(MaxKSystem, BudgetAndArguments)
{
    try {
        max_k_system(100, 1, 50);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::too_large);
    }
    EXPECT_THROW(max_k_system(0, 1), Error);
}

TEST(IntersectionGraph, Examples)
{
    CurveSystem farey{{{0, 1}, {1, 0}, {1, 1}}, 1};
    auto g = to_intersection_graph(farey);
    EXPECT_EQ(g.num_edges(), 3u);
    EXPECT_EQ(upsilon_exact(g).value, 2u);

    CurveSystem parallel{{{1, 0}}, 0};
    EXPECT_EQ(to_intersection_graph(parallel).num_edges(), 0u);
}

TEST(CurveJson, RoundTrip)
{
    auto cs = curves_up_to_height(3);
    auto j = curves_to_json(cs);
    EXPECT_TRUE(j.is_array());
    EXPECT_EQ(j[0], nlohmann::json({0, 1}));
    EXPECT_EQ(curves_from_json(j), cs);
    EXPECT_THROW(curves_from_json(nlohmann::json{{2, 2}}), Error);
}
