#include "upsilon/torus.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <string>
#include <tuple>

namespace upsilon {

TorusCurve::TorusCurve(std::int64_t p, std::int64_t q)
{
    if (p == 0 && q == 0)
        throw Error(ErrorKind::invalid_argument, "(0,0) is not a curve");
    if (std::gcd(p, q) != 1)
        throw Error(ErrorKind::invalid_argument,
                    "(" + std::to_string(p) + "," + std::to_string(q) + ") is not primitive");
    if (p < 0 || (p == 0 && q < 0)) {
        p = -p;
        q = -q;
    }
    p_ = p;
    q_ = q;
}

std::int64_t TorusCurve::height() const noexcept
{
    return std::max(std::abs(p_), std::abs(q_));
}

bool curve_order(const TorusCurve& a, const TorusCurve& b) noexcept
{
    auto key = [](const TorusCurve& c) { return std::tuple(c.height(), c.p(), std::abs(c.q()), c.q() < 0); };
    return key(a) < key(b);
}

std::uint64_t intersection_number(const TorusCurve& a, const TorusCurve& b) noexcept
{
    const std::int64_t det = a.p() * b.q() - a.q() * b.p();
    return static_cast<std::uint64_t>(det < 0 ? -det : det);
}

bool is_k_system(std::span<const TorusCurve> curves, std::uint64_t k)
{
    for (std::size_t a = 0; a < curves.size(); ++a)
        for (std::size_t b = a + 1; b < curves.size(); ++b)
            if (curves[a] == curves[b] || intersection_number(curves[a], curves[b]) > k)
                return false;
    return true;
}

std::vector<TorusCurve> curves_up_to_height(std::int64_t height)
{
    std::vector<TorusCurve> out;
    if (height < 1)
        return out;
    out.emplace_back(0, 1);
    for (std::int64_t p = 1; p <= height; ++p)
        for (std::int64_t q = -height; q <= height; ++q)
            if (std::gcd(p, q) == 1)
                out.emplace_back(p, q);
    std::sort(out.begin(), out.end(), curve_order);
    return out;
}

namespace {

using Bits = std::vector<std::uint64_t>;

std::size_t count(const Bits& bits)
{
    std::size_t total = 0;
    for (auto w : bits)
        total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

struct CliqueSearch {
    std::vector<Bits> adjacent;
    std::vector<std::size_t> current;
    std::vector<std::size_t> best;

    void expand(Bits candidates)
    {
        if (current.size() > best.size())
            best = current;
        for (std::size_t w = 0; w < candidates.size(); ++w) {
            while (candidates[w] != 0) {
                if (current.size() + count(candidates) <= best.size())
                    return;
                const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(candidates[w]));
                candidates[w] &= candidates[w] - 1;
                Bits next(candidates.size());
                for (std::size_t x = 0; x < next.size(); ++x)
                    next[x] = candidates[x] & adjacent[v][x];
                current.push_back(v);
                expand(std::move(next));
                current.pop_back();
            }
        }
    }
};

} // namespace

KSystemResult max_k_system(std::int64_t height, std::uint64_t k, std::size_t curve_budget)
{
    if (height < 1)
        throw Error(ErrorKind::invalid_argument, "height must be at least 1");
    const auto curves = curves_up_to_height(height);
    if (curves.size() > curve_budget)
        throw Error(ErrorKind::too_large, std::to_string(curves.size()) + " curves of height <= " +
                                              std::to_string(height) + " exceed the budget of " +
                                              std::to_string(curve_budget));

    const std::size_t n = curves.size();
    const std::size_t words = (n + 63) / 64;
    CliqueSearch search;
    search.adjacent.assign(n, Bits(words, 0));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (a != b && intersection_number(curves[a], curves[b]) <= k)
                search.adjacent[a][b >> 6] |= std::uint64_t{1} << (b & 63);

    Bits all(words, 0);
    for (std::size_t v = 0; v < n; ++v)
        all[v >> 6] |= std::uint64_t{1} << (v & 63);
    search.expand(std::move(all));

    KSystemResult result;
    result.size = search.best.size();
    result.witness.k = k;
    for (auto idx : search.best)
        result.witness.curves.push_back(curves[idx]);
    return result;
}

Graph to_intersection_graph(const CurveSystem& system)
{
    std::vector<Edge> edges;
    const auto& c = system.curves;
    for (std::size_t a = 0; a < c.size(); ++a)
        for (std::size_t b = a + 1; b < c.size(); ++b)
            if (intersection_number(c[a], c[b]) >= 1)
                edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
    return build_graph(c.size(), edges);
}

nlohmann::json curves_to_json(std::span<const TorusCurve> curves)
{
    auto out = nlohmann::json::array();
    for (const auto& c : curves)
        out.push_back({c.p(), c.q()});
    return out;
}

std::vector<TorusCurve> curves_from_json(const nlohmann::json& j)
{
    if (!j.is_array())
        throw Error(ErrorKind::parse, "curve system JSON must be an array of [p, q] pairs");
    std::vector<TorusCurve> out;
    try {
        for (const auto& pair : j) {
            if (!pair.is_array() || pair.size() != 2)
                throw Error(ErrorKind::parse, "curve system JSON: each curve must be a [p, q] pair");
            out.emplace_back(pair[0].get<std::int64_t>(), pair[1].get<std::int64_t>());
        }
    } catch (const nlohmann::json::exception& ex) {
        throw Error(ErrorKind::parse, std::string("curve system JSON: ") + ex.what());
    }
    return out;
}

} // namespace upsilon
