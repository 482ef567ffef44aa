#include "upsilon/regular.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

#include "upsilon/rng.hpp"

namespace upsilon {

namespace {

class BitMatrix {
public:
    explicit BitMatrix(std::size_t side) : side_(side), stride_((side + 63) / 64), bits_(side * stride_, 0) {}

    bool test(std::size_t r, std::size_t c) const { return (bits_[r * stride_ + (c >> 6)] >> (c & 63)) & 1U; }
    void set(std::size_t r, std::size_t c) { bits_[r * stride_ + (c >> 6)] |= std::uint64_t{1} << (c & 63); }

private:
    std::size_t side_;
    std::size_t stride_;
    std::vector<std::uint64_t> bits_;
};

std::vector<Edge> union_of_matchings(std::size_t t, std::size_t d, Rng& rng, BitMatrix& used)
{
    std::vector<Edge> edges;
    edges.reserve(t * d);
    std::vector<Vertex> perm(t);
    std::vector<Vertex> pending;
    const std::size_t repair_limit = 1000 * t + 1000;

    for (std::size_t m = 0; m < d; ++m) {
        std::iota(perm.begin(), perm.end(), Vertex{0});
        rng.shuffle(perm);
        pending.clear();
        for (Vertex i = 0; i < t; ++i)
            if (used.test(i, perm[i]))
                pending.push_back(i);

        std::size_t tries = 0;
        while (!pending.empty()) {
            const Vertex i = pending.back();
            if (!used.test(i, perm[i])) {
                pending.pop_back();
                continue;
            }
            if (++tries > repair_limit)
                throw Error(ErrorKind::not_converged,
                            "matching repair stalled at t=" + std::to_string(t) + ", d=" + std::to_string(d));
            const auto r = static_cast<Vertex>(rng.below(t));
            if (r != i && !used.test(i, perm[r]) && !used.test(r, perm[i])) {
                std::swap(perm[i], perm[r]);
                pending.pop_back();
            }
        }
        for (Vertex i = 0; i < t; ++i) {
            used.set(i, perm[i]);
            edges.push_back({i, perm[i]});
        }
    }
    return edges;
}

std::uint64_t pair_key(Vertex u, Vertex v) noexcept
{
    return (std::uint64_t{std::min(u, v)} << 32) | std::max(u, v);
}

std::vector<Edge> switched_pairing(std::size_t t, std::size_t d, Rng& rng)
{
    std::vector<Vertex> stubs;
    stubs.reserve(t * d);
    for (Vertex v = 0; v < t; ++v)
        stubs.insert(stubs.end(), d, v);
    rng.shuffle(stubs);

    std::vector<Edge> edges(stubs.size() / 2);
    std::unordered_map<std::uint64_t, std::uint32_t> mult;
    mult.reserve(edges.size() * 2);
    for (std::size_t k = 0; k < edges.size(); ++k) {
        edges[k] = {stubs[2 * k], stubs[2 * k + 1]};
        ++mult[pair_key(edges[k].u, edges[k].v)];
    }

    auto present = [&](Vertex a, Vertex b) {
        auto it = mult.find(pair_key(a, b));
        return it != mult.end() && it->second > 0;
    };
    auto is_bad = [&](const Edge& e) { return e.u == e.v || mult[pair_key(e.u, e.v)] > 1; };

    std::vector<std::size_t> bad;
    for (std::size_t round = 0;; ++round) {
        bad.clear();
        for (std::size_t k = 0; k < edges.size(); ++k)
            if (is_bad(edges[k]))
                bad.push_back(k);
        if (bad.empty())
            break;
        if (round > 10000)
            throw Error(ErrorKind::not_converged,
                        "pairing repair stalled at t=" + std::to_string(t) + ", d=" + std::to_string(d));

        for (std::size_t idx : bad) {
            for (int attempt = 0; attempt < 64 && is_bad(edges[idx]); ++attempt) {
                const auto other = static_cast<std::size_t>(rng.below(edges.size()));
                if (other == idx)
                    continue;
                const Vertex u = edges[idx].u, v = edges[idx].v;
                Vertex x = edges[other].u, y = edges[other].v;
                if (rng.below(2) != 0)
                    std::swap(x, y);
                // {u,v},{x,y} -> {u,x},{v,y}
                if (u == x || v == y || pair_key(u, x) == pair_key(v, y) || present(u, x) || present(v, y))
                    continue;
                --mult[pair_key(u, v)];
                --mult[pair_key(x, y)];
                ++mult[pair_key(u, x)];
                ++mult[pair_key(v, y)];
                edges[idx] = {u, x};
                edges[other] = {v, y};
            }
        }
    }
    for (auto& e : edges)
        if (e.u > e.v)
            std::swap(e.u, e.v);
    return edges;
}

} // namespace

RegularBlock random_regular_bipartite(std::size_t t, std::size_t d, std::uint64_t seed)
{
    if (d > t)
        throw Error(ErrorKind::invalid_argument,
                    "bipartite degree " + std::to_string(d) + " exceeds side size " + std::to_string(t));
    Rng rng(seed);
    RegularBlock block{t, d, true, {}};
    BitMatrix used(t);
    if (2 * d <= t) {
        block.edges = union_of_matchings(t, d, rng, used);
    } else {
        union_of_matchings(t, t - d, rng, used);
        block.edges.reserve(t * d);
        for (Vertex l = 0; l < t; ++l)
            for (Vertex r = 0; r < t; ++r)
                if (!used.test(l, r))
                    block.edges.push_back({l, r});
    }
    std::sort(block.edges.begin(), block.edges.end());
    return block;
}

RegularBlock random_regular(std::size_t t, std::size_t d, std::uint64_t seed)
{
    if (d >= t)
        throw Error(ErrorKind::invalid_argument,
                    "degree " + std::to_string(d) + " needs more than " + std::to_string(t) + " vertices");
    if ((d * t) % 2 != 0)
        throw Error(ErrorKind::invalid_argument,
                    "parity: d*t = " + std::to_string(d * t) + " is odd, no " + std::to_string(d) +
                        "-regular graph on " + std::to_string(t) + " vertices");
    Rng rng(seed);
    RegularBlock block{t, d, false, {}};
    if (2 * d <= t - 1) {
        block.edges = switched_pairing(t, d, rng);
    } else {
        auto removed = switched_pairing(t, t - 1 - d, rng);
        BitMatrix skip(t);
        for (const Edge& e : removed)
            skip.set(e.u, e.v);
        block.edges.reserve(t * d / 2);
        for (Vertex u = 0; u < t; ++u)
            for (Vertex v = u + 1; v < t; ++v)
                if (!skip.test(u, v))
                    block.edges.push_back({u, v});
    }
    std::sort(block.edges.begin(), block.edges.end());
    return block;
}

Graph block_graph(const RegularBlock& block)
{
    if (!block.bipartite)
        return build_graph(block.t, block.edges);
    std::vector<Edge> edges;
    edges.reserve(block.edges.size());
    for (const Edge& e : block.edges)
        edges.push_back({e.u, static_cast<Vertex>(e.v + block.t)});
    return build_graph(2 * block.t, edges);
}

} // namespace upsilon
