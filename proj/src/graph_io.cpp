#include "upsilon/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace upsilon {

void write_edge_list(std::ostream& out, const Graph& g)
{
    out << g.order() << ' ' << g.num_edges() << '\n';
    for (const Edge& e : g.edges())
        out << e.u << ' ' << e.v << '\n';
}

namespace {

bool skippable(const std::string& line)
{
    auto first = line.find_first_not_of(" \t\r");
    return first == std::string::npos || line[first] == '#';
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what)
{
    throw Error(ErrorKind::parse, "edge list line " + std::to_string(line_no) + ": " + what);
}

} // namespace

Graph read_edge_list(std::istream& in)
{
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    unsigned long long n = 0, m = 0;
    std::vector<Edge> edges;

    while (std::getline(in, line)) {
        ++line_no;
        if (skippable(line))
            continue;
        std::istringstream fields(line);
        unsigned long long a = 0, b = 0;
        std::string extra;
        if (!(fields >> a >> b) || (fields >> extra))
            parse_fail(line_no, "expected two non-negative integers");
        if (!have_header) {
            n = a;
            m = b;
            have_header = true;
            edges.reserve(m);
            continue;
        }
        if (a >= n || b >= n)
            parse_fail(line_no, "endpoint out of range");
        edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
    }
    if (!have_header)
        throw Error(ErrorKind::parse, "edge list is missing the \"n m\" header");
    if (edges.size() != m)
        throw Error(ErrorKind::parse, "header declares " + std::to_string(m) + " edges, found " +
                                          std::to_string(edges.size()));
    return build_graph(n, edges);
}

std::string to_edge_list(const Graph& g)
{
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

Graph parse_edge_list(const std::string& text)
{
    std::istringstream in(text);
    return read_edge_list(in);
}

nlohmann::json graph_to_json(const Graph& g)
{
    auto edges = nlohmann::json::array();
    for (const Edge& e : g.edges())
        edges.push_back({e.u, e.v});
    return {{"n", g.order()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const nlohmann::json& j)
{
    try {
        const auto n = j.at("n").get<std::size_t>();
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw Error(ErrorKind::parse, "graph JSON: each edge must be a 2-array");
            edges.push_back({e[0].get<Vertex>(), e[1].get<Vertex>()});
        }
        return build_graph(n, edges);
    } catch (const nlohmann::json::exception& ex) {
        throw Error(ErrorKind::parse, std::string("graph JSON: ") + ex.what());
    }
}

void save_edge_list(const std::string& path, const Graph& g)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorKind::io, "cannot write " + path);
    write_edge_list(out, g);
}

Graph load_edge_list(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::io, "cannot read " + path);
    return read_edge_list(in);
}

Graph load_graph(const std::string& path)
{
    if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0) {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw Error(ErrorKind::io, "cannot read " + path);
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& ex) {
            throw Error(ErrorKind::parse, path + ": " + ex.what());
        }
        return graph_from_json(j);
    }
    return load_edge_list(path);
}

} // namespace upsilon
