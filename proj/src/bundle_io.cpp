#include "upsilon/bundle_io.hpp"

#include <filesystem>
#include <fstream>

#include "upsilon/graph_io.hpp"

namespace upsilon {

namespace fs = std::filesystem;

nlohmann::json bundle_sidecar(const EnemyGraphBundle& bundle)
{
    auto parts = nlohmann::json::array();
    for (const auto& part : bundle.parts)
        parts.push_back(part.members());
    auto certs = nlohmann::json::array();
    for (const auto& c : bundle.certificates)
        certs.push_back({{"i", c.i},
                         {"j", c.j},
                         {"d", c.degree},
                         {"lambda2", c.lambda2},
                         {"threshold", c.threshold},
                         {"slack", c.slack},
                         {"attempts", c.attempts},
                         {"certified", c.certified}});
    return {{"schema_version", 1},
            {"n_target", bundle.params.n_target},
            {"delta_target", bundle.params.delta_target},
            {"k", bundle.params.k},
            {"t", bundle.params.t},
            {"parts", std::move(parts)},
            {"certificates", std::move(certs)}};
}

void save_bundle(const std::string& dir, const EnemyGraphBundle& bundle)
{
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
        throw Error(ErrorKind::io, "cannot create " + dir + ": " + ec.message());
    save_edge_list((fs::path(dir) / "graph.txt").string(), bundle.graph);
    std::ofstream out(fs::path(dir) / "bundle.json", std::ios::binary);
    if (!out)
        throw Error(ErrorKind::io, "cannot write bundle.json in " + dir);
    out << bundle_sidecar(bundle).dump(2) << '\n';
}

EnemyGraphBundle load_bundle(const std::string& dir)
{
    EnemyGraphBundle bundle;
    bundle.graph = load_edge_list((fs::path(dir) / "graph.txt").string());

    std::ifstream in(fs::path(dir) / "bundle.json", std::ios::binary);
    if (!in)
        throw Error(ErrorKind::io, "cannot read bundle.json in " + dir);
    try {
        nlohmann::json j;
        in >> j;
        bundle.params.n_target = j.at("n_target").get<std::size_t>();
        bundle.params.delta_target = j.at("delta_target").get<std::size_t>();
        bundle.params.k = j.at("k").get<std::size_t>();
        bundle.params.t = j.at("t").get<std::size_t>();
        const std::size_t n = bundle.graph.order();
        if (bundle.params.vertex_count() != n)
            throw Error(ErrorKind::parse, "bundle.json: k*t does not match the graph order");
        for (const auto& part : j.at("parts")) {
            auto members = part.get<std::vector<Vertex>>();
            bundle.parts.push_back(VertexSubset::from_indices(n, members));
        }
        if (bundle.parts.size() != bundle.params.k)
            throw Error(ErrorKind::parse, "bundle.json: expected k parts");
        for (std::size_t i = 1; i <= bundle.params.k; ++i)
            if (bundle.parts[i - 1] != VertexSubset::range(n, (i - 1) * bundle.params.t, bundle.params.t))
                throw Error(ErrorKind::parse, "bundle.json: part " + std::to_string(i) + " is not contiguous");
        for (const auto& c : j.at("certificates")) {
            SpectralCertificate cert;
            cert.i = c.at("i").get<std::size_t>();
            cert.j = c.at("j").get<std::size_t>();
            cert.degree = c.at("d").get<std::size_t>();
            cert.lambda2 = c.at("lambda2").get<double>();
            cert.threshold = c.at("threshold").get<double>();
            cert.slack = c.value("slack", 0.0);
            cert.attempts = c.at("attempts").get<std::size_t>();
            cert.certified = c.value("certified", true);
            bundle.certificates.push_back(cert);
        }
    } catch (const nlohmann::json::exception& ex) {
        throw Error(ErrorKind::parse, std::string("bundle.json: ") + ex.what());
    }
    return bundle;
}

} // namespace upsilon
