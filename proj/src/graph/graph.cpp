#include "qgnn/graph/graph.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qgnn::graph {

using nlohmann::json;

std::vector<int> Graph::labeled_nodes() const {
    std::vector<int> out;
    for (int i = 0; i < num_nodes; ++i)
        if (labels.size() > std::size_t(i) && labels[i].has_value()) out.push_back(i);
    return out;
}

double Graph::average_degree() const {
    return num_nodes ? 2.0 * double(edges.size()) / double(num_nodes) : 0.0;
}

int Graph::max_row_nonzeros() const {
    std::vector<std::set<int>> nz(num_nodes);
    for (int i = 0; i < num_nodes; ++i) nz[i].insert(i);  // self-loops of A + I
    for (auto [u, v] : edges) {
        nz[u].insert(v);
        nz[v].insert(u);
    }
    int s = 0;
    for (const auto& row : nz) s = std::max(s, int(row.size()));
    return s;
}

void Graph::validate() const {
    if (num_nodes < 1) throw std::invalid_argument("graph: need at least one node");
    for (auto [u, v] : edges)
        if (u < 0 || v < 0 || u >= num_nodes || v >= num_nodes)
            throw std::invalid_argument("graph: edge references node outside [0, N)");
    if (features.rows() != num_nodes)
        throw std::invalid_argument("graph: feature row count does not match node count");
    if (!features.allFinite()) throw std::invalid_argument("graph: non-finite feature entry");
    for (const auto& lab : labels)
        if (lab && (*lab < 0 || (num_classes > 0 && *lab >= num_classes)))
            throw std::invalid_argument("graph: label out of range");
}

namespace {

Graph from_json(const json& j) {
    Graph g;
    if (!j.contains("nodes") || !j["nodes"].is_array() || j["nodes"].empty())
        throw std::invalid_argument("graph json: missing or empty 'nodes'");
    const auto& nodes = j["nodes"];
    g.num_nodes = int(nodes.size());
    int c = -1;
    for (const auto& n : nodes) {
        if (!n.contains("features")) throw std::invalid_argument("graph json: node without features");
        int len = int(n["features"].size());
        if (c < 0) c = len;
        if (len != c) throw std::invalid_argument("graph json: feature length mismatch across nodes");
    }
    g.features.resize(g.num_nodes, c);
    g.labels.assign(g.num_nodes, std::nullopt);
    int max_label = -1;
    for (const auto& n : nodes) {
        int id = n.at("id").get<int>();
        if (id < 0 || id >= g.num_nodes) throw std::invalid_argument("graph json: node ids must be 0-based and dense");
        for (int k = 0; k < c; ++k) g.features(id, k) = n["features"][k].get<double>();
        if (n.contains("label") && !n["label"].is_null()) {
            int lab = n["label"].get<int>();
            g.labels[id] = lab;
            max_label = std::max(max_label, lab);
        }
    }
    g.num_classes = max_label + 1;
    if (j.contains("edges"))
        for (const auto& e : j["edges"]) {
            if (e.size() != 2) throw std::invalid_argument("graph json: edge is not a pair");
            g.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
    g.validate();
    return g;
}

}  // namespace

Graph load_graph(const std::string& path, GraphFormat format, const std::string& features_path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("graph: cannot open " + path);
    if (format == GraphFormat::Json) {
        json j;
        try {
            in >> j;
        } catch (const json::exception& e) {
            throw std::invalid_argument("graph: malformed json in " + path + ": " + e.what());
        }
        return from_json(j);
    }

    // TSV edges + CSV features (row i = node i).
    std::vector<std::pair<int, int>> edges;
    std::string line;
    int max_node = -1;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        int u, v;
        if (!(ls >> u >> v)) throw std::invalid_argument("graph tsv: malformed line '" + line + "'");
        edges.emplace_back(u, v);
        max_node = std::max({max_node, u, v});
    }
    if (features_path.empty()) throw std::invalid_argument("graph tsv: features csv path required");
    std::ifstream fin(features_path);
    if (!fin) throw std::invalid_argument("graph: cannot open " + features_path);
    std::vector<std::vector<double>> rows;
    while (std::getline(fin, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
        if (!rows.empty() && row.size() != rows.front().size())
            throw std::invalid_argument("graph csv: ragged feature rows");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("graph csv: no feature rows");
    Graph g;
    g.num_nodes = int(rows.size());
    if (max_node >= g.num_nodes) throw std::invalid_argument("graph: edge references node outside feature rows");
    g.features.resize(g.num_nodes, int(rows.front().size()));
    for (int i = 0; i < g.num_nodes; ++i)
        for (std::size_t k = 0; k < rows[i].size(); ++k) g.features(i, int(k)) = rows[i][k];
    g.labels.assign(g.num_nodes, std::nullopt);
    g.edges = std::move(edges);
    g.validate();
    return g;
}

Eigen::MatrixXd normalized_adjacency(const Graph& g) {
    const int n = g.num_nodes;
    Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n, n);  // A + I
    for (auto [u, v] : g.edges) {
        if (u == v) continue;  // self-loop already present
        a(u, v) = 1.0;
        a(v, u) = 1.0;
    }
    Eigen::VectorXd dinv = a.rowwise().sum().cwiseSqrt().cwiseInverse();
    return dinv.asDiagonal() * a * dinv.asDiagonal();
}

Eigen::MatrixXd graph_laplacian(const Graph& g, LaplacianVariant variant) {
    switch (variant) {
        case LaplacianVariant::NormalizedShifted: {
            const int n = g.num_nodes;
            return 0.5 * (Eigen::MatrixXd::Identity(n, n) - normalized_adjacency(g));
        }
    }
    throw std::invalid_argument("graph_laplacian: unknown variant");
}

Graph permute_nodes(const Graph& g, const std::vector<int>& perm) {
    if (int(perm.size()) != g.num_nodes) throw std::invalid_argument("permute_nodes: size mismatch");
    Graph out = g;
    std::vector<int> inv(perm.size());
    for (int i = 0; i < g.num_nodes; ++i) inv[perm[i]] = i;
    for (int i = 0; i < g.num_nodes; ++i) {
        out.features.row(i) = g.features.row(perm[i]);
        out.labels[i] = g.labels[perm[i]];
    }
    for (auto& [u, v] : out.edges) {
        u = inv[u];
        v = inv[v];
    }
    return out;
}

}  // namespace qgnn::graph
