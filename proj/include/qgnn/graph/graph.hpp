#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

namespace qgnn::graph {

struct Graph {
    int num_nodes = 0;
    std::vector<std::pair<int, int>> edges;  // undirected, u < v stored as given
    Eigen::MatrixXd features;                // N x C
    std::vector<std::optional<int>> labels;  // one class id per node, or none
    int num_classes = 0;                     // 0 if unlabeled

    int feature_dim() const { return int(features.cols()); }
    std::vector<int> labeled_nodes() const;
    // Average degree 2|E|/N and max nonzeros per row/column of the
    // self-loop-augmented adjacency.
    double average_degree() const;
    int max_row_nonzeros() const;

    void validate() const;
};

enum class GraphFormat { Json, Tsv };

// JSON schema: {"nodes":[{"id":int,"features":[..],"label":int|null}..],
//               "edges":[[u,v]..]}; ids 0-based and dense.
// TSV: one "u<TAB>v" edge per line; features from a CSV alongside
// (row i = node i) whose path is given in `features_path`.
Graph load_graph(const std::string& path, GraphFormat format,
                 const std::string& features_path = "");

// A_hat = D^{-1/2} (A + I) D^{-1/2}; symmetric, eigenvalues within [-1, 1].
Eigen::MatrixXd normalized_adjacency(const Graph& g);

enum class LaplacianVariant { NormalizedShifted };

// NormalizedShifted: (I - A_hat) / 2; symmetric with spectrum in [0, 1].
// The 1/2 rescale keeps the spectral norm at most 1 for block-encoding;
// classical references use the identical matrix.
Eigen::MatrixXd graph_laplacian(const Graph& g,
                                LaplacianVariant variant = LaplacianVariant::NormalizedShifted);

// Node relabeling: node i of the result is node perm[i] of the input.
Graph permute_nodes(const Graph& g, const std::vector<int>& perm);

}  // namespace qgnn::graph
