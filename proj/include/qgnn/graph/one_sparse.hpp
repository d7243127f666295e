#pragma once

#include <Eigen/Dense>
#include <vector>

namespace qgnn::graph {

// One 1-sparse summand: column j holds value `values[j]` at row `perm[j]`.
// perm is always a full bijection; completion entries carry value 0.
struct OneSparsePart {
    std::vector<int> perm;
    std::vector<double> values;

    Eigen::MatrixXd to_matrix() const;
};

struct OneSparseDecomposition {
    int dim = 0;
    std::vector<OneSparsePart> parts;

    Eigen::MatrixXd reconstruct() const;
    void validate(const Eigen::MatrixXd& source, double tol = 1e-12) const;
};

// Decompose a square matrix into at most s 1-sparse parts, where s is the max
// nonzero count over rows and columns. The support is completed to an
// s-regular bipartite multigraph with zero-valued entries and split into s
// perfect matchings, so every part's permutation is a bijection.
OneSparseDecomposition one_sparse_decompose(const Eigen::MatrixXd& m);

}  // namespace qgnn::graph
