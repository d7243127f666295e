#include "qgnn/graph/one_sparse.hpp"

#include <algorithm>
#include <stdexcept>

namespace qgnn::graph {

Eigen::MatrixXd OneSparsePart::to_matrix() const {
    const int n = int(perm.size());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (int j = 0; j < n; ++j) m(perm[j], j) = values[j];
    return m;
}

Eigen::MatrixXd OneSparseDecomposition::reconstruct() const {
    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(dim, dim);
    for (const auto& p : parts) sum += p.to_matrix();
    return sum;
}

void OneSparseDecomposition::validate(const Eigen::MatrixXd& source, double tol) const {
    for (const auto& p : parts) {
        std::vector<bool> seen(dim, false);
        if (int(p.perm.size()) != dim || int(p.values.size()) != dim)
            throw std::runtime_error("one-sparse: part size mismatch");
        for (int j = 0; j < dim; ++j) {
            int r = p.perm[j];
            if (r < 0 || r >= dim || seen[r]) throw std::runtime_error("one-sparse: c(.,l) is not a bijection");
            seen[r] = true;
        }
    }
    if ((reconstruct() - source).cwiseAbs().maxCoeff() > tol)
        throw std::runtime_error("one-sparse: parts do not sum to the source matrix");
}

namespace {

// Edge (row, col, value); completion edges carry value 0 and may duplicate a
// support pair across parts.
struct Edge {
    int row, col;
    double value;
    bool used = false;
};

// Kuhn's augmenting-path matching over the unused edges.
struct Matcher {
    int n;
    const std::vector<Edge>& edges;
    std::vector<std::vector<int>> by_col;  // col -> edge indices
    std::vector<int> row_match;            // row -> edge index or -1
    std::vector<int> col_match;            // col -> edge index or -1

    Matcher(int n_, const std::vector<Edge>& e) : n(n_), edges(e), by_col(n_) {
        for (int i = 0; i < int(e.size()); ++i)
            if (!e[i].used) by_col[e[i].col].push_back(i);
    }

    bool augment(int col, std::vector<bool>& visited) {
        for (int ei : by_col[col]) {
            if (edges[ei].used) continue;
            int r = edges[ei].row;
            if (visited[r]) continue;
            visited[r] = true;
            if (row_match[r] < 0 || augment(edges[row_match[r]].col, visited)) {
                row_match[r] = ei;
                col_match[col] = ei;
                return true;
            }
        }
        return false;
    }

    // Returns per-column edge index of a perfect matching, or empty on failure.
    std::vector<int> perfect_matching() {
        row_match.assign(n, -1);
        col_match.assign(n, -1);
        for (int c = 0; c < n; ++c) {
            std::vector<bool> visited(n, false);
            if (!augment(c, visited)) return {};
        }
        std::vector<int> out(n);
        for (int c = 0; c < n; ++c) out[c] = col_match[c];
        return out;
    }
};

}  // namespace

OneSparseDecomposition one_sparse_decompose(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("one_sparse_decompose: matrix not square");
    const int n = int(m.rows());

    std::vector<Edge> edges;
    std::vector<int> row_deg(n, 0), col_deg(n, 0);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            if (m(i, j) != 0.0) {
                edges.push_back({i, j, m(i, j)});
                ++row_deg[i];
                ++col_deg[j];
            }
    int s = 0;
    for (int i = 0; i < n; ++i) s = std::max({s, row_deg[i], col_deg[i]});
    if (s == 0) s = 1;  // zero matrix still yields one all-zero identity part

    // Complete to an s-regular bipartite multigraph with zero-valued edges.
    {
        int r = 0, c = 0;
        auto next_row = [&] {
            while (r < n && row_deg[r] >= s) ++r;
            return r;
        };
        auto next_col = [&] {
            while (c < n && col_deg[c] >= s) ++c;
            return c;
        };
        while (next_row() < n) {
            if (next_col() >= n) throw std::runtime_error("one-sparse: degree completion failed");
            edges.push_back({r, c, 0.0});
            ++row_deg[r];
            ++col_deg[c];
        }
        if (next_col() < n) throw std::runtime_error("one-sparse: degree completion failed");
    }

    OneSparseDecomposition out;
    out.dim = n;
    for (int part = 0; part < s; ++part) {
        Matcher matcher(n, edges);
        auto match = matcher.perfect_matching();
        if (match.empty()) throw std::runtime_error("one-sparse: no perfect matching in regular completion");
        OneSparsePart p;
        p.perm.resize(n);
        p.values.resize(n);
        for (int j = 0; j < n; ++j) {
            auto& e = edges[match[j]];
            e.used = true;
            p.perm[j] = e.row;
            p.values[j] = e.value;
        }
        out.parts.push_back(std::move(p));
    }
    out.validate(m);
    return out;
}

}  // namespace qgnn::graph
