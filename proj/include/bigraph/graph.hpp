#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bigraph/bitmatrix.hpp"
#include "bigraph/permutation.hpp"

namespace bigraph {

/// Bipartite graph with a distinguished row side of size m and column side of
/// size n. Edges are (row index, column index) pairs, kept sorted and unique.
class BipartiteGraph {
public:
    BipartiteGraph(int m, int n, std::vector<std::pair<int, int>> edges = {})
        : m_(m), n_(n), edges_(std::move(edges)) {
        if (m < 1 || n < 1)
            throw std::invalid_argument("BipartiteGraph: m, n must be >= 1");
        for (auto [r, c] : edges_)
            if (r < 0 || r >= m || c < 0 || c >= n)
                throw std::invalid_argument("BipartiteGraph: edge out of range");
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    }

    int row_size() const { return m_; }
    int col_size() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool has_edge(int r, int c) const {
        return std::binary_search(edges_.begin(), edges_.end(), std::pair{r, c});
    }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
        return a.m_ == b.m_ && a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int m_, n_;
    std::vector<std::pair<int, int>> edges_;
};

/// Graph on m row-vertices and n column-vertices with an edge (i, j) iff a_ij = 1.
inline BipartiteGraph graph_of_matrix(const BinaryMatrix& a) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(a.count_ones()));
    for (int i = 0; i < a.row_count(); ++i)
        for (int j = 0; j < a.col_count(); ++j)
            if (a.get(i, j)) edges.emplace_back(i, j);
    return BipartiteGraph(a.row_count(), a.col_count(), std::move(edges));
}

/// Biadjacency matrix under the numbering (rho, sigma): a[rho(r)][sigma(c)] = 1
/// iff (r, c) is an edge. Distinct numberings of the same graph yield the
/// members of one row/column-permutation orbit.
inline BinaryMatrix matrix_of_graph(const BipartiteGraph& g, const Permutation& rho,
                                    const Permutation& sigma) {
    if (rho.size() != g.row_size() || sigma.size() != g.col_size())
        throw std::invalid_argument("matrix_of_graph: size mismatch");
    BinaryMatrix a(g.row_size(), g.col_size());
    for (auto [r, c] : g.edges()) a.set(rho(r), sigma(c), true);
    return a;
}

}  // namespace bigraph
