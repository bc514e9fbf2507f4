#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "bigraph/graph.hpp"
#include "bigraph/numeric.hpp"

namespace bigraph {

enum class Side { row, column };

struct VertexRef {
    Side side;
    int index;
};

/// Indices on the opposite side adjacent to v, sorted ascending. Empty for an
/// isolated vertex.
inline std::vector<int> neighbors(const BipartiteGraph& g, VertexRef v) {
    int limit = v.side == Side::row ? g.row_size() : g.col_size();
    if (v.index < 0 || v.index >= limit)
        throw std::out_of_range("neighbors: vertex out of range");
    std::vector<int> out;
    for (auto [r, c] : g.edges()) {
        if (v.side == Side::row && r == v.index) out.push_back(c);
        if (v.side == Side::column && c == v.index) out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline int degree(const BipartiteGraph& g, VertexRef v) {
    return static_cast<int>(neighbors(g, v).size());
}

struct VertexClass {
    Side side;
    std::vector<int> members;  // sorted ascending
};

/// Partition of the vertices by equal neighbor sets, sides kept apart.
struct NeighborhoodClassification {
    std::vector<VertexClass> classes;  // row-side classes first, then column-side,
                                       // each ordered by smallest member
    std::vector<int> deltas;           // all class sizes, sorted ascending
    std::vector<int> deltas_rows;      // row-side class sizes, sorted ascending
    std::vector<int> deltas_cols;      // column-side class sizes, sorted ascending
    int class_count = 0;
    BigNat delta_factorial_product;    // over both sides
};

/// Groups vertices by (side, neighbor set). Two vertices are equivalent iff
/// they lie on the same side and have identical neighbor sets; in particular
/// all isolated vertices of one side form a single class, and a class never
/// spans both sides. The class count s satisfies 2 <= s <= m + n and the class
/// sizes sum to m + n.
inline NeighborhoodClassification classify(const BipartiteGraph& g) {
    NeighborhoodClassification out;
    out.delta_factorial_product = 1;
    for (Side side : {Side::row, Side::column}) {
        int limit = side == Side::row ? g.row_size() : g.col_size();
        std::map<std::vector<int>, std::vector<int>> groups;
        for (int v = 0; v < limit; ++v)
            groups[neighbors(g, {side, v})].push_back(v);

        std::vector<VertexClass> side_classes;
        for (auto& [nb, members] : groups)
            side_classes.push_back({side, members});
        std::sort(side_classes.begin(), side_classes.end(),
                  [](const VertexClass& a, const VertexClass& b) {
                      return a.members.front() < b.members.front();
                  });

        auto& sizes = side == Side::row ? out.deltas_rows : out.deltas_cols;
        for (auto& cls : side_classes) {
            int d = static_cast<int>(cls.members.size());
            sizes.push_back(d);
            out.deltas.push_back(d);
            out.delta_factorial_product *= factorial(d);
            out.classes.push_back(std::move(cls));
        }
        std::sort(sizes.begin(), sizes.end());
    }
    std::sort(out.deltas.begin(), out.deltas.end());
    out.class_count = static_cast<int>(out.classes.size());
    return out;
}

struct DegreeSums {
    int row_sum = 0;
    int col_sum = 0;
    int total = 0;
};

/// Both side sums equal the edge count, so total = 2 * |edges|.
inline DegreeSums degree_sum_check(const BipartiteGraph& g) {
    DegreeSums s;
    for (int r = 0; r < g.row_size(); ++r) s.row_sum += degree(g, {Side::row, r});
    for (int c = 0; c < g.col_size(); ++c) s.col_sum += degree(g, {Side::column, c});
    s.total = s.row_sum + s.col_sum;
    return s;
}

}  // namespace bigraph
