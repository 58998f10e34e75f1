#pragma once

#include "mbb/matrix.hpp"

#include <map>
#include <utility>

namespace mbb {

// A small digraph with arbitrary-precision edge weights. A weight acts as
// the multiplicity of its edge, so there are no parallel edges; adding the
// same edge twice accumulates. Self-loops are rejected (they never affect a
// tree count or a branching).
template <class W>
struct WeightedDigraphT {
    int n = 0;
    std::map<std::pair<int, int>, W> weight;

    WeightedDigraphT() = default;
    explicit WeightedDigraphT(int n_) : n(n_) {}

    void add_edge(int u, int v, const W &w);

    W out_weight(int u) const {
        W total(0);
        for (const auto &[uv, w] : weight) {
            if (uv.first == u) {
                total += w;
            }
        }
        return total;
    }
};

using WeightedDigraph = WeightedDigraphT<Int>;
using RationalDigraph = WeightedDigraphT<Rat>;

// L = D - A with D the diagonal of weighted out-degrees and A the weighted
// adjacency matrix, rows and columns in node-index order.
template <class W>
Mat<W> laplacian(const WeightedDigraphT<W> &g);

// Total weight of spanning in-trees with sink v, i.e. det of the Laplacian
// with v's row and column deleted. 0 when some node cannot reach v; 1 for
// the single-node graph (the empty tree).
Int count_v_trees(const WeightedDigraph &g, int v);

// Rational-weight variant: scales all weights to integers by the common
// denominator, counts, and rescales by the tree size. Exact because tree
// weight is homogeneous of degree n-1 in the edge weights.
Rat count_v_trees(const RationalDigraph &g, int v);

// Total weight of spanning in-forests whose roots are exactly the given
// nodes (every other node has one outgoing edge, no cycles): det of the
// Laplacian with all root rows/columns deleted.
Int count_root_forests(const WeightedDigraph &g, const std::vector<int> &roots);

} // namespace mbb
