#include "mbb/tree_count.hpp"

#include "mbb/errors.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>

namespace mbb {

template <class W>
void WeightedDigraphT<W>::add_edge(int u, int v, const W &w) {
    if (u == v) {
        throw Error("WeightedDigraph: self-loop rejected");
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
        throw Error("WeightedDigraph: node index out of range");
    }
    weight[{u, v}] += w;
}

template void WeightedDigraphT<Int>::add_edge(int, int, const Int &);
template void WeightedDigraphT<Rat>::add_edge(int, int, const Rat &);

template <class W>
Mat<W> laplacian(const WeightedDigraphT<W> &g) {
    Mat<W> l(g.n, g.n);
    for (const auto &[uv, w] : g.weight) {
        const auto [u, v] = uv;
        l(u, u) += w;
        l(u, v) -= w;
    }
    return l;
}

template Mat<Int> laplacian(const WeightedDigraphT<Int> &);
template Mat<Rat> laplacian(const WeightedDigraphT<Rat> &);

namespace {

IntMat delete_rows_cols(const IntMat &m, const std::vector<int> &drop) {
    std::vector<char> dropped(static_cast<std::size_t>(m.rows), 0);
    for (int d : drop) {
        dropped[static_cast<std::size_t>(d)] = 1;
    }
    const int k = m.rows - static_cast<int>(drop.size());
    IntMat out(k, k);
    int oi = 0;
    for (int i = 0; i < m.rows; ++i) {
        if (dropped[static_cast<std::size_t>(i)]) {
            continue;
        }
        int oj = 0;
        for (int j = 0; j < m.cols; ++j) {
            if (dropped[static_cast<std::size_t>(j)]) {
                continue;
            }
            out(oi, oj) = m(i, j);
            ++oj;
        }
        ++oi;
    }
    return out;
}

} // namespace

Int count_v_trees(const WeightedDigraph &g, int v) {
    if (v < 0 || v >= g.n) {
        throw Error("count_v_trees: root out of range");
    }
    return det_exact(delete_rows_cols(laplacian(g), {v}));
}

Rat count_v_trees(const RationalDigraph &g, int v) {
    Int scale = 1;
    for (const auto &[uv, w] : g.weight) {
        if (w <= 0) {
            throw Error("count_v_trees: weights must be positive");
        }
        scale = boost::multiprecision::lcm(scale, Int(denominator(w)));
    }
    WeightedDigraph scaled(g.n);
    for (const auto &[uv, w] : g.weight) {
        scaled.add_edge(uv.first, uv.second,
                        Int(numerator(w)) * (scale / Int(denominator(w))));
    }
    const Int count = count_v_trees(scaled, v);
    // Every spanning in-tree has n-1 edges, so the uniform scaling factors
    // out as scale^(n-1).
    Int divisor = 1;
    for (int i = 0; i + 1 < g.n; ++i) {
        divisor *= scale;
    }
    return Rat(count, divisor);
}

Int count_root_forests(const WeightedDigraph &g, const std::vector<int> &roots) {
    std::vector<int> drop = roots;
    std::sort(drop.begin(), drop.end());
    return det_exact(delete_rows_cols(laplacian(g), drop));
}

} // namespace mbb
