#include "mbb/chain.hpp"

#include "mbb/errors.hpp"

#include <deque>

namespace mbb {

AbsorbingChain::AbsorbingChain(std::vector<std::string> states_, RatMat transition_,
                               std::vector<char> absorbing_)
    : states(std::move(states_)), transition(std::move(transition_)),
      absorbing(std::move(absorbing_)) {
    const int n = state_count();
    if (transition.rows != n || transition.cols != n ||
        static_cast<int>(absorbing.size()) != n) {
        throw Error("AbsorbingChain: dimension mismatch");
    }
    for (int i = 0; i < n; ++i) {
        Rat sum(0);
        for (int j = 0; j < n; ++j) {
            if (transition(i, j) < 0) {
                throw Error("AbsorbingChain: negative transition probability");
            }
            sum += transition(i, j);
        }
        if (sum != 1) {
            throw Error("AbsorbingChain: row for state '" + states[i] +
                        "' does not sum to 1");
        }
        if (absorbing[i] && transition(i, i) != 1) {
            throw Error("AbsorbingChain: absorbing state '" + states[i] +
                        "' lacks an identity row");
        }
    }
}

std::vector<int> AbsorbingChain::absorbing_states() const {
    std::vector<int> out;
    for (int i = 0; i < state_count(); ++i) {
        if (absorbing[i]) {
            out.push_back(i);
        }
    }
    return out;
}

namespace {

template <class W>
AbsorbingChain build_delta_chain(const WeightedDigraphT<W> &g,
                                 std::vector<std::string> names) {
    const int n = g.n;
    std::vector<Rat> out_weight(static_cast<std::size_t>(n), Rat(0));
    for (const auto &[uv, w] : g.weight) {
        out_weight[static_cast<std::size_t>(uv.first)] += Rat(w);
    }
    Rat delta(0);
    for (const auto &w : out_weight) {
        if (w > delta) {
            delta = w;
        }
    }
    RatMat p(n, n);
    std::vector<char> absorbing(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        if (out_weight[static_cast<std::size_t>(v)] == 0) {
            absorbing[static_cast<std::size_t>(v)] = 1;
            p(v, v) = 1;
        } else {
            p(v, v) = 1 - out_weight[static_cast<std::size_t>(v)] / delta;
        }
    }
    for (const auto &[uv, w] : g.weight) {
        p(uv.first, uv.second) = Rat(w) / delta;
    }
    return AbsorbingChain(std::move(names), std::move(p), std::move(absorbing));
}

} // namespace

AbsorbingChain chain_from_weighted(const WeightedDigraphT<Int> &g,
                                   std::vector<std::string> names) {
    return build_delta_chain(g, std::move(names));
}

AbsorbingChain chain_from_weighted(const WeightedDigraphT<Rat> &g,
                                   std::vector<std::string> names) {
    return build_delta_chain(g, std::move(names));
}

AbsorbingChain chain_from_weighted_no_self_loops(const WeightedDigraphT<Int> &g,
                                                 std::vector<std::string> names) {
    const int n = g.n;
    std::vector<Rat> out_weight(static_cast<std::size_t>(n), Rat(0));
    for (const auto &[uv, w] : g.weight) {
        out_weight[static_cast<std::size_t>(uv.first)] += Rat(w);
    }
    RatMat p(n, n);
    std::vector<char> absorbing(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        if (out_weight[static_cast<std::size_t>(v)] == 0) {
            absorbing[static_cast<std::size_t>(v)] = 1;
            p(v, v) = 1;
        }
    }
    for (const auto &[uv, w] : g.weight) {
        p(uv.first, uv.second) = Rat(w) / out_weight[static_cast<std::size_t>(uv.first)];
    }
    return AbsorbingChain(std::move(names), std::move(p), std::move(absorbing));
}

RatMat absorbing_probabilities(const AbsorbingChain &chain) {
    const int n = chain.state_count();
    const auto abs_states = chain.absorbing_states();
    const int na = static_cast<int>(abs_states.size());

    // Reachability of an absorbing state, walking transitions backwards.
    std::vector<std::vector<int>> rev(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j && chain.transition(i, j) != 0) {
                rev[static_cast<std::size_t>(j)].push_back(i);
            }
        }
    }
    std::vector<char> reaches(static_cast<std::size_t>(n), 0);
    std::deque<int> queue;
    for (int a : abs_states) {
        reaches[static_cast<std::size_t>(a)] = 1;
        queue.push_back(a);
    }
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (int u : rev[static_cast<std::size_t>(v)]) {
            if (!reaches[static_cast<std::size_t>(u)]) {
                reaches[static_cast<std::size_t>(u)] = 1;
                queue.push_back(u);
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        if (!reaches[static_cast<std::size_t>(i)]) {
            throw SingularSystemError("state '" + chain.states[i] +
                                      "' cannot reach an absorbing state");
        }
    }

    std::vector<int> transient;
    std::vector<int> col_of(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < na; ++i) {
        col_of[static_cast<std::size_t>(abs_states[i])] = i;
    }
    for (int i = 0; i < n; ++i) {
        if (!chain.absorbing[static_cast<std::size_t>(i)]) {
            transient.push_back(i);
        }
    }
    const int nt = static_cast<int>(transient.size());

    RatMat q(n, na);
    for (int i = 0; i < na; ++i) {
        q(abs_states[i], i) = 1;
    }
    if (nt == 0) {
        return q;
    }

    // (I - D) x = C with D the transient-to-transient block and C the
    // transient-to-absorbing block.
    RatMat a(nt, nt);
    RatMat c(nt, na);
    for (int i = 0; i < nt; ++i) {
        for (int j = 0; j < nt; ++j) {
            a(i, j) = (i == j ? Rat(1) : Rat(0)) - chain.transition(transient[i], transient[j]);
        }
        for (int j = 0; j < na; ++j) {
            c(i, j) = chain.transition(transient[i], abs_states[j]);
        }
    }
    const RatMat x = solve_exact(a, c);
    for (int i = 0; i < nt; ++i) {
        for (int j = 0; j < na; ++j) {
            q(transient[i], j) = x(i, j);
        }
    }
    return q;
}

AbsorbingChain with_self_loop(const AbsorbingChain &chain, int state, const Rat &p) {
    if (state < 0 || state >= chain.state_count() || chain.absorbing[state]) {
        throw Error("with_self_loop: state must be non-absorbing");
    }
    if (p < 0 || p >= 1) {
        throw Error("with_self_loop: probability must lie in [0,1)");
    }
    RatMat t = chain.transition;
    for (int j = 0; j < t.cols; ++j) {
        t(state, j) *= (1 - p);
    }
    t(state, state) += p;
    return AbsorbingChain(chain.states, std::move(t), chain.absorbing);
}

} // namespace mbb
