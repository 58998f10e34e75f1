#pragma once

#include "mbb/matrix.hpp"
#include "mbb/tree_count.hpp"

#include <string>
#include <vector>

namespace mbb {

// Markov chain with exact rational transition probabilities. Rows sum to 1,
// absorbing rows are identity rows, and every state must reach an absorbing
// state for the absorbing probabilities to exist.
struct AbsorbingChain {
    std::vector<std::string> states;
    RatMat transition;
    std::vector<char> absorbing;

    AbsorbingChain() = default;
    AbsorbingChain(std::vector<std::string> states_, RatMat transition_,
                   std::vector<char> absorbing_);

    int state_count() const { return static_cast<int>(states.size()); }
    std::vector<int> absorbing_states() const;
};

// Chain of a weighted digraph: off-diagonal probabilities w(u,v)/delta with
// delta the maximum weighted out-degree, and a self-loop making each row sum
// to 1. Nodes without outgoing edges become absorbing states.
AbsorbingChain chain_from_weighted(const WeightedDigraphT<Int> &g,
                                   std::vector<std::string> names);
AbsorbingChain chain_from_weighted(const WeightedDigraphT<Rat> &g,
                                   std::vector<std::string> names);

// Row-normalized chain without self-loops (probabilities proportional to the
// weights). Absorbing probabilities agree with the delta-normalized chain.
AbsorbingChain chain_from_weighted_no_self_loops(const WeightedDigraphT<Int> &g,
                                                 std::vector<std::string> names);

// Exact absorbing probabilities: one row per state, one column per absorbing
// state (in state order). Transient rows solve (I - D) Q = C; absorbing rows
// are unit rows. SingularSystem when some state cannot reach an absorbing
// state.
RatMat absorbing_probabilities(const AbsorbingChain &chain);

// Adds a self-loop with probability p to a non-absorbing state and rescales
// that row by 1-p.
AbsorbingChain with_self_loop(const AbsorbingChain &chain, int state, const Rat &p);

} // namespace mbb
