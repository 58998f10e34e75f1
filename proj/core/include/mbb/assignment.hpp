#pragma once

#include "mbb/matrix.hpp"

#include <string>
#include <vector>

namespace mbb {

// A fractional assignment of delegators to sinks: exact rationals in [0,1],
// each row summing to 1. Delegators dropped as isolated during preprocessing
// are listed in `removed` and have no row.
struct Assignment {
    std::vector<std::string> delegators; // sorted row ids
    std::vector<std::string> sinks;      // sorted column ids
    RatMat entries;                      // |delegators| x |sinks|
    std::vector<std::string> removed;

    int row_of(const std::string &delegator) const;
    int col_of(const std::string &sink) const;

    // Entry lookup by id; throws NoSuchNode for an unknown id.
    const Rat &at(const std::string &delegator, const std::string &sink) const;

    // Exact check that every row sums to 1 and entries lie in [0,1].
    bool row_stochastic() const;

    bool operator==(const Assignment &other) const = default;
};

// Voting weight of each casting voter: 1 plus the fractional weight
// delegated to it. Weights sum to |N| + |S| over the preprocessed graph.
struct VotingWeights {
    std::vector<std::string> sinks;
    std::vector<Rat> pi;

    const Rat &at(const std::string &sink) const;
    Rat total() const;
};

VotingWeights voting_weights(const Assignment &assignment);

// Largest |a - b| over all shared entries; the assignments must have the
// same shape.
Rat max_entry_deviation(const Assignment &a, const Assignment &b);

} // namespace mbb
