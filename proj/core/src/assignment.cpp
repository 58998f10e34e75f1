#include "mbb/assignment.hpp"

#include "mbb/errors.hpp"

#include <algorithm>

namespace mbb {

int Assignment::row_of(const std::string &delegator) const {
    const auto it = std::lower_bound(delegators.begin(), delegators.end(), delegator);
    if (it == delegators.end() || *it != delegator) {
        return -1;
    }
    return static_cast<int>(it - delegators.begin());
}

int Assignment::col_of(const std::string &sink) const {
    const auto it = std::lower_bound(sinks.begin(), sinks.end(), sink);
    if (it == sinks.end() || *it != sink) {
        return -1;
    }
    return static_cast<int>(it - sinks.begin());
}

const Rat &Assignment::at(const std::string &delegator, const std::string &sink) const {
    const int r = row_of(delegator);
    const int c = col_of(sink);
    if (r < 0) {
        throw NoSuchNodeError("no delegator '" + delegator + "' in assignment");
    }
    if (c < 0) {
        throw NoSuchNodeError("no sink '" + sink + "' in assignment");
    }
    return entries(r, c);
}

bool Assignment::row_stochastic() const {
    for (int i = 0; i < entries.rows; ++i) {
        Rat sum(0);
        for (int j = 0; j < entries.cols; ++j) {
            if (entries(i, j) < 0 || entries(i, j) > 1) {
                return false;
            }
            sum += entries(i, j);
        }
        if (sum != 1) {
            return false;
        }
    }
    return true;
}

const Rat &VotingWeights::at(const std::string &sink) const {
    const auto it = std::lower_bound(sinks.begin(), sinks.end(), sink);
    if (it == sinks.end() || *it != sink) {
        throw NoSuchNodeError("no sink '" + sink + "' in voting weights");
    }
    return pi[static_cast<std::size_t>(it - sinks.begin())];
}

Rat VotingWeights::total() const {
    Rat sum(0);
    for (const auto &w : pi) {
        sum += w;
    }
    return sum;
}

VotingWeights voting_weights(const Assignment &assignment) {
    VotingWeights weights;
    weights.sinks = assignment.sinks;
    weights.pi.assign(assignment.sinks.size(), Rat(1));
    for (int i = 0; i < assignment.entries.rows; ++i) {
        for (int j = 0; j < assignment.entries.cols; ++j) {
            weights.pi[static_cast<std::size_t>(j)] += assignment.entries(i, j);
        }
    }
    return weights;
}

Rat max_entry_deviation(const Assignment &a, const Assignment &b) {
    if (a.delegators != b.delegators || a.sinks != b.sinks) {
        throw Error("max_entry_deviation: assignments have different shapes");
    }
    Rat best(0);
    for (int i = 0; i < a.entries.rows; ++i) {
        for (int j = 0; j < a.entries.cols; ++j) {
            const Rat d = rat_abs(a.entries(i, j) - b.entries(i, j));
            if (d > best) {
                best = d;
            }
        }
    }
    return best;
}

} // namespace mbb
