#pragma once

#include "mbb/errors.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace mbb {

enum class Role { Delegator, Sink };

struct GraphNode {
    std::string id;
    Role role = Role::Delegator;

    bool operator==(const GraphNode &) const = default;
};

struct GraphEdge {
    std::string from;
    std::string to;
    std::int64_t cost = 1;

    bool operator==(const GraphEdge &) const = default;
};

// A digraph of voters. Delegators rank trusted delegates through positive
// integer edge costs (1 = first choice); sinks cast their own vote and have
// no outgoing edges. Immutable after construction; every operation below
// returns a new graph. Nodes and edges are kept in lexicographic order so
// that all downstream computations are reproducible.
class DelegationGraph {
  public:
    DelegationGraph() = default;
    DelegationGraph(std::vector<GraphNode> nodes, std::vector<GraphEdge> edges);

    const std::vector<GraphNode> &nodes() const { return nodes_; }
    const std::vector<GraphEdge> &edges() const { return edges_; }

    int node_count() const { return static_cast<int>(nodes_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool has_node(const std::string &id) const { return index_.count(id) > 0; }
    int index_of(const std::string &id) const;

    const GraphNode &node(int v) const { return nodes_[static_cast<std::size_t>(v)]; }
    const GraphEdge &edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }

    bool is_sink(int v) const { return node(v).role == Role::Sink; }

    // Edge indices leaving / entering a node.
    const std::vector<int> &out_edges(int v) const {
        return out_[static_cast<std::size_t>(v)];
    }
    const std::vector<int> &in_edges(int v) const {
        return in_[static_cast<std::size_t>(v)];
    }

    // First edge u -> v, or -1.
    int edge_between(int u, int v) const;

    std::vector<std::string> delegators() const;
    std::vector<std::string> sinks() const;
    int delegator_count() const;
    int sink_count() const;

    bool operator==(const DelegationGraph &other) const {
        return nodes_ == other.nodes_ && edges_ == other.edges_;
    }

  private:
    std::vector<GraphNode> nodes_;
    std::vector<GraphEdge> edges_;
    std::map<std::string, int> index_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
};

struct ValidationReport {
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

// Checks every graph invariant: positive costs, no self-loops, no parallel
// edges, and the sink tag matching out-degree zero in both directions.
// Report-style; never throws.
ValidationReport validate(const DelegationGraph &graph);

// Throws ValidationError when the report is non-empty.
void require_valid(const DelegationGraph &graph);

struct Preprocessed {
    DelegationGraph graph;
    std::vector<std::string> removed; // delegators dropped as isolated, sorted
};

// Drops every delegator with no path to a sink (to a fixpoint) and records
// the removals. AllIsolated if the graph has no sink at all.
Preprocessed preprocess_isolated(const DelegationGraph &graph);

// Strongly connected components of an arbitrary adjacency structure.
// Components are sorted internally and ordered by smallest contained node.
std::vector<std::vector<int>> strongly_connected_components(
    int n, const std::vector<std::vector<int>> &adj);

// Same over a delegation graph, with node ids.
std::vector<std::vector<std::string>> scc(const DelegationGraph &graph);

// Relabels nodes by the bijection sigma; costs and role tags follow the
// nodes. NotABijection unless sigma maps V(G) onto V(G).
DelegationGraph apply_permutation(const DelegationGraph &graph,
                                  const std::map<std::string, std::string> &sigma);

// Graph edits used by the axiom checks. Each applies the edit and re-runs
// isolated-node preprocessing.
Preprocessed remove_out_edges(const DelegationGraph &graph, const std::string &v);
Preprocessed remove_node(const DelegationGraph &graph, const std::string &v);
Preprocessed remove_in_edges_of_sink(const DelegationGraph &graph, const std::string &s);

} // namespace mbb
