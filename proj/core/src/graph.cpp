#include "mbb/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace mbb {

DelegationGraph::DelegationGraph(std::vector<GraphNode> nodes, std::vector<GraphEdge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
    std::sort(nodes_.begin(), nodes_.end(),
              [](const GraphNode &a, const GraphNode &b) { return a.id < b.id; });
    std::sort(edges_.begin(), edges_.end(), [](const GraphEdge &a, const GraphEdge &b) {
        return std::tie(a.from, a.to, a.cost) < std::tie(b.from, b.to, b.cost);
    });

    std::vector<std::string> structural;
    for (int i = 0; i < static_cast<int>(nodes_.size()); ++i) {
        if (!index_.emplace(nodes_[i].id, i).second) {
            structural.push_back("duplicate node id '" + nodes_[i].id + "'");
        }
    }
    out_.resize(nodes_.size());
    in_.resize(nodes_.size());
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
        const auto from = index_.find(edges_[e].from);
        const auto to = index_.find(edges_[e].to);
        if (from == index_.end()) {
            structural.push_back("edge references unknown node '" + edges_[e].from + "'");
        }
        if (to == index_.end()) {
            structural.push_back("edge references unknown node '" + edges_[e].to + "'");
        }
        if (from == index_.end() || to == index_.end()) {
            continue;
        }
        out_[from->second].push_back(e);
        in_[to->second].push_back(e);
    }
    if (!structural.empty()) {
        throw ValidationError(std::move(structural));
    }
}

int DelegationGraph::index_of(const std::string &id) const {
    const auto it = index_.find(id);
    return it == index_.end() ? -1 : it->second;
}

int DelegationGraph::edge_between(int u, int v) const {
    for (int e : out_edges(u)) {
        if (index_of(edge(e).to) == v) {
            return e;
        }
    }
    return -1;
}

std::vector<std::string> DelegationGraph::delegators() const {
    std::vector<std::string> out;
    for (const auto &n : nodes_) {
        if (n.role == Role::Delegator) {
            out.push_back(n.id);
        }
    }
    return out;
}

std::vector<std::string> DelegationGraph::sinks() const {
    std::vector<std::string> out;
    for (const auto &n : nodes_) {
        if (n.role == Role::Sink) {
            out.push_back(n.id);
        }
    }
    return out;
}

int DelegationGraph::delegator_count() const {
    return static_cast<int>(std::count_if(nodes_.begin(), nodes_.end(), [](const GraphNode &n) {
        return n.role == Role::Delegator;
    }));
}

int DelegationGraph::sink_count() const { return node_count() - delegator_count(); }

ValidationReport validate(const DelegationGraph &graph) {
    ValidationReport report;
    for (const auto &e : graph.edges()) {
        if (e.cost < 1) {
            report.violations.push_back("cost < 1 on edge (" + e.from + "," + e.to + ")");
        }
        if (e.from == e.to) {
            report.violations.push_back("self-loop on node '" + e.from + "'");
        }
    }
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto &e : graph.edges()) {
        if (!seen.emplace(e.from, e.to).second) {
            report.violations.push_back("parallel edge (" + e.from + "," + e.to + ")");
        }
    }
    for (int v = 0; v < graph.node_count(); ++v) {
        const bool has_out = !graph.out_edges(v).empty();
        if (graph.is_sink(v) && has_out) {
            report.violations.push_back("sink '" + graph.node(v).id + "' has an outgoing edge");
        }
        if (!graph.is_sink(v) && !has_out) {
            report.violations.push_back("delegator '" + graph.node(v).id +
                                        "' has no outgoing edge but is not tagged sink");
        }
    }
    return report;
}

void require_valid(const DelegationGraph &graph) {
    auto report = validate(graph);
    if (!report.ok()) {
        throw ValidationError(std::move(report.violations));
    }
}

namespace {

// Nodes with a path to some sink: reverse BFS from all sinks.
std::vector<char> reaches_sink(const DelegationGraph &graph) {
    std::vector<char> reach(graph.node_count(), 0);
    std::deque<int> queue;
    for (int v = 0; v < graph.node_count(); ++v) {
        if (graph.is_sink(v)) {
            reach[v] = 1;
            queue.push_back(v);
        }
    }
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (int e : graph.in_edges(v)) {
            const int u = graph.index_of(graph.edge(e).from);
            if (!reach[u]) {
                reach[u] = 1;
                queue.push_back(u);
            }
        }
    }
    return reach;
}

DelegationGraph induced_subgraph(const DelegationGraph &graph, const std::vector<char> &keep) {
    std::vector<GraphNode> nodes;
    for (int v = 0; v < graph.node_count(); ++v) {
        if (keep[v]) {
            nodes.push_back(graph.node(v));
        }
    }
    std::vector<GraphEdge> edges;
    for (const auto &e : graph.edges()) {
        if (keep[graph.index_of(e.from)] && keep[graph.index_of(e.to)]) {
            edges.push_back(e);
        }
    }
    return DelegationGraph(std::move(nodes), std::move(edges));
}

} // namespace

Preprocessed preprocess_isolated(const DelegationGraph &graph) {
    if (graph.sink_count() == 0) {
        throw AllIsolatedError("graph has no sink; every delegator is isolated");
    }
    const auto reach = reaches_sink(graph);
    Preprocessed result;
    for (int v = 0; v < graph.node_count(); ++v) {
        if (!reach[v]) {
            result.removed.push_back(graph.node(v).id);
        }
    }
    result.graph = result.removed.empty() ? graph : induced_subgraph(graph, reach);
    return result;
}

std::vector<std::vector<int>> strongly_connected_components(
    int n, const std::vector<std::vector<int>> &adj) {
    // Iterative Tarjan.
    std::vector<int> number(n, -1), low(n, 0), on_stack(n, 0);
    std::vector<int> stack;
    std::vector<std::vector<int>> comps;
    int counter = 0;

    struct Frame {
        int v;
        std::size_t next;
    };
    std::vector<Frame> call;
    for (int start = 0; start < n; ++start) {
        if (number[start] != -1) {
            continue;
        }
        call.push_back({start, 0});
        while (!call.empty()) {
            auto &[v, next] = call.back();
            if (next == 0) {
                number[v] = low[v] = counter++;
                stack.push_back(v);
                on_stack[v] = 1;
            }
            if (next < adj[v].size()) {
                const int w = adj[v][next++];
                if (number[w] == -1) {
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], number[w]);
                }
                continue;
            }
            if (low[v] == number[v]) {
                std::vector<int> comp;
                for (;;) {
                    const int w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp.push_back(w);
                    if (w == v) {
                        break;
                    }
                }
                std::sort(comp.begin(), comp.end());
                comps.push_back(std::move(comp));
            }
            const int finished = v;
            call.pop_back();
            if (!call.empty()) {
                low[call.back().v] = std::min(low[call.back().v], low[finished]);
            }
        }
    }
    std::sort(comps.begin(), comps.end(),
              [](const auto &a, const auto &b) { return a.front() < b.front(); });
    return comps;
}

std::vector<std::vector<std::string>> scc(const DelegationGraph &graph) {
    std::vector<std::vector<int>> adj(graph.node_count());
    for (int v = 0; v < graph.node_count(); ++v) {
        for (int e : graph.out_edges(v)) {
            adj[v].push_back(graph.index_of(graph.edge(e).to));
        }
    }
    std::vector<std::vector<std::string>> out;
    for (const auto &comp : strongly_connected_components(graph.node_count(), adj)) {
        std::vector<std::string> ids;
        for (int v : comp) {
            ids.push_back(graph.node(v).id);
        }
        out.push_back(std::move(ids));
    }
    return out;
}

DelegationGraph apply_permutation(const DelegationGraph &graph,
                                  const std::map<std::string, std::string> &sigma) {
    if (static_cast<int>(sigma.size()) != graph.node_count()) {
        throw NotABijectionError("sigma does not cover every node exactly once");
    }
    std::set<std::string> image;
    for (const auto &[from, to] : sigma) {
        if (!graph.has_node(from) || !graph.has_node(to)) {
            throw NotABijectionError("sigma mentions unknown node '" +
                                     (graph.has_node(from) ? to : from) + "'");
        }
        if (!image.insert(to).second) {
            throw NotABijectionError("sigma maps two nodes to '" + to + "'");
        }
    }
    std::vector<GraphNode> nodes;
    for (const auto &n : graph.nodes()) {
        nodes.push_back({sigma.at(n.id), n.role});
    }
    std::vector<GraphEdge> edges;
    for (const auto &e : graph.edges()) {
        edges.push_back({sigma.at(e.from), sigma.at(e.to), e.cost});
    }
    return DelegationGraph(std::move(nodes), std::move(edges));
}

namespace {

int require_role(const DelegationGraph &graph, const std::string &id, Role role) {
    const int v = graph.index_of(id);
    if (v < 0) {
        throw NoSuchNodeError("no node '" + id + "'");
    }
    if (graph.node(v).role != role) {
        throw NoSuchNodeError("node '" + id + "' is not a " +
                              (role == Role::Delegator ? std::string("delegator")
                                                       : std::string("sink")));
    }
    return v;
}

} // namespace

Preprocessed remove_out_edges(const DelegationGraph &graph, const std::string &v) {
    require_role(graph, v, Role::Delegator);
    std::vector<GraphNode> nodes;
    for (const auto &n : graph.nodes()) {
        nodes.push_back({n.id, n.id == v ? Role::Sink : n.role});
    }
    std::vector<GraphEdge> edges;
    for (const auto &e : graph.edges()) {
        if (e.from != v) {
            edges.push_back(e);
        }
    }
    return preprocess_isolated(DelegationGraph(std::move(nodes), std::move(edges)));
}

Preprocessed remove_node(const DelegationGraph &graph, const std::string &v) {
    require_role(graph, v, Role::Delegator);
    std::vector<GraphNode> nodes;
    for (const auto &n : graph.nodes()) {
        if (n.id != v) {
            nodes.push_back(n);
        }
    }
    std::vector<GraphEdge> edges;
    for (const auto &e : graph.edges()) {
        if (e.from != v && e.to != v) {
            edges.push_back(e);
        }
    }
    return preprocess_isolated(DelegationGraph(std::move(nodes), std::move(edges)));
}

Preprocessed remove_in_edges_of_sink(const DelegationGraph &graph, const std::string &s) {
    require_role(graph, s, Role::Sink);
    std::vector<GraphEdge> edges;
    for (const auto &e : graph.edges()) {
        if (e.to != s) {
            edges.push_back(e);
        }
    }
    return preprocess_isolated(DelegationGraph(graph.nodes(), std::move(edges)));
}

} // namespace mbb
