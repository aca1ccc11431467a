#include "edcb/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace edcb {

namespace {

// Membership mask for a node list, validating ids against the graph.
std::vector<char> node_mask(const Graph& g, const std::vector<NodeId>& s,
                            const char* what) {
    std::vector<char> in(static_cast<std::size_t>(g.n()), 0);
    for (NodeId v : s) {
        if (v < 0 || v >= g.n()) {
            throw std::invalid_argument(std::string(what) + ": node id " +
                                        std::to_string(v) + " out of range [0, " +
                                        std::to_string(g.n()) + ")");
        }
        in[static_cast<std::size_t>(v)] = 1;
    }
    return in;
}

}  // namespace

int Graph::max_degree() const {
    int best = 0;
    for (const auto& nbrs : adj_) best = std::max(best, static_cast<int>(nbrs.size()));
    return best;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (NodeId u = 0; u < n(); ++u) {
        for (NodeId v : adj_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;  // already lexicographic: outer loop by u, adjacency sorted
}

Graph build_graph(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw std::invalid_argument("build_graph: negative node count");
    Graph g;
    g.adj_.assign(static_cast<std::size_t>(n), {});
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw std::invalid_argument("build_graph: edge (" + std::to_string(u) +
                                        "," + std::to_string(v) +
                                        ") has an id outside [0, " +
                                        std::to_string(n) + ")");
        }
        if (u == v) {
            throw std::invalid_argument("build_graph: self-loop (" +
                                        std::to_string(u) + "," +
                                        std::to_string(v) + ") rejected");
        }
        g.adj_[static_cast<std::size_t>(u)].push_back(v);
        g.adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    g.edge_count_ = 0;
    for (auto& nbrs : g.adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        g.edge_count_ += nbrs.size();
    }
    g.edge_count_ /= 2;
    return g;
}

std::vector<std::vector<NodeId>> connected_components(const Graph& g) {
    std::vector<std::vector<NodeId>> blocks;
    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    for (NodeId s = 0; s < g.n(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<NodeId> block;
        std::queue<NodeId> q;
        q.push(s);
        seen[static_cast<std::size_t>(s)] = 1;
        while (!q.empty()) {
            NodeId x = q.front();
            q.pop();
            block.push_back(x);
            for (NodeId y : g.neighbors(x)) {
                if (!seen[static_cast<std::size_t>(y)]) {
                    seen[static_cast<std::size_t>(y)] = 1;
                    q.push(y);
                }
            }
        }
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
    }
    return blocks;  // ordered by minimum id since sources scan in id order
}

bool is_dominating_set(const Graph& g, const std::vector<NodeId>& s) {
    auto in = node_mask(g, s, "is_dominating_set");
    for (NodeId v = 0; v < g.n(); ++v) {
        if (in[static_cast<std::size_t>(v)]) continue;
        bool covered = false;
        for (NodeId u : g.neighbors(v)) {
            if (in[static_cast<std::size_t>(u)]) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

bool is_connected_dominating_set(const Graph& g, const std::vector<NodeId>& s) {
    if (!is_dominating_set(g, s)) return false;
    auto in = node_mask(g, s, "is_connected_dominating_set");
    std::vector<NodeId> members;
    for (NodeId v = 0; v < g.n(); ++v) {
        if (in[static_cast<std::size_t>(v)]) members.push_back(v);
    }
    if (members.size() <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    std::queue<NodeId> q;
    q.push(members.front());
    seen[static_cast<std::size_t>(members.front())] = 1;
    std::size_t reached = 1;
    while (!q.empty()) {
        NodeId x = q.front();
        q.pop();
        for (NodeId y : g.neighbors(x)) {
            if (in[static_cast<std::size_t>(y)] && !seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = 1;
                ++reached;
                q.push(y);
            }
        }
    }
    return reached == members.size();
}

bool is_cds_per_component(const Graph& g, const std::vector<NodeId>& s) {
    auto in = node_mask(g, s, "is_cds_per_component");
    for (const auto& comp : connected_components(g)) {
        std::vector<NodeId> local;
        for (NodeId v : comp) {
            if (in[static_cast<std::size_t>(v)]) local.push_back(v);
        }
        // Dominate the component.
        for (NodeId v : comp) {
            if (in[static_cast<std::size_t>(v)]) continue;
            bool covered = false;
            for (NodeId u : g.neighbors(v)) {
                if (in[static_cast<std::size_t>(u)]) {
                    covered = true;
                    break;
                }
            }
            if (!covered) return false;
        }
        // Induce a connected subgraph.
        if (local.size() <= 1) continue;
        std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
        std::queue<NodeId> q;
        q.push(local.front());
        seen[static_cast<std::size_t>(local.front())] = 1;
        std::size_t reached = 1;
        while (!q.empty()) {
            NodeId x = q.front();
            q.pop();
            for (NodeId y : g.neighbors(x)) {
                if (in[static_cast<std::size_t>(y)] && !seen[static_cast<std::size_t>(y)]) {
                    seen[static_cast<std::size_t>(y)] = 1;
                    ++reached;
                    q.push(y);
                }
            }
        }
        if (reached != local.size()) return false;
    }
    return true;
}

}  // namespace edcb
