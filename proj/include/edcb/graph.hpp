#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace edcb {

using NodeId = int;
using Edge = std::pair<NodeId, NodeId>;  // normalized so that first < second

/// Simple undirected graph over dense node ids [0, n) with sorted adjacency
/// lists. Immutable after construction; safe to share across threads.
class Graph {
public:
    Graph() = default;

    int n() const { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const { return edge_count_; }
    int degree(NodeId v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<NodeId>& neighbors(NodeId v) const { return adj_[v]; }

    int max_degree() const;
    bool has_edge(NodeId u, NodeId v) const;

    /// All edges as normalized pairs in lexicographic order.
    std::vector<Edge> edges() const;

    friend Graph build_graph(int n, const std::vector<Edge>& edges);

private:
    std::vector<std::vector<NodeId>> adj_;
    std::size_t edge_count_ = 0;
};

/// Canonical constructor: deduplicates edges and sorts adjacency, so the
/// result is independent of input edge order. Throws std::invalid_argument
/// on an out-of-range id or a self-loop, naming the offending pair.
Graph build_graph(int n, const std::vector<Edge>& edges);

/// Maximal connected node sets, each sorted, ordered by minimum contained id.
/// The blocks partition [0, n) exactly.
std::vector<std::vector<NodeId>> connected_components(const Graph& g);

/// True iff every node is in s or adjacent to a node of s.
bool is_dominating_set(const Graph& g, const std::vector<NodeId>& s);

/// True iff s dominates g and the subgraph induced by s is connected.
/// |s| <= 1 counts as connected.
bool is_connected_dominating_set(const Graph& g, const std::vector<NodeId>& s);

/// Component-wise CDS check for possibly disconnected graphs: within every
/// component the restriction of s dominates the component and induces a
/// connected subgraph.
bool is_cds_per_component(const Graph& g, const std::vector<NodeId>& s);

}  // namespace edcb
