#pragma once

#include <vector>

#include "edcb/graph.hpp"

namespace edcb {

/// Classical greedy max-coverage dominating set: repeatedly add the node
/// covering the most currently-uncovered nodes (itself included), ties to the
/// minimum id, until all nodes are covered.
std::vector<NodeId> greedy_ds(const Graph& g);

/// Wu-Li marking with the two pruning rules, per component. A node is marked
/// iff it has two mutually non-adjacent neighbors; Rule 1 unmarks v when a
/// marked higher-id neighbor covers its closed neighborhood, Rule 2 unmarks v
/// when two adjacent marked higher-id neighbors jointly cover its open
/// neighborhood. A component that ends up with no marked node (complete
/// components) falls back to its minimum-id node.
std::vector<NodeId> wu_li_cds(const Graph& g);

/// Greedy-growth connected dominating set, per component: start from the
/// maximum-degree node (ties: min id), then repeatedly add the neighbor of
/// the current set covering the most uncovered nodes (ties: min id) until the
/// component is dominated.
std::vector<NodeId> das_cds(const Graph& g);

}  // namespace edcb
