#pragma once

#include <vector>

#include "edcb/graph.hpp"

namespace edcb {

struct ComponentCds {
    std::vector<NodeId> component;  // sorted
    NodeId root;
    std::vector<NodeId> local_cds;  // sorted
};

struct CdsResult {
    std::vector<NodeId> cds;         // sorted; always a superset of the input DS
    std::vector<NodeId> connectors;  // sorted; cds minus the input DS
    std::vector<NodeId> roots;       // sorted; one per component
    std::vector<ComponentCds> per_component;
};

/// Connects a dominating set into a connected dominating set, per component:
/// the minimum-id dominator is the root, the remaining dominators are visited
/// in ascending id order, and each one not yet connected to the root through
/// the augmented set D' gets a cheapest connector path whose non-D' nodes
/// join D' as connectors. Paths terminate at the first node of the root's
/// tree, so the connector structure grows as a tree. Throws
/// std::invalid_argument if ds is not a dominating set of g.
CdsResult edc_cds(const Graph& g, const std::vector<NodeId>& ds);

/// Cheapest path from `from` to any node of target_tree, where entering a
/// node of dprime costs 0 and entering any other node costs 1; ties go to
/// fewer hops, then to the lexicographically smallest node-id sequence. The
/// returned path excludes `from` and ends at the tree node reached. Throws
/// std::invalid_argument on bad inputs and std::runtime_error when no path
/// exists.
std::vector<NodeId> connector_path(const Graph& g, const std::vector<NodeId>& dprime,
                                   NodeId from, const std::vector<NodeId>& target_tree);

}  // namespace edcb
