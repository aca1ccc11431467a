#pragma once

#include <compare>
#include <string>
#include <vector>

#include "edcb/graph.hpp"

namespace edcb {

/// Edge weight 1/du + 1/dv, stored as the endpoint degrees so that
/// comparisons stay exact: (du+dv)/(du*dv) against (du'+dv')/(du'*dv') by
/// integer cross multiplication, no floating point involved.
struct EdcWeight {
    int du = 0;
    int dv = 0;

    long long numerator() const { return static_cast<long long>(du) + dv; }
    long long denominator() const { return static_cast<long long>(du) * dv; }
    double value() const { return 1.0 / du + 1.0 / dv; }

    friend std::strong_ordering operator<=>(const EdcWeight& a, const EdcWeight& b) {
        return a.numerator() * b.denominator() <=> b.numerator() * a.denominator();
    }
    friend bool operator==(const EdcWeight& a, const EdcWeight& b) {
        return (a <=> b) == std::strong_ordering::equal;
    }
};

/// One round of dominant-edge selection: the edges marked dominant in this
/// round plus the dominators they elected. undominated_after is the number
/// of still-undominated nodes once the round finished (observational).
struct DsIteration {
    std::vector<Edge> dominant_edges;
    std::vector<NodeId> dominators;
    int undominated_after = 0;
};

struct DsResult {
    std::string algorithm;            // "edc-ds" or "edc-ds-improved"
    std::vector<NodeId> dominators;   // sorted
    std::vector<Edge> dominant_edges; // sorted
    int iterations = 0;
    std::vector<DsIteration> trace;
};

/// Weight of an existing edge. Throws std::invalid_argument if (u,v) is not
/// an edge of g.
EdcWeight edge_weight(const Graph& g, NodeId u, NodeId v);

/// Dominating set construction by repeated maximum-weight dominant-edge
/// selection. Weights are computed once from the input degrees and never
/// recomputed. Each round marks every not-yet-dominant edge tied at the
/// current maximum weight as dominant, processing the tie group in ascending
/// (min id, max id) order: an edge that already has a dominator endpoint, or
/// whose endpoints are both already dominated, elects nobody; otherwise its
/// larger-degree endpoint becomes a dominator (equal degrees: smaller id).
/// A node is dominated iff it is a dominator or adjacent to one. Isolated
/// nodes are self-elected before the first round and do not appear in the
/// trace. Deterministic; handles empty and disconnected graphs.
DsResult edc_ds_basic(const Graph& g);

/// Same selection rules, but immediately after a dominator is elected every
/// edge incident to it becomes dominant without weight comparison, removing
/// those edges from future maximum-weight rounds.
DsResult edc_ds_improved(const Graph& g);

}  // namespace edcb
