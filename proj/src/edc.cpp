#include "edcb/edc.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace edcb {

namespace {

struct WeightedEdge {
    NodeId u;
    NodeId v;
    EdcWeight w;
};

DsResult run_edc_ds(const Graph& g, bool propagate_incident) {
    const int n = g.n();
    DsResult result;
    result.algorithm = propagate_incident ? "edc-ds-improved" : "edc-ds";

    std::vector<char> is_dominator(static_cast<std::size_t>(n), 0);
    std::vector<char> dominated(static_cast<std::size_t>(n), 0);
    int dominated_count = 0;

    auto elect = [&](NodeId w) {
        is_dominator[static_cast<std::size_t>(w)] = 1;
        result.dominators.push_back(w);
        if (!dominated[static_cast<std::size_t>(w)]) {
            dominated[static_cast<std::size_t>(w)] = 1;
            ++dominated_count;
        }
        for (NodeId x : g.neighbors(w)) {
            if (!dominated[static_cast<std::size_t>(x)]) {
                dominated[static_cast<std::size_t>(x)] = 1;
                ++dominated_count;
            }
        }
    };

    // No edge can dominate an isolated node; it dominates itself.
    for (NodeId v = 0; v < n; ++v) {
        if (g.degree(v) == 0) elect(v);
    }

    // Weights frozen from the input degrees; one sort, never recomputed.
    std::vector<WeightedEdge> edges;
    edges.reserve(g.edge_count());
    for (const auto& [u, v] : g.edges()) {
        edges.push_back({u, v, EdcWeight{g.degree(u), g.degree(v)}});
    }
    std::sort(edges.begin(), edges.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
        if (a.w != b.w) return a.w > b.w;
        if (a.u != b.u) return a.u < b.u;
        return a.v < b.v;
    });

    std::vector<std::vector<std::size_t>> incident(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < edges.size(); ++i) {
        incident[static_cast<std::size_t>(edges[i].u)].push_back(i);
        incident[static_cast<std::size_t>(edges[i].v)].push_back(i);
    }

    std::vector<char> dominant(edges.size(), 0);
    std::size_t cursor = 0;

    while (dominated_count < n) {
        while (cursor < edges.size() && dominant[cursor]) ++cursor;
        if (cursor == edges.size()) break;  // unreachable while nodes stay undominated

        // Tie group: every not-yet-dominant edge at the current maximum
        // weight, already in ascending (min id, max id) order.
        std::vector<std::size_t> group;
        for (std::size_t j = cursor; j < edges.size() && edges[j].w == edges[cursor].w; ++j) {
            if (!dominant[j]) group.push_back(j);
        }

        DsIteration iter;
        for (std::size_t idx : group) {
            dominant[idx] = 1;
            iter.dominant_edges.emplace_back(edges[idx].u, edges[idx].v);
        }
        for (std::size_t idx : group) {
            const NodeId u = edges[idx].u;
            const NodeId v = edges[idx].v;
            if (is_dominator[static_cast<std::size_t>(u)] ||
                is_dominator[static_cast<std::size_t>(v)]) {
                continue;
            }
            if (dominated[static_cast<std::size_t>(u)] &&
                dominated[static_cast<std::size_t>(v)]) {
                continue;
            }
            const int du = g.degree(u);
            const int dv = g.degree(v);
            const NodeId winner = du > dv ? u : (dv > du ? v : std::min(u, v));
            elect(winner);
            iter.dominators.push_back(winner);
            if (propagate_incident) {
                for (std::size_t f : incident[static_cast<std::size_t>(winner)]) {
                    if (!dominant[f]) {
                        dominant[f] = 1;
                        iter.dominant_edges.emplace_back(edges[f].u, edges[f].v);
                    }
                }
            }
        }
        std::sort(iter.dominant_edges.begin(), iter.dominant_edges.end());
        std::sort(iter.dominators.begin(), iter.dominators.end());
        iter.undominated_after = n - dominated_count;
        result.trace.push_back(std::move(iter));
    }

    result.iterations = static_cast<int>(result.trace.size());
    std::sort(result.dominators.begin(), result.dominators.end());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (dominant[i]) result.dominant_edges.emplace_back(edges[i].u, edges[i].v);
    }
    std::sort(result.dominant_edges.begin(), result.dominant_edges.end());
    return result;
}

}  // namespace

EdcWeight edge_weight(const Graph& g, NodeId u, NodeId v) {
    if (u < 0 || u >= g.n() || v < 0 || v >= g.n() || !g.has_edge(u, v)) {
        throw std::invalid_argument("edge_weight: (" + std::to_string(u) + "," +
                                    std::to_string(v) + ") is not an edge");
    }
    return EdcWeight{g.degree(u), g.degree(v)};
}

DsResult edc_ds_basic(const Graph& g) { return run_edc_ds(g, false); }

DsResult edc_ds_improved(const Graph& g) { return run_edc_ds(g, true); }

}  // namespace edcb
