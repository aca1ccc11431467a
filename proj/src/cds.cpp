#include "edcb/cds.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace edcb {

namespace {

// Label-setting search over (cost, hops, id sequence). Extending a path
// strictly increases the label and preserves the order, so nodes settle in
// nondecreasing label order and the first settled tree node is optimal.
struct PathLabel {
    int cost;
    int hops;
    std::vector<NodeId> seq;  // path so far, excluding the start node

    bool operator>(const PathLabel& o) const {
        if (cost != o.cost) return cost > o.cost;
        if (hops != o.hops) return hops > o.hops;
        return seq > o.seq;
    }
};

std::vector<NodeId> connector_path_masked(const Graph& g, const std::vector<char>& in_dprime,
                                          NodeId from, const std::vector<char>& in_tree) {
    if (in_tree[static_cast<std::size_t>(from)]) return {};

    using QueueEntry = std::pair<PathLabel, NodeId>;
    auto cmp = [](const QueueEntry& a, const QueueEntry& b) {
        if (a.first.cost != b.first.cost) return a.first.cost > b.first.cost;
        if (a.first.hops != b.first.hops) return a.first.hops > b.first.hops;
        if (a.first.seq != b.first.seq) return a.first.seq > b.first.seq;
        return a.second > b.second;
    };
    std::priority_queue<QueueEntry, std::vector<QueueEntry>, decltype(cmp)> pq(cmp);
    std::vector<char> settled(static_cast<std::size_t>(g.n()), 0);

    settled[static_cast<std::size_t>(from)] = 1;
    for (NodeId y : g.neighbors(from)) {
        PathLabel label{in_dprime[static_cast<std::size_t>(y)] ? 0 : 1, 1, {y}};
        pq.emplace(std::move(label), y);
    }

    while (!pq.empty()) {
        auto [label, node] = pq.top();
        pq.pop();
        if (settled[static_cast<std::size_t>(node)]) continue;
        settled[static_cast<std::size_t>(node)] = 1;
        if (in_tree[static_cast<std::size_t>(node)]) return label.seq;
        for (NodeId y : g.neighbors(node)) {
            if (settled[static_cast<std::size_t>(y)]) continue;
            PathLabel next{label.cost + (in_dprime[static_cast<std::size_t>(y)] ? 0 : 1),
                           label.hops + 1, label.seq};
            next.seq.push_back(y);
            pq.emplace(std::move(next), y);
        }
    }
    throw std::runtime_error("connector_path: no path from node " + std::to_string(from) +
                             " to the target tree");
}

std::vector<char> make_mask(const Graph& g, const std::vector<NodeId>& nodes, const char* what) {
    std::vector<char> mask(static_cast<std::size_t>(g.n()), 0);
    for (NodeId v : nodes) {
        if (v < 0 || v >= g.n()) {
            throw std::invalid_argument(std::string(what) + ": node id " + std::to_string(v) +
                                        " out of range");
        }
        mask[static_cast<std::size_t>(v)] = 1;
    }
    return mask;
}

}  // namespace

std::vector<NodeId> connector_path(const Graph& g, const std::vector<NodeId>& dprime,
                                   NodeId from, const std::vector<NodeId>& target_tree) {
    if (target_tree.empty()) throw std::invalid_argument("connector_path: empty target tree");
    auto in_dprime = make_mask(g, dprime, "connector_path");
    auto in_tree = make_mask(g, target_tree, "connector_path");
    if (from < 0 || from >= g.n() || !in_dprime[static_cast<std::size_t>(from)]) {
        throw std::invalid_argument("connector_path: from node must belong to dprime");
    }
    return connector_path_masked(g, in_dprime, from, in_tree);
}

CdsResult edc_cds(const Graph& g, const std::vector<NodeId>& ds) {
    if (!is_dominating_set(g, ds)) {
        throw std::invalid_argument("edc_cds: input set is not a dominating set");
    }
    const int n = g.n();
    auto in_dprime = make_mask(g, ds, "edc_cds");
    std::vector<char> is_input(in_dprime);
    std::vector<char> in_tree(static_cast<std::size_t>(n), 0);

    CdsResult result;

    // Flood over D'-member nodes starting from `seeds`, marking in_tree.
    auto grow_tree = [&](std::vector<NodeId> seeds) {
        std::queue<NodeId> q;
        for (NodeId s : seeds) {
            if (!in_tree[static_cast<std::size_t>(s)]) {
                in_tree[static_cast<std::size_t>(s)] = 1;
                q.push(s);
            }
        }
        while (!q.empty()) {
            NodeId x = q.front();
            q.pop();
            for (NodeId y : g.neighbors(x)) {
                if (in_dprime[static_cast<std::size_t>(y)] && !in_tree[static_cast<std::size_t>(y)]) {
                    in_tree[static_cast<std::size_t>(y)] = 1;
                    q.push(y);
                }
            }
        }
    };

    for (const auto& comp : connected_components(g)) {
        std::vector<NodeId> comp_doms;
        for (NodeId v : comp) {
            if (is_input[static_cast<std::size_t>(v)]) comp_doms.push_back(v);
        }
        if (comp_doms.empty()) {
            // Unreachable when the precondition holds; kept as a hard error.
            throw std::invalid_argument("edc_cds: component without a dominator");
        }
        const NodeId root = comp_doms.front();
        result.roots.push_back(root);
        grow_tree({root});

        for (std::size_t i = 1; i < comp_doms.size(); ++i) {
            const NodeId v = comp_doms[i];
            if (in_tree[static_cast<std::size_t>(v)]) continue;
            auto path = connector_path_masked(g, in_dprime, v, in_tree);
            for (NodeId w : path) {
                if (!in_dprime[static_cast<std::size_t>(w)]) {
                    in_dprime[static_cast<std::size_t>(w)] = 1;
                    result.connectors.push_back(w);
                }
            }
            grow_tree({v});
        }

        ComponentCds entry;
        entry.component = comp;
        entry.root = root;
        for (NodeId v : comp) {
            if (in_dprime[static_cast<std::size_t>(v)]) entry.local_cds.push_back(v);
        }
        result.per_component.push_back(std::move(entry));
    }

    for (NodeId v = 0; v < n; ++v) {
        if (in_dprime[static_cast<std::size_t>(v)]) result.cds.push_back(v);
    }
    std::sort(result.connectors.begin(), result.connectors.end());
    std::sort(result.roots.begin(), result.roots.end());
    return result;
}

}  // namespace edcb
