#include "edcb/baselines.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace edcb {

namespace {

// Closed/open neighborhoods as word-packed bitsets; n stays small enough
// here that two or three words cover the benchmark graphs.
struct NeighborhoodMasks {
    std::size_t words;
    std::vector<std::uint64_t> open;    // n * words
    std::vector<std::uint64_t> closed;  // n * words

    explicit NeighborhoodMasks(const Graph& g)
        : words((static_cast<std::size_t>(g.n()) + 63) / 64),
          open(static_cast<std::size_t>(g.n()) * words, 0),
          closed(static_cast<std::size_t>(g.n()) * words, 0) {
        for (NodeId v = 0; v < g.n(); ++v) {
            set(closed, v, v);
            for (NodeId u : g.neighbors(v)) {
                set(open, v, u);
                set(closed, v, u);
            }
        }
    }

    void set(std::vector<std::uint64_t>& m, NodeId row, NodeId bit) const {
        m[static_cast<std::size_t>(row) * words + static_cast<std::size_t>(bit) / 64] |=
            std::uint64_t{1} << (static_cast<std::size_t>(bit) % 64);
    }

    // open(v) ⊆ open(a) ∪ open(b)
    bool open_covered_by(NodeId v, NodeId a, NodeId b) const {
        for (std::size_t i = 0; i < words; ++i) {
            const std::uint64_t cover = open[static_cast<std::size_t>(a) * words + i] |
                                        open[static_cast<std::size_t>(b) * words + i];
            if (open[static_cast<std::size_t>(v) * words + i] & ~cover) return false;
        }
        return true;
    }

    // closed(v) ⊆ closed(a)
    bool closed_covered_by(NodeId v, NodeId a) const {
        for (std::size_t i = 0; i < words; ++i) {
            if (closed[static_cast<std::size_t>(v) * words + i] &
                ~closed[static_cast<std::size_t>(a) * words + i]) {
                return false;
            }
        }
        return true;
    }
};

// Marked set restricted to `comp` must still dominate the component and
// induce a connected subgraph; violations indicate a broken pruning step.
void assert_component_cds(const Graph& g, const std::vector<NodeId>& comp,
                          const std::vector<char>& marked) {
    std::vector<NodeId> local;
    for (NodeId v : comp) {
        if (marked[static_cast<std::size_t>(v)]) local.push_back(v);
    }
    for (NodeId v : comp) {
        if (marked[static_cast<std::size_t>(v)]) continue;
        bool covered = false;
        for (NodeId u : g.neighbors(v)) {
            if (marked[static_cast<std::size_t>(u)]) {
                covered = true;
                break;
            }
        }
        if (!covered) throw std::logic_error("wu_li_cds: pruning broke domination");
    }
    if (local.size() <= 1) return;
    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    std::vector<NodeId> stack{local.front()};
    seen[static_cast<std::size_t>(local.front())] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        NodeId x = stack.back();
        stack.pop_back();
        for (NodeId y : g.neighbors(x)) {
            if (marked[static_cast<std::size_t>(y)] && !seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = 1;
                ++reached;
                stack.push_back(y);
            }
        }
    }
    if (reached != local.size()) throw std::logic_error("wu_li_cds: pruning broke connectivity");
}

}  // namespace

std::vector<NodeId> greedy_ds(const Graph& g) {
    const int n = g.n();
    std::vector<char> covered(static_cast<std::size_t>(n), 0);
    int covered_count = 0;
    std::vector<NodeId> ds;
    while (covered_count < n) {
        int best_gain = -1;
        NodeId best = -1;
        for (NodeId v = 0; v < n; ++v) {
            int gain = covered[static_cast<std::size_t>(v)] ? 0 : 1;
            for (NodeId u : g.neighbors(v)) {
                if (!covered[static_cast<std::size_t>(u)]) ++gain;
            }
            if (gain > best_gain) {
                best_gain = gain;
                best = v;
            }
        }
        ds.push_back(best);
        if (!covered[static_cast<std::size_t>(best)]) {
            covered[static_cast<std::size_t>(best)] = 1;
            ++covered_count;
        }
        for (NodeId u : g.neighbors(best)) {
            if (!covered[static_cast<std::size_t>(u)]) {
                covered[static_cast<std::size_t>(u)] = 1;
                ++covered_count;
            }
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

std::vector<NodeId> wu_li_cds(const Graph& g) {
    const int n = g.n();
    NeighborhoodMasks masks(g);
    std::vector<char> marked(static_cast<std::size_t>(n), 0);

    // Marking phase: v keeps two neighbors that are not adjacent to each other.
    for (NodeId v = 0; v < n; ++v) {
        const auto& nbrs = g.neighbors(v);
        bool mark = false;
        for (std::size_t i = 0; i < nbrs.size() && !mark; ++i) {
            for (std::size_t j = i + 1; j < nbrs.size() && !mark; ++j) {
                if (!g.has_edge(nbrs[i], nbrs[j])) mark = true;
            }
        }
        marked[static_cast<std::size_t>(v)] = mark ? 1 : 0;
    }

    auto comps = connected_components(g);
    for (const auto& comp : comps) {
        for (NodeId v : comp) {
            if (!marked[static_cast<std::size_t>(v)]) continue;
            bool unmark = false;
            const auto& nbrs = g.neighbors(v);
            // Rule 1: a marked higher-id neighbor covers N[v].
            for (NodeId u : nbrs) {
                if (u > v && marked[static_cast<std::size_t>(u)] &&
                    masks.closed_covered_by(v, u)) {
                    unmark = true;
                    break;
                }
            }
            // Rule 2: two adjacent marked higher-id neighbors cover N(v).
            if (!unmark) {
                for (std::size_t i = 0; i < nbrs.size() && !unmark; ++i) {
                    const NodeId a = nbrs[i];
                    if (a < v || !marked[static_cast<std::size_t>(a)]) continue;
                    for (std::size_t j = i + 1; j < nbrs.size() && !unmark; ++j) {
                        const NodeId b = nbrs[j];
                        if (b < v || !marked[static_cast<std::size_t>(b)]) continue;
                        if (g.has_edge(a, b) && masks.open_covered_by(v, a, b)) unmark = true;
                    }
                }
            }
            if (unmark) {
                marked[static_cast<std::size_t>(v)] = 0;
                assert_component_cds(g, comp, marked);
            }
        }
    }

    std::vector<NodeId> result;
    for (const auto& comp : comps) {
        bool any = false;
        for (NodeId v : comp) {
            if (marked[static_cast<std::size_t>(v)]) {
                result.push_back(v);
                any = true;
            }
        }
        if (!any) result.push_back(comp.front());  // complete component fallback
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<NodeId> das_cds(const Graph& g) {
    const int n = g.n();
    std::vector<char> covered(static_cast<std::size_t>(n), 0);
    std::vector<char> in_set(static_cast<std::size_t>(n), 0);
    std::vector<NodeId> result;

    for (const auto& comp : connected_components(g)) {
        NodeId seed = comp.front();
        for (NodeId v : comp) {
            if (g.degree(v) > g.degree(seed)) seed = v;  // ties keep the smaller id
        }
        auto add = [&](NodeId v) {
            in_set[static_cast<std::size_t>(v)] = 1;
            result.push_back(v);
            if (!covered[static_cast<std::size_t>(v)]) covered[static_cast<std::size_t>(v)] = 1;
            for (NodeId u : g.neighbors(v)) covered[static_cast<std::size_t>(u)] = 1;
        };
        add(seed);

        auto component_dominated = [&]() {
            for (NodeId v : comp) {
                if (!covered[static_cast<std::size_t>(v)]) return false;
            }
            return true;
        };

        while (!component_dominated()) {
            int best_gain = -1;
            NodeId best = -1;
            for (NodeId v : comp) {
                if (in_set[static_cast<std::size_t>(v)]) continue;
                bool adjacent_to_set = false;
                for (NodeId u : g.neighbors(v)) {
                    if (in_set[static_cast<std::size_t>(u)]) {
                        adjacent_to_set = true;
                        break;
                    }
                }
                if (!adjacent_to_set) continue;
                int gain = covered[static_cast<std::size_t>(v)] ? 0 : 1;
                for (NodeId u : g.neighbors(v)) {
                    if (!covered[static_cast<std::size_t>(u)]) ++gain;
                }
                if (gain > best_gain) {
                    best_gain = gain;
                    best = v;
                }
            }
            add(best);
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

}  // namespace edcb
