#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "edcb/cds.hpp"
#include "edcb/edc.hpp"
#include "edcb/geo.hpp"
#include "edcb/graph.hpp"

using namespace edcb;

namespace {

Graph path(int n) {
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return build_graph(n, edges);
}

// Reference search: enumerate every simple path from `from` that stops at its
// first tree node, rank by (connector cost, hops, id sequence), return the
// minimum. Exponential, only for tiny graphs.
struct PathOracle {
    const Graph& g;
    const std::set<NodeId> dprime;
    const std::set<NodeId> tree;
    std::vector<NodeId> current;
    std::vector<char> used;
    std::tuple<int, int, std::vector<NodeId>> best;
    bool found = false;

    PathOracle(const Graph& graph, const std::vector<NodeId>& dp,
               const std::vector<NodeId>& tr)
        : g(graph), dprime(dp.begin(), dp.end()), tree(tr.begin(), tr.end()),
          used(static_cast<std::size_t>(graph.n()), 0) {}

    void extend(NodeId node, int cost) {
        for (NodeId y : g.neighbors(node)) {
            if (used[static_cast<std::size_t>(y)]) continue;
            const int ycost = cost + (dprime.count(y) ? 0 : 1);
            current.push_back(y);
            if (tree.count(y)) {
                std::tuple<int, int, std::vector<NodeId>> cand{
                    ycost, static_cast<int>(current.size()), current};
                if (!found || cand < best) {
                    best = cand;
                    found = true;
                }
            } else {
                used[static_cast<std::size_t>(y)] = 1;
                extend(y, ycost);
                used[static_cast<std::size_t>(y)] = 0;
            }
            current.pop_back();
        }
    }

    std::vector<NodeId> run(NodeId from) {
        used[static_cast<std::size_t>(from)] = 1;
        extend(from, 0);
        REQUIRE(found);
        return std::get<2>(best);
    }
};

}  // namespace

TEST_CASE("path of five pipeline: one connector joins the two dominators") {
    const Graph g = path(5);
    const DsResult ds = edc_ds_improved(g);
    REQUIRE(ds.dominators == std::vector<NodeId>{1, 3});

    const CdsResult result = edc_cds(g, ds.dominators);
    CHECK(result.cds == std::vector<NodeId>{1, 2, 3});
    CHECK(result.connectors == std::vector<NodeId>{2});
    CHECK(result.roots == std::vector<NodeId>{1});
    REQUIRE(result.per_component.size() == 1);
    CHECK(result.per_component[0].root == 1);
    CHECK(result.per_component[0].local_cds == std::vector<NodeId>{1, 2, 3});
    CHECK(is_connected_dominating_set(g, result.cds));

    CHECK(connector_path(g, {1, 3}, 3, {1}) == std::vector<NodeId>{2, 1});
}

TEST_CASE("already-connected dominating sets gain nothing") {
    const Graph p4 = path(4);
    const CdsResult r = edc_cds(p4, {1, 2});
    CHECK(r.cds == std::vector<NodeId>{1, 2});
    CHECK(r.connectors.empty());
    CHECK(r.roots == std::vector<NodeId>{1});

    const Graph star = build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    const CdsResult s = edc_cds(star, {0});
    CHECK(s.cds == std::vector<NodeId>{0});
    CHECK(s.connectors.empty());
}

TEST_CASE("connector_path basics") {
    const Graph p4 = path(4);
    // From adjacent to the tree: a single tree node, zero connectors.
    CHECK(connector_path(p4, {1, 2}, 2, {1}) == std::vector<NodeId>{1});
    // From already inside the tree: empty path.
    CHECK(connector_path(p4, {1, 2}, 1, {1}) == std::vector<NodeId>{});

    CHECK_THROWS_AS(connector_path(p4, {1, 2}, 1, {}), std::invalid_argument);
    CHECK_THROWS_AS(connector_path(p4, {1, 2}, 0, {1}), std::invalid_argument);
    CHECK_THROWS_AS(connector_path(p4, {1, 9}, 1, {2}), std::invalid_argument);

    const Graph split = build_graph(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(connector_path(split, {0, 2}, 0, {2}), std::runtime_error);
}

TEST_CASE("equal-cost paths break ties lexicographically") {
    // Diamond: 0 reaches 3 through 1 or through 2 at cost 1 either way.
    const Graph diamond = build_graph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    CHECK(connector_path(diamond, {0, 3}, 0, {3}) == std::vector<NodeId>{1, 3});

    // Same shape with the middles labeled 5 and 7: the path through 5 wins.
    const Graph wide = build_graph(8, {{0, 5}, {0, 7}, {3, 5}, {3, 7}});
    CHECK(connector_path(wide, {0, 3}, 0, {3}) == std::vector<NodeId>{5, 3});
}

TEST_CASE("equal-cost paths prefer fewer hops") {
    // Both routes pay only for entering node 4; the two-hop one wins.
    const Graph g = build_graph(5, {{0, 1}, {1, 4}, {0, 2}, {2, 3}, {3, 4}});
    CHECK(connector_path(g, {0, 1, 2, 3}, 0, {4}) == std::vector<NodeId>{1, 4});
}

TEST_CASE("zero-cost detours beat shorter expensive paths") {
    // 0-1-5 pays a connector plus the terminal; the dprime walk pays only
    // the terminal despite taking four hops.
    const Graph g = build_graph(6, {{0, 1}, {1, 5}, {0, 2}, {2, 3}, {3, 4}, {4, 5}});
    CHECK(connector_path(g, {0, 2, 3, 4}, 0, {5}) ==
          std::vector<NodeId>{2, 3, 4, 5});
}

TEST_CASE("connector_path matches exhaustive path enumeration") {
    SplitMix64 rng(4242);
    int rounds = 0;
    for (std::uint64_t seed = 0; rounds < 60 && seed < 600; ++seed) {
        const int n = 5 + static_cast<int>(seed % 5);
        const Graph g = induced_graph(generate_udg(n, 55.0, 100.0, seed + 31));
        if (connected_components(g).size() != 1) continue;

        // Random dprime containing `from`; random disjoint tree node.
        const NodeId from = static_cast<NodeId>(rng.next() % static_cast<std::uint64_t>(n));
        NodeId target = static_cast<NodeId>(rng.next() % static_cast<std::uint64_t>(n));
        if (target == from) target = (target + 1) % n;
        std::vector<NodeId> dprime{from};
        for (NodeId v = 0; v < n; ++v) {
            if (v != target && rng.next() % 2 == 0 &&
                !std::binary_search(dprime.begin(), dprime.end(), v)) {
                dprime.push_back(v);
                std::sort(dprime.begin(), dprime.end());
            }
        }

        const auto got = connector_path(g, dprime, from, {target});
        PathOracle oracle(g, dprime, {target});
        CHECK(got == oracle.run(from));
        ++rounds;
    }
    CHECK(rounds == 60);
}

TEST_CASE("pipeline on random connected graphs") {
    int rounds = 0;
    for (std::uint64_t seed = 0; rounds < 80 && seed < 800; ++seed) {
        const int n = 4 + static_cast<int>(seed % 40);
        const double r = seed % 2 == 0 ? 35.0 : 50.0;
        const Graph g = induced_graph(generate_udg(n, r, 100.0, seed + 555));
        if (connected_components(g).size() != 1) continue;

        const DsResult ds = edc_ds_improved(g);
        const CdsResult cds = edc_cds(g, ds.dominators);
        CHECK(is_connected_dominating_set(g, cds.cds));
        CHECK(cds.cds.size() >= ds.dominators.size());
        CHECK(std::includes(cds.cds.begin(), cds.cds.end(), ds.dominators.begin(),
                            ds.dominators.end()));
        for (NodeId c : cds.connectors) {
            CHECK_FALSE(std::binary_search(ds.dominators.begin(), ds.dominators.end(), c));
        }
        ++rounds;
    }
    CHECK(rounds == 80);
}

TEST_CASE("disconnected graphs are handled per component") {
    // Two paths of three; each side keeps its own root.
    const Graph g = build_graph(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
    const CdsResult r = edc_cds(g, {1, 4});
    CHECK(r.cds == std::vector<NodeId>{1, 4});
    CHECK(r.roots == std::vector<NodeId>{1, 4});
    REQUIRE(r.per_component.size() == 2);
    CHECK(r.per_component[0].component == std::vector<NodeId>{0, 1, 2});
    CHECK(r.per_component[1].root == 4);
    CHECK(is_cds_per_component(g, r.cds));

    // Dominators spread inside one component still get connected.
    const Graph two = build_graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {5, 6}, {6, 7}});
    const CdsResult s = edc_cds(two, {1, 3, 6});
    CHECK(s.cds == std::vector<NodeId>{1, 2, 3, 6});
    CHECK(s.connectors == std::vector<NodeId>{2});
    CHECK(s.roots == std::vector<NodeId>{1, 6});
    CHECK(is_cds_per_component(two, s.cds));
}

TEST_CASE("edc_cds rejects non-dominating input") {
    const Graph g = path(5);
    CHECK_THROWS_AS(edc_cds(g, {0}), std::invalid_argument);
    CHECK_THROWS_AS(edc_cds(g, {7}), std::invalid_argument);
}

TEST_CASE("results are deterministic") {
    const Graph g = induced_graph(generate_udg(30, 40.0, 100.0, 12));
    const DsResult ds = edc_ds_improved(g);
    const CdsResult a = edc_cds(g, ds.dominators);
    const CdsResult b = edc_cds(g, ds.dominators);
    CHECK(a.cds == b.cds);
    CHECK(a.connectors == b.connectors);
    CHECK(a.roots == b.roots);
}
