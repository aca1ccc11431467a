#include "edcb/json_io.hpp"

#include <stdexcept>
#include <string>

namespace edcb {

namespace {

json edge_list_to_json(const std::vector<Edge>& edges) {
    json arr = json::array();
    for (const Edge& e : edges) {
        arr.push_back(json::array({e.first, e.second}));
    }
    return arr;
}

[[noreturn]] void malformed(const std::string& what) {
    throw std::invalid_argument("graph document: " + what);
}

}  // namespace

json graph_to_json(const Graph& g) {
    json doc;
    doc["n"] = g.n();
    doc["radius"] = nullptr;
    doc["area_side"] = nullptr;
    doc["positions"] = nullptr;
    doc["edges"] = edge_list_to_json(g.edges());
    return doc;
}

json geo_graph_to_json(const GeoGraph& geo) {
    json doc;
    doc["n"] = geo.n();
    doc["radius"] = geo.radius;
    doc["area_side"] = geo.area_side;
    json positions = json::array();
    for (const auto& [x, y] : geo.positions) {
        positions.push_back(json::array({x, y}));
    }
    doc["positions"] = positions;
    doc["edges"] = edge_list_to_json(induced_graph(geo).edges());
    return doc;
}

Graph graph_from_json(const json& doc) {
    if (!doc.is_object()) malformed("top level must be an object");
    if (!doc.contains("n") || !doc["n"].is_number_integer()) {
        malformed("\"n\" must be an integer");
    }
    const int n = doc["n"].get<int>();
    if (n < 0) malformed("\"n\" must be >= 0");
    if (!doc.contains("edges") || !doc["edges"].is_array()) {
        malformed("\"edges\" must be an array");
    }
    std::vector<Edge> edges;
    edges.reserve(doc["edges"].size());
    for (const json& e : doc["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer()) {
            malformed("every edge must be a pair of integers");
        }
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return build_graph(n, edges);
}

json ds_result_to_json(const DsResult& result) {
    json doc;
    doc["algorithm"] = result.algorithm;
    doc["dominators"] = result.dominators;
    doc["dominant_edges"] = edge_list_to_json(result.dominant_edges);
    doc["iterations"] = result.iterations;
    json trace = json::array();
    for (const DsIteration& it : result.trace) {
        json entry;
        entry["dominant_edges"] = edge_list_to_json(it.dominant_edges);
        entry["dominators"] = it.dominators;
        entry["undominated_after"] = it.undominated_after;
        trace.push_back(std::move(entry));
    }
    doc["trace"] = std::move(trace);
    return doc;
}

json cds_result_to_json(const CdsResult& result) {
    json doc;
    doc["cds"] = result.cds;
    doc["connectors"] = result.connectors;
    doc["roots"] = result.roots;
    doc["components"] = result.per_component.size();
    return doc;
}

}  // namespace edcb
