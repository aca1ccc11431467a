#pragma once

#include <json.hpp>

#include "edcb/cds.hpp"
#include "edcb/edc.hpp"
#include "edcb/geo.hpp"
#include "edcb/graph.hpp"

namespace edcb {

/// ordered_json keeps insertion order, so documents always serialize with the
/// canonical key order: n, radius, area_side, positions, edges.
using json = nlohmann::ordered_json;

/// Abstract graph document: geometric fields are null, edges are the
/// normalized pairs in lexicographic order.
json graph_to_json(const Graph& g);

/// Geometric graph document carrying positions, radius and area_side; the
/// edge list is the induced unit-disk graph's.
json geo_graph_to_json(const GeoGraph& geo);

/// Reads the canonical graph document. Only n and edges are consulted; the
/// geometric fields may be null. Throws std::invalid_argument on a document
/// that is missing fields, has the wrong types, or encodes an invalid graph.
Graph graph_from_json(const json& doc);

json ds_result_to_json(const DsResult& result);

/// Keys: cds, connectors, roots, components (the component count).
json cds_result_to_json(const CdsResult& result);

}  // namespace edcb
