#pragma once

#include <vector>

#include "edcb/graph.hpp"

namespace edcb {

/// Largest graph the exact oracles will enumerate.
inline constexpr int kOracleNodeLimit = 24;

struct OracleResult {
    std::vector<NodeId> opt_set;  // lexicographically smallest optimum
    int opt_size = 0;
    bool exhaustive = false;      // full enumeration completed
};

/// Exact minimum dominating set by increasing-cardinality subset enumeration.
/// Because sizes below the returned one were exhausted first, the result
/// carries its own minimality certificate. Throws std::invalid_argument when
/// n exceeds kOracleNodeLimit.
OracleResult min_ds_exact(const Graph& g);

/// Exact minimum connected dominating set; requires a connected graph.
OracleResult min_cds_exact(const Graph& g);

struct RatioCheck {
    double bound = 0.0;
    bool holds = false;
    bool applicable = false;
    int opt_size = 0;
};

/// DS approximation bound (ln(max_degree + 1) + 1) * |opt| against the given
/// algorithm output size. Requires max_degree >= 1.
RatioCheck check_ds_ratio(const Graph& g, int algo_size);

/// CDS approximation bound (ln(max_degree - 1) + 1) * |opt|. Only meaningful
/// for max_degree >= 3; below that the check reports applicable = false and
/// asserts nothing.
RatioCheck check_cds_ratio(const Graph& g, int algo_size);

}  // namespace edcb
