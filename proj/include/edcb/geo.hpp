#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "edcb/graph.hpp"

namespace edcb {

/// Deterministic 64-bit generator (splitmix64). The state advances by the
/// golden-ratio gamma and is finalized with the standard mixing constants,
/// so identical seeds give identical streams on every platform. The full
/// recipe is documented in the README.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();

    /// Uniform double in [0, 1) with 53 bits of precision.
    double next_unit();

private:
    std::uint64_t state_;
};

/// One splitmix64 step applied to x as the state. Used as the mixing
/// primitive for per-trial seed derivation.
std::uint64_t mix64(std::uint64_t x);

/// Node positions plus a uniform transmission radius; the unit-disk graph is
/// induced by the "distance no more than radius" rule.
struct GeoGraph {
    std::vector<std::pair<double, double>> positions;
    double radius = 0.0;
    double area_side = 0.0;
    std::uint64_t seed = 0;

    int n() const { return static_cast<int>(positions.size()); }
};

/// Positions drawn i.i.d. uniform over [0, area_side)^2, exactly two draws
/// per node in id order (x first, then y). Fully determined by the seed.
GeoGraph generate_udg(int n, double radius, double area_side, std::uint64_t seed);

/// GeoGraph over caller-supplied positions (used by tests and the JSON
/// loader). Positions must lie in [0, area_side)^2.
GeoGraph geo_from_positions(std::vector<std::pair<double, double>> positions,
                            double radius, double area_side);

/// Edge (u,v) iff squared distance <= radius^2; the boundary case, distance
/// exactly equal to the radius, produces an edge.
Graph induced_graph(const GeoGraph& geo);

}  // namespace edcb
