#include "edcb/geo.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace edcb {

std::uint64_t SplitMix64::next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double SplitMix64::next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::uint64_t mix64(std::uint64_t x) {
    return SplitMix64(x).next();
}

GeoGraph generate_udg(int n, double radius, double area_side, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("generate_udg: negative node count");
    if (!(radius > 0.0)) throw std::invalid_argument("generate_udg: radius must be > 0");
    if (!(area_side > 0.0)) throw std::invalid_argument("generate_udg: area_side must be > 0");
    GeoGraph geo;
    geo.radius = radius;
    geo.area_side = area_side;
    geo.seed = seed;
    geo.positions.reserve(static_cast<std::size_t>(n));
    SplitMix64 rng(seed);
    for (int i = 0; i < n; ++i) {
        double x = rng.next_unit() * area_side;
        double y = rng.next_unit() * area_side;
        // Rounding of u * area_side can land exactly on the open bound.
        if (x >= area_side) x = std::nextafter(area_side, 0.0);
        if (y >= area_side) y = std::nextafter(area_side, 0.0);
        geo.positions.emplace_back(x, y);
    }
    return geo;
}

GeoGraph geo_from_positions(std::vector<std::pair<double, double>> positions,
                            double radius, double area_side) {
    if (!(radius > 0.0)) throw std::invalid_argument("geo_from_positions: radius must be > 0");
    if (!(area_side > 0.0)) throw std::invalid_argument("geo_from_positions: area_side must be > 0");
    for (std::size_t i = 0; i < positions.size(); ++i) {
        const auto& [x, y] = positions[i];
        if (!(x >= 0.0) || !(y >= 0.0) || x >= area_side || y >= area_side) {
            throw std::invalid_argument("geo_from_positions: node " + std::to_string(i) +
                                        " lies outside [0, area_side)^2");
        }
    }
    GeoGraph geo;
    geo.positions = std::move(positions);
    geo.radius = radius;
    geo.area_side = area_side;
    geo.seed = 0;
    return geo;
}

Graph induced_graph(const GeoGraph& geo) {
    const int n = geo.n();
    const double r2 = geo.radius * geo.radius;
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const double dx = geo.positions[static_cast<std::size_t>(u)].first -
                              geo.positions[static_cast<std::size_t>(v)].first;
            const double dy = geo.positions[static_cast<std::size_t>(u)].second -
                              geo.positions[static_cast<std::size_t>(v)].second;
            // Squared comparison keeps the boundary case exact.
            if (dx * dx + dy * dy <= r2) edges.emplace_back(u, v);
        }
    }
    return build_graph(n, edges);
}

}  // namespace edcb
