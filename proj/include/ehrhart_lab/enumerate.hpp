#pragma once

#include <array>
#include <functional>
#include <vector>

namespace ehrhart_lab {

// A convex lattice polygon produced by the enumerator, translated so its
// bounding box has min corner (0, 0). Vertices are in counterclockwise
// order; boundary/interior counts come from primitive edge steps and Pick.
struct LatticePolygonSummary {
    std::vector<std::array<long, 2>> vertices;
    long twice_area = 0;
    long boundary = 0;
    long interior = 0;
    long width = 0;
    long height = 0;
};

struct EnumBounds {
    long max_boundary = 0;   // sum of primitive edge steps, must be >= 3
    long exact_boundary = 0; // when > 0, require the sum to equal this
    long max_width = 0;      // bounding box bounds, must be >= 1
    long max_height = 0;
    long max_twice_area = 0; // when > 0, require 2*area <= this
};

// Enumerate every convex lattice polygon (up to translation) within the
// bounds, as zero-sum multisets of primitive edge vectors taken in angular
// order. Deterministic order; the callback returns false to stop early.
void enumerate_lattice_polygons(const EnumBounds& bounds,
                                const std::function<bool(const LatticePolygonSummary&)>& visit);

} // namespace ehrhart_lab
