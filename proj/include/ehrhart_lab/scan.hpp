#pragma once

#include "ehrhart_lab/geometry.hpp"

#include <array>
#include <string>
#include <vector>

namespace ehrhart_lab {

struct PipScanOptions {
    long max_denominator = 4;  // vertices on the (1/d)-grid, d up to this
    long coordinate_bound = 3; // vertices in [-bound, bound]^2
    long dilate_bound = 12;    // extra verification depth (3*D minimum applies)
    int max_vertices = 3;      // 3 = triangles only; larger values get expensive fast
    bool include_integral = false;
};

struct PipScanRow {
    long interior = 0;
    long boundary = 0;
    RationalPolygon polygon;   // translated so the bounding-box corner is in [0,1)^2
    std::vector<long> key;     // canonical vertices scaled to integers, flattened
};

// Every polygon with quasi-period 1 found among grid candidates, one row per
// translation class, sorted by (interior, boundary, key). A candidate counts
// as a PIP when its lattice counts match A n^2 + (b/2) n + 1 for all
// n <= max(3 D, dilate_bound), which is equivalent to the fitted test.
std::vector<PipScanRow> pip_scan(const PipScanOptions& opt);

// CSV with header "I,b,vertices"; vertices as "x y" pairs joined by ';'.
std::string pip_scan_csv(const PipScanOptions& opt);

// The count-based quasi-period-1 test used by the scan, usable on its own as
// a second route alongside the fitted quasi-polynomial.
bool pip_counts_match_polynomial(const RationalPolygon& p, long dilate_bound);

struct ScottMapRow {
    long interior = 0;
    long boundary = 0;
    bool realizable_integral = false; // admissibility predicate, no extension
    bool realizable_pip_known = false; // predicate with the b in {1,2} extension
};

// Grid (I, b) in [0, max_interior] x [0, max_boundary], row-major.
std::vector<ScottMapRow> scott_map(long max_interior, long max_boundary);

// CSV "I,b,realizable_integral[,realizable_pip_known]" with 0/1 flags.
std::string scott_map_csv(long max_interior, long max_boundary, bool include_pips);

// All (interior, boundary) pairs with interior <= max_interior realized by
// convex integral polygons with at most max_boundary boundary points inside a
// max_bbox x max_bbox box. Pick's theorem caps the search at twice-area
// 2*max_interior + max_boundary - 2, which keeps the enumeration tractable.
// Sorted and deduplicated.
std::vector<std::array<long, 2>> realized_integral_pairs(long max_interior, long max_boundary,
                                                         long max_bbox);

} // namespace ehrhart_lab
