#pragma once

#include "ehrhart_lab/geometry.hpp"
#include "ehrhart_lab/region.hpp"

#include <array>
#include <vector>

namespace ehrhart_lab {

struct BoundaryInteriorCounts {
    long long boundary = 0;
    long long interior = 0;
};

// Exact count of integer points in the closed dilate nP by column scan:
// for each integer x in the dilate's x-range the rational y-interval is
// intersected out of the edges and contributes floor(ymax) - ceil(ymin) + 1.
long long count_lattice_points(const RationalPolygon& p, long n);

// Independent oracle: tests every lattice point of the bounding box with
// locate-style half-plane sign tests. Deliberately a different algorithm.
long long oracle_count(const RationalPolygon& p, long n);

// Boundary counted edge-by-edge as half-open [u, v) so vertices land exactly
// once; interior = total - boundary.
BoundaryInteriorCounts boundary_interior(const RationalPolygon& p);

long long count_segment(const Segment& s, long n);

long long count_region(const RegionExpression& e, long n);

namespace kernel {

using ScaledVertex = std::array<long long, 2>;

/// |{z in Z^2 : m z in n W}| for an integer CCW polygon W. This equals the
// lattice count of (1/m) W at dilation n. Requires n * max|coord of W| and m
// to stay below the int64 cross-multiplication guard; check fits() first.
long long scaled_count(const std::vector<ScaledVertex>& w, long long m, long long n);
bool scaled_count_fits(const std::vector<ScaledVertex>& w, long long m, long long n);

// Scale a rational polygon to integer vertices (multiplied by the
// denominator lcm m). Returns false when coordinates exceed int64.
bool scale_to_int64(const RationalPolygon& p, std::vector<ScaledVertex>& w, long long& m);

} // namespace kernel

} // namespace ehrhart_lab
