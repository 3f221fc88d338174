#pragma once

#include "ehrhart_lab/ehrhart.hpp"
#include "ehrhart_lab/geometry.hpp"
#include "ehrhart_lab/pz_morphism.hpp"
#include "ehrhart_lab/region.hpp"

#include <variant>
#include <vector>

namespace ehrhart_lab {

struct CountClaim {
    long interior = 0;
    long boundary = 0;

    bool operator==(const CountClaim&) const = default;
};

struct PeriodClaim {
    long s0 = 1, s1 = 1, s2 = 1;

    bool operator==(const PeriodClaim&) const = default;
};

using ConstructionClaim = std::variant<CountClaim, PeriodClaim>;

// Construct-then-check: `verified` is set by re-deriving the claim from the
// polygon itself (counts, Pick defect, quasi-period, fitted periods).
struct ConstructionCertificate {
    RationalPolygon polygon;
    ConstructionClaim claim;
    bool verified = false;
};

// Integral polygon with exactly (interior, boundary) lattice points, found
// by exhaustive search over lattice polygons with bounding box side growing
// up to max_bbox (default interior + boundary). Deterministic first hit.
RationalPolygon scott_polygon(long interior, long boundary);
RationalPolygon scott_polygon(long interior, long boundary, long max_bbox);

// Quadrilateral PIP with boundary count 2 and the given interior count.
ConstructionCertificate pip_b2(long interior);

// Triangle PIP with boundary count 1 and the given interior count.
ConstructionCertificate pip_b1(long interior);

// The four stages T1, T2, T3, P of the skew-transformation pipeline carrying
// the semi-open lattice triangle T1 to the boundary-count-1 triangle.
std::vector<RegionExpression> pip_b1_pipeline(long interior);

struct HeptagonDecomposition {
    RationalPolygon R;   // rectangle conv{t1, t2, u2, u1}
    RationalPolygon T1;  // conv{u1, v1, w}
    RationalPolygon T2;  // conv{u2, v2, w}
    RationalPolygon T3;  // conv{u1, u2, w}
    PiecewiseSkewMap U1; // fixed line u1 w, '+' side
    PiecewiseSkewMap U2; // fixed line u2 w, '-' side
};

struct HeptagonResult {
    RationalPolygon H;
    HeptagonDecomposition parts;
};

// Heptagon with period sequence (1, s, 1), plus the pieces and skew maps of
// its rearrangement into R united with conv{u1, u2, (s,0)}.
HeptagonResult heptagon_H(long s);

// Triangle with period sequence (r, 1, 1), translated by a lattice anchor.
RationalPolygon triangle_Q(long r, const Point2& anchor);

// Polygon with period sequence (r, s, 1). For r, s >= 2 this is the convex
// union of heptagon_H(s) and triangle_Q(r, u1) glued along the edge u1 v1;
// the degenerate axes fall back to the single-parameter families.
ConstructionCertificate period_polygon(long r, long s);

} // namespace ehrhart_lab
