#pragma once

#include "ehrhart_lab/geometry.hpp"

#include <variant>
#include <vector>

namespace ehrhart_lab {

// Signed integer combination of closed polygons, segments, and points.
// Encodes semi-open regions (closed body minus half-open boundary pieces)
// and unions with shared edges; the lattice count of the expression is the
// multiplicity-weighted sum of the counts of the bodies.
using Body = std::variant<RationalPolygon, Segment, Point2>;

struct RegionTerm {
    long multiplicity = 1;
    Body body;
};

struct RegionExpression {
    std::vector<RegionTerm> terms;

    RegionExpression& add(long multiplicity, Body body) {
        terms.push_back(RegionTerm{multiplicity, std::move(body)});
        return *this;
    }
};

RegionExpression make_region(const RationalPolygon& p);

// Termwise image under an affine map (injective on each body).
RegionExpression apply(const Mat2& m, const RegionExpression& e);

// Split an expression along the oriented line through u with direction r:
// `pos` collects the parts with cross(r, x - u) >= 0, `neg` those with <= 0,
// and `correction` carries -1 terms for the on-line pieces shared by both
// sides, so that pos + neg + correction counts every point exactly once.
struct SplitExpression {
    RegionExpression pos;
    RegionExpression neg;
    RegionExpression correction;
};
SplitExpression split_expression(const RegionExpression& e, const Point2& u, const Point2& r);

RegionExpression concat(std::initializer_list<const RegionExpression*> parts);

} // namespace ehrhart_lab
