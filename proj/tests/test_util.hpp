#pragma once

#include <ehrhart_lab/geometry.hpp>

#include <initializer_list>
#include <vector>

namespace test_util {

using ehrhart_lab::Point2;
using ehrhart_lab::Rational;
using ehrhart_lab::RationalPolygon;
using ehrhart_lab::rat;

inline Point2 pt(const Rational& x, const Rational& y) { return Point2{x, y}; }

inline RationalPolygon poly(std::initializer_list<Point2> pts) {
    return ehrhart_lab::make_polygon(std::vector<Point2>(pts));
}

// The quadrilateral PIP with one interior and two boundary points.
inline RationalPolygon b2_quad() {
    return poly({pt(0, 0), pt(2, 0), pt(1, rat(1, 2)), pt(1, rat(-1, 2))});
}

// The boundary-count-1 triangle PIP at interior count 1.
inline RationalPolygon b1_triangle() {
    return poly({pt(0, -1), pt(rat(1, 3), rat(2, 3)), pt(rat(-1, 3), rat(1, 3))});
}

// The pseudo-reflexive triangle (origin interior, integral dual).
inline RationalPolygon pseudo_reflexive_triangle() {
    return poly({pt(0, -1), pt(rat(1, 3), rat(1, 3)), pt(rat(-1, 3), rat(2, 3))});
}

inline RationalPolygon unit_square() { return poly({pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)}); }

inline RationalPolygon diamond() { return poly({pt(1, 0), pt(0, 1), pt(-1, 0), pt(0, -1)}); }

} // namespace test_util
