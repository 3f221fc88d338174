#pragma once

#include "ehrhart_lab/geometry.hpp"
#include "ehrhart_lab/region.hpp"

namespace ehrhart_lab {

// Direction data of a nonzero rational vector r: the primitive integer
// generator r_p of its ray and the lattice length lambda = gcd(a, c) /
// lcm(b, d) for r = (a/b, c/d) in lowest terms, so that r = lambda r_p.
struct LatticeDirection {
    Point2 r;
    Point2 r_p;
    Rational lambda;
};

enum class SkewSign { Plus, Minus };

// One-sided skew map along the fixed line through the lattice base u and the
// target v. With r = v - u: the '+' map applies U_r to the side where
// cross(r, x - u) >= 0; the '-' map applies U_r^{-1} to the side where
// cross(r, x - u) <= 0. The other side is left alone, the line itself is
// fixed pointwise, and the exponent k means k-fold composition.
struct PiecewiseSkewMap {
    Point2 u;
    Point2 v;
    SkewSign sign = SkewSign::Plus;
    long k = 1;
};

// The linear map U_r^± (fixed line through the origin, spanned by r).
PiecewiseSkewMap linear_skew(const Point2& r, SkewSign sign, long k = 1);

LatticeDirection lattice_length(const Point2& r);

// Matrix of U_r(x) = x + det(r, x) r / lambda(r)^2. Unimodular, fixes the
// ray of r pointwise, and depends only on that ray.
Mat2 skew_matrix(const Point2& r);

// Split the input along the fixed line, transform the designated side, and
// return both pieces plus a -1 term for the shared on-line segment so every
// lattice point is counted exactly once. Expressions are mapped termwise.
RegionExpression apply_piecewise(const RationalPolygon& p, const PiecewiseSkewMap& map);
RegionExpression apply_piecewise(const RegionExpression& e, const PiecewiseSkewMap& map);

// Conjugation of the linear U_{v-u}^± by the translation taking u to the
// origin; requires u integral.
RegionExpression apply_affine_piecewise(const RationalPolygon& p, const Point2& u,
                                        const Point2& v, SkewSign sign, long k);
RegionExpression apply_affine_piecewise(const RegionExpression& e, const Point2& u,
                                        const Point2& v, SkewSign sign, long k);

} // namespace ehrhart_lab
