#include "ehrhart_lab/pz_morphism.hpp"

#include "ehrhart_lab/errors.hpp"

namespace ehrhart_lab {

PiecewiseSkewMap linear_skew(const Point2& r, SkewSign sign, long k) {
    return PiecewiseSkewMap{Point2{rat(0), rat(0)}, r, sign, k};
}

LatticeDirection lattice_length(const Point2& r) {
    if (r.x == 0 && r.y == 0) {
        throw ZeroVector("lattice length of the zero vector is undefined");
    }
    LatticeDirection d;
    d.r = r;
    d.lambda = rat(gcd(num(r.x), num(r.y)), lcm(den(r.x), den(r.y)));
    d.r_p = Point2{r.x / d.lambda, r.y / d.lambda};
    return d;
}

Mat2 skew_matrix(const Point2& r) {
    const LatticeDirection d = lattice_length(r);
    const Rational& p1 = d.r_p.x;
    const Rational& p2 = d.r_p.y;
    Mat2 m;
    m.a = 1 - p1 * p2;
    m.b = p1 * p1;
    m.c = -(p2 * p2);
    m.d = 1 + p1 * p2;
    return m;
}

RegionExpression apply_piecewise(const RegionExpression& e, const PiecewiseSkewMap& map) {
    if (!is_lattice(map.u)) {
        throw NonLatticeBase("skew map base point must be a lattice point");
    }
    const Point2 r = map.v - map.u;
    if (r.x == 0 && r.y == 0) {
        throw ZeroVector("skew map needs v distinct from u");
    }
    if (map.k < 1) {
        throw InvalidParameter("skew map exponent must be positive");
    }
    const SplitExpression split = split_expression(e, map.u, r);
    Mat2 m = mat_pow(skew_matrix(r), map.sign == SkewSign::Plus ? map.k : -map.k);
    m.t = map.u - m.apply(map.u);
    const RegionExpression& moving = map.sign == SkewSign::Plus ? split.pos : split.neg;
    const RegionExpression& still = map.sign == SkewSign::Plus ? split.neg : split.pos;
    const RegionExpression mapped = apply(m, moving);
    return concat({&mapped, &still, &split.correction});
}

RegionExpression apply_piecewise(const RationalPolygon& p, const PiecewiseSkewMap& map) {
    return apply_piecewise(make_region(p), map);
}

RegionExpression apply_affine_piecewise(const RegionExpression& e, const Point2& u,
                                        const Point2& v, SkewSign sign, long k) {
    return apply_piecewise(e, PiecewiseSkewMap{u, v, sign, k});
}

RegionExpression apply_affine_piecewise(const RationalPolygon& p, const Point2& u,
                                        const Point2& v, SkewSign sign, long k) {
    return apply_piecewise(make_region(p), PiecewiseSkewMap{u, v, sign, k});
}

} // namespace ehrhart_lab
