#include "ehrhart_lab/constructions.hpp"

#include "ehrhart_lab/enumerate.hpp"
#include "ehrhart_lab/errors.hpp"
#include "ehrhart_lab/lattice_count.hpp"

namespace ehrhart_lab {

namespace {

const Point2 kOrigin{Rational(0), Rational(0)};

// Shared verification for the two PIP families: exact counts, quasi-period
// 1, zero Pick defect, and linear boundary growth.
bool verify_pip_counts(const RationalPolygon& p, long interior, long boundary) {
    const BoundaryInteriorCounts bi = boundary_interior(p);
    if (bi.interior != interior || bi.boundary != boundary) return false;
    const PipReport report = pip_report(p);
    return report.is_pip && report.pick_defect == 0 && report.boundary_scaling_ok;
}

} // namespace

RationalPolygon scott_polygon(long interior, long boundary) {
    return scott_polygon(interior, boundary, interior + boundary);
}

RationalPolygon scott_polygon(long interior, long boundary, long max_bbox) {
    if (!scott_admissible(interior, boundary, false)) {
        throw NotAdmissible("(interior, boundary) lies outside the admissible region");
    }
    for (long side = 1; side <= max_bbox; ++side) {
        RationalPolygon found;
        bool hit = false;
        EnumBounds eb;
        eb.max_boundary = boundary;
        eb.exact_boundary = boundary;
        eb.max_width = side;
        eb.max_height = side;
        // Pick's theorem fixes the area of any witness, so cap the search.
        eb.max_twice_area = 2 * interior + boundary - 2;
        enumerate_lattice_polygons(eb, [&](const LatticePolygonSummary& cand) {
            if (cand.interior != interior) return true;
            std::vector<Point2> pts;
            pts.reserve(cand.vertices.size());
            for (const auto& v : cand.vertices) {
                pts.push_back(Point2{rat(v[0]), rat(v[1])});
            }
            found = make_polygon(pts);
            hit = true;
            return false;
        });
        if (hit) {
            const BoundaryInteriorCounts bi = boundary_interior(found);
            if (bi.interior != interior || bi.boundary != boundary) {
                throw InternalError("search candidate failed the counting check");
            }
            return found;
        }
    }
    throw SearchExhausted("no polygon with the requested counts within the box bound");
}

ConstructionCertificate pip_b2(long interior) {
    if (interior < 1) {
        throw InvalidParameter("the boundary-2 family needs at least one interior point");
    }
    const Rational apex = 1 - rat(1, interior + 1);
    ConstructionCertificate cert;
    cert.polygon = make_polygon({kOrigin,
                                 Point2{rat(interior + 1), rat(0)},
                                 Point2{rat(1), apex},
                                 Point2{rat(1), -apex}});
    cert.claim = CountClaim{interior, 2};
    cert.verified = verify_pip_counts(cert.polygon, interior, 2);
    return cert;
}

ConstructionCertificate pip_b1(long interior) {
    if (interior < 1) {
        throw InvalidParameter("the boundary-1 family needs at least one interior point");
    }
    const Rational t = rat(2 * interior - 1, 2 * interior + 1);
    ConstructionCertificate cert;
    cert.polygon = make_polygon({Point2{rat(0), rat(-1)},
                                 Point2{t, rat(2 * interior) * t},
                                 Point2{-t, t}});
    cert.claim = CountClaim{interior, 1};
    cert.verified = verify_pip_counts(cert.polygon, interior, 1);
    return cert;
}

std::vector<RegionExpression> pip_b1_pipeline(long interior) {
    if (interior < 1) {
        throw InvalidParameter("the pipeline needs at least one interior point");
    }
    const long m = 2 * interior - 1;

    RegionExpression t1;
    t1.add(1, make_polygon({kOrigin, Point2{rat(1), rat(m)}, Point2{rat(-1), rat(0)}}));
    t1.add(-1, Segment{kOrigin, Point2{rat(1), rat(m)}, Closedness::HalfOpenU});

    const RegionExpression t2 =
        apply_piecewise(t1, linear_skew(Point2{rat(0), rat(-1)}, SkewSign::Plus, m));

    // The two skew maps of the third stage act on the pieces below the lines
    // spanned by (-1,-1) and (1,-1); their images straddle each other's cut
    // line, so the pieces are carved out first and mapped independently.
    const Point2 down_right{rat(-1), rat(-1)};
    const Point2 down_left{rat(1), rat(-1)};
    const SplitExpression s1 = split_expression(t2, kOrigin, down_right);
    const RegionExpression right = apply(skew_matrix(down_right), s1.pos);
    const SplitExpression s2 = split_expression(s1.neg, kOrigin, down_left);
    const RegionExpression left = apply(inverse(skew_matrix(down_left)), s2.neg);
    const RegionExpression t3 =
        concat({&right, &s2.pos, &left, &s1.correction, &s2.correction});

    const RegionExpression p =
        apply_piecewise(t3, linear_skew(Point2{rat(0), rat(1)}, SkewSign::Minus, m));

    return {t1, t2, t3, p};
}

HeptagonResult heptagon_H(long s) {
    if (s < 2) {
        throw InvalidParameter("the heptagon family needs s >= 2");
    }
    const long y = s * (s - 1) + 1;
    const Point2 t1{rat(-1, s), rat(y)};
    const Point2 u1{rat(0), rat(y)};
    const Point2 v1{rat(1), rat(y - 1)};
    const Point2 w{rat(y, s), rat(0)};
    const Point2 v2{rat(1), rat(1 - y)};
    const Point2 u2{rat(0), rat(-y)};
    const Point2 t2{rat(-1, s), rat(-y)};
    HeptagonResult out;
    out.H = make_polygon({t1, u1, v1, w, v2, u2, t2});
    out.parts.R = make_polygon({t1, t2, u2, u1});
    out.parts.T1 = make_polygon({u1, v1, w});
    out.parts.T2 = make_polygon({u2, v2, w});
    out.parts.T3 = make_polygon({u1, u2, w});
    out.parts.U1 = PiecewiseSkewMap{u1, w, SkewSign::Plus, 1};
    out.parts.U2 = PiecewiseSkewMap{u2, w, SkewSign::Minus, 1};
    return out;
}

RationalPolygon triangle_Q(long r, const Point2& anchor) {
    if (r < 2) {
        throw InvalidParameter("the triangle family needs r >= 2");
    }
    if (!is_lattice(anchor)) {
        throw InvalidParameter("the triangle anchor must be a lattice point");
    }
    return make_polygon({anchor, anchor + Point2{rat(1), rat(-1)}, anchor + Point2{rat(1, r), rat(0)}});
}

ConstructionCertificate period_polygon(long r, long s) {
    if (r < 1 || s < 1) {
        throw InvalidParameter("period parameters must be positive");
    }
    ConstructionCertificate cert;
    bool gluing_ok = true;
    if (r == 1 && s == 1) {
        cert.polygon = make_polygon({kOrigin, Point2{rat(1), rat(0)}, Point2{rat(1), rat(1)},
                                     Point2{rat(0), rat(1)}});
    } else if (s == 1) {
        cert.polygon = triangle_Q(r, kOrigin);
    } else if (r == 1) {
        cert.polygon = heptagon_H(s).H;
    } else {
        const HeptagonResult hep = heptagon_H(s);
        const Point2 u1{rat(0), rat(s * (s - 1) + 1)};
        const RationalPolygon q = triangle_Q(r, u1);
        std::vector<Point2> pts = hep.H.vertices;
        pts.insert(pts.end(), q.vertices.begin(), q.vertices.end());
        cert.polygon = make_polygon(pts);
        if (area(cert.polygon) != area(hep.H) + area(q)) {
            throw ConvexityFailure("the glued union is not convex");
        }
        for (long n = 1; n <= 12 && gluing_ok; ++n) {
            const long long lhs = count_lattice_points(cert.polygon, n);
            const long long rhs = count_lattice_points(hep.H, n) +
                                  count_lattice_points(q, n) - (n + 1);
            gluing_ok = lhs == rhs;
        }
    }
    cert.claim = PeriodClaim{r, s, 1};
    const PeriodSequence ps = period_sequence(ehrhart_qp(cert.polygon));
    cert.verified = gluing_ok && ps.s0 == r && ps.s1 == s && ps.s2 == 1;
    return cert;
}

} // namespace ehrhart_lab
