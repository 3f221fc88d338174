#include "ehrhart_lab/region.hpp"

#include "ehrhart_lab/errors.hpp"

namespace ehrhart_lab {

RegionExpression make_region(const RationalPolygon& p) {
    RegionExpression e;
    e.add(1, p);
    return e;
}

RegionExpression apply(const Mat2& m, const RegionExpression& e) {
    RegionExpression out;
    for (const RegionTerm& term : e.terms) {
        if (const auto* poly = std::get_if<RationalPolygon>(&term.body)) {
            out.add(term.multiplicity, apply(m, *poly));
        } else if (const auto* seg = std::get_if<Segment>(&term.body)) {
            out.add(term.multiplicity, apply(m, *seg));
        } else {
            out.add(term.multiplicity, m.apply(std::get<Point2>(term.body)));
        }
    }
    return out;
}

namespace {

// Side of x relative to the oriented line through u with direction r.
Rational side(const Point2& u, const Point2& r, const Point2& x) {
    return cross(r, x - u);
}

std::vector<Point2> clip_half_plane(const RationalPolygon& p, const Point2& u,
                                    const Point2& r, int keep) {
    std::vector<Point2> out;
    const auto& v = p.vertices;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point2& a = v[i];
        const Point2& b = v[(i + 1) % v.size()];
        const Rational sa = side(u, r, a) * keep;
        const Rational sb = side(u, r, b) * keep;
        if (sa >= 0) out.push_back(a);
        if ((sa > 0 && sb < 0) || (sa < 0 && sb > 0)) {
            const Rational t = sa / (sa - sb);
            out.push_back(a + t * (b - a));
        }
    }
    return out;
}

bool excludes_u(Closedness c) {
    return c == Closedness::HalfOpenU || c == Closedness::Open;
}
bool excludes_v(Closedness c) {
    return c == Closedness::HalfOpenV || c == Closedness::Open;
}
Closedness with_ends(bool exclude_u, bool exclude_v) {
    if (exclude_u && exclude_v) return Closedness::Open;
    if (exclude_u) return Closedness::HalfOpenU;
    if (exclude_v) return Closedness::HalfOpenV;
    return Closedness::Closed;
}

} // namespace

SplitExpression split_expression(const RegionExpression& e, const Point2& u, const Point2& r) {
    if (r.x == 0 && r.y == 0) {
        throw ZeroVector("split line direction is zero");
    }
    SplitExpression out;
    for (const RegionTerm& term : e.terms) {
        const long m = term.multiplicity;
        if (const auto* poly = std::get_if<RationalPolygon>(&term.body)) {
            bool any_pos = false, any_neg = false;
            for (const Point2& q : poly->vertices) {
                const Rational s = side(u, r, q);
                if (s > 0) any_pos = true;
                if (s < 0) any_neg = true;
            }
            if (!any_pos && !any_neg) {
                throw DegenerateSplit("polygon lies entirely in the cut line");
            }
            if (!any_neg) {
                out.pos.add(m, *poly);
            } else if (!any_pos) {
                out.neg.add(m, *poly);
            } else {
                const RationalPolygon plus = make_polygon(clip_half_plane(*poly, u, r, +1));
                const RationalPolygon minus = make_polygon(clip_half_plane(*poly, u, r, -1));
                out.pos.add(m, plus);
                out.neg.add(m, minus);
                // Both closed pieces contain the full chord; subtract it once.
                std::vector<Point2> on_line;
                for (const Point2& q : plus.vertices) {
                    if (side(u, r, q) == 0) on_line.push_back(q);
                }
                if (on_line.size() != 2) {
                    throw InternalError("straddling polygon must meet the cut line in a chord");
                }
                out.correction.add(-m, Segment{on_line[0], on_line[1], Closedness::Closed});
            }
        } else if (const auto* seg = std::get_if<Segment>(&term.body)) {
            const Rational su = side(u, r, seg->u);
            const Rational sv = side(u, r, seg->v);
            if (su >= 0 && sv >= 0) {
                out.pos.add(m, *seg);
            } else if (su <= 0 && sv <= 0) {
                out.neg.add(m, *seg);
            } else {
                const Rational t = su / (su - sv);
                const Point2 q = seg->u + t * (seg->v - seg->u);
                const Segment first{seg->u, q, with_ends(excludes_u(seg->closedness), false)};
                const Segment second{q, seg->v, with_ends(false, excludes_v(seg->closedness))};
                if (su > 0) {
                    out.pos.add(m, first);
                    out.neg.add(m, second);
                } else {
                    out.neg.add(m, first);
                    out.pos.add(m, second);
                }
                out.correction.add(-m, q);
            }
        } else {
            const Point2& q = std::get<Point2>(term.body);
            if (side(u, r, q) >= 0) {
                out.pos.add(m, q);
            } else {
                out.neg.add(m, q);
            }
        }
    }
    return out;
}

RegionExpression concat(std::initializer_list<const RegionExpression*> parts) {
    RegionExpression out;
    for (const RegionExpression* part : parts) {
        out.terms.insert(out.terms.end(), part->terms.begin(), part->terms.end());
    }
    return out;
}

} // namespace ehrhart_lab
