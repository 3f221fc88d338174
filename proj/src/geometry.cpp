#include "ehrhart_lab/geometry.hpp"

#include "ehrhart_lab/errors.hpp"

#include <algorithm>
#include <array>

namespace ehrhart_lab {

Mat2 operator*(const Mat2& m1, const Mat2& m2) {
    Mat2 r;
    r.a = m1.a * m2.a + m1.b * m2.c;
    r.b = m1.a * m2.b + m1.b * m2.d;
    r.c = m1.c * m2.a + m1.d * m2.c;
    r.d = m1.c * m2.b + m1.d * m2.d;
    r.t = m1.apply(m2.t);
    return r;
}

Mat2 inverse(const Mat2& m) {
    const Rational det = m.det();
    if (det == 0) {
        throw InternalError("singular matrix has no inverse");
    }
    Mat2 r;
    r.a = m.d / det;
    r.b = -m.b / det;
    r.c = -m.c / det;
    r.d = m.a / det;
    r.t = {-(r.a * m.t.x + r.b * m.t.y), -(r.c * m.t.x + r.d * m.t.y)};
    return r;
}

Mat2 mat_pow(const Mat2& m, long k) {
    Mat2 base = k < 0 ? inverse(m) : m;
    long e = k < 0 ? -k : k;
    Mat2 acc = Mat2::identity();
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool is_unimodular(const Mat2& m) {
    return is_integer(m.a) && is_integer(m.b) && is_integer(m.c) && is_integer(m.d) &&
           m.det() == 1 && m.t.x == 0 && m.t.y == 0;
}

namespace {

bool lex_less(const Point2& a, const Point2& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

Rational orient(const Point2& o, const Point2& a, const Point2& b) {
    return cross(a - o, b - o);
}

} // namespace

RationalPolygon make_polygon(const std::vector<Point2>& points) {
    std::vector<Point2> pts = points;
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) {
        throw DegenerateInput("polygon needs at least 3 distinct points");
    }

    // Monotone chain; strict turns only, so collinear mid-points are dropped.
    auto build = [&](auto begin, auto end) {
        std::vector<Point2> chain;
        for (auto it = begin; it != end; ++it) {
            while (chain.size() >= 2 &&
                   orient(chain[chain.size() - 2], chain.back(), *it) <= 0) {
                chain.pop_back();
            }
            chain.push_back(*it);
        }
        return chain;
    };
    std::vector<Point2> lower = build(pts.begin(), pts.end());
    std::vector<Point2> upper = build(pts.rbegin(), pts.rend());

    std::vector<Point2> hull(lower.begin(), lower.end() - 1);
    hull.insert(hull.end(), upper.begin(), upper.end() - 1);
    if (hull.size() < 3) {
        throw DegenerateInput("points are collinear");
    }

    // CCW already; rotate so the lexicographically least vertex leads.
    auto least = std::min_element(hull.begin(), hull.end(), lex_less);
    std::rotate(hull.begin(), least, hull.end());
    return RationalPolygon{std::move(hull)};
}

Rational area(const RationalPolygon& p) {
    Rational twice(0);
    const auto& v = p.vertices;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point2& a = v[i];
        const Point2& b = v[(i + 1) % v.size()];
        twice += cross(a, b);
    }
    return twice / 2;
}

RationalPolygon dilate(const RationalPolygon& p, long n) {
    if (n < 1) {
        throw InvalidParameter("dilation factor must be positive");
    }
    return scale(p, Rational(n));
}

RationalPolygon scale(const RationalPolygon& p, const Rational& s) {
    std::vector<Point2> v;
    v.reserve(p.vertices.size());
    for (const Point2& q : p.vertices) v.push_back(s * q);
    return make_polygon(v);
}

RationalPolygon translate(const RationalPolygon& p, const Point2& t) {
    std::vector<Point2> v;
    v.reserve(p.vertices.size());
    for (const Point2& q : p.vertices) v.push_back(q + t);
    return make_polygon(v);
}

RationalPolygon apply(const Mat2& m, const RationalPolygon& p) {
    if (m.det() == 0) {
        throw InvalidParameter("polygon image under a singular map is degenerate");
    }
    std::vector<Point2> v;
    v.reserve(p.vertices.size());
    for (const Point2& q : p.vertices) v.push_back(m.apply(q));
    return make_polygon(v);
}

Segment apply(const Mat2& m, const Segment& s) {
    return Segment{m.apply(s.u), m.apply(s.v), s.closedness};
}

BBox bounding_box(const RationalPolygon& p) {
    BBox box{p.vertices[0].x, p.vertices[0].x, p.vertices[0].y, p.vertices[0].y};
    for (const Point2& q : p.vertices) {
        box.xmin = std::min(box.xmin, q.x);
        box.xmax = std::max(box.xmax, q.x);
        box.ymin = std::min(box.ymin, q.y);
        box.ymax = std::max(box.ymax, q.y);
    }
    return box;
}

std::vector<Segment> edges(const RationalPolygon& p) {
    std::vector<Segment> es;
    const auto& v = p.vertices;
    es.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        es.push_back(Segment{v[i], v[(i + 1) % v.size()], Closedness::Closed});
    }
    return es;
}

EdgeLine edge_line(const Point2& u, const Point2& v) {
    const Point2 e = v - u;
    // For CCW order the outward normal is (e.y, -e.x); clear denominators and
    // divide by the gcd to make it primitive integral.
    Rational nx = e.y;
    Rational ny = -e.x;
    const Integer scale = lcm(den(nx), den(ny));
    Integer ix = num(nx) * (scale / den(nx));
    Integer iy = num(ny) * (scale / den(ny));
    const Integer g = gcd(ix < 0 ? Integer(-ix) : ix, iy < 0 ? Integer(-iy) : iy);
    ix /= g;
    iy /= g;
    Point2 nu{Rational(ix), Rational(iy)};
    return EdgeLine{nu, dot(nu, u)};
}

Integer denominator_lcm(const RationalPolygon& p) {
    Integer d(1);
    for (const Point2& q : p.vertices) d = lcm(d, point_denominator(q));
    return d;
}

Location locate(const RationalPolygon& p, const Point2& q) {
    bool on_boundary = false;
    const auto& v = p.vertices;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Rational s = orient(v[i], v[(i + 1) % v.size()], q);
        if (s < 0) return Location::Outside;
        if (s == 0) on_boundary = true;
    }
    return on_boundary ? Location::Boundary : Location::Interior;
}

HullResult integral_hull(const RationalPolygon& p) {
    // Column scan: exact per-column y-interval, then collect lattice points.
    std::vector<Point2> lattice;
    const BBox box = bounding_box(p);
    for (Integer x = iceil(box.xmin); x <= ifloor(box.xmax); ++x) {
        const Rational rx(x);
        bool any = false;
        Rational ylo, yhi;
        const auto& v = p.vertices;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const Point2& a = v[i];
            const Point2& b = v[(i + 1) % v.size()];
            if (a.x == b.x) {
                if (a.x != rx) continue;
                const Rational lo = std::min(a.y, b.y);
                const Rational hi = std::max(a.y, b.y);
                if (!any) {
                    ylo = lo;
                    yhi = hi;
                    any = true;
                } else {
                    ylo = std::min(ylo, lo);
                    yhi = std::max(yhi, hi);
                }
                continue;
            }
            const Rational lo_x = std::min(a.x, b.x);
            const Rational hi_x = std::max(a.x, b.x);
            if (rx < lo_x || rx > hi_x) continue;
            const Rational y = a.y + (rx - a.x) * (b.y - a.y) / (b.x - a.x);
            if (!any) {
                ylo = y;
                yhi = y;
                any = true;
            } else {
                ylo = std::min(ylo, y);
                yhi = std::max(yhi, y);
            }
        }
        if (!any) continue;
        for (Integer y = iceil(ylo); y <= ifloor(yhi); ++y) {
            lattice.push_back(Point2{rx, Rational(y)});
        }
    }

    if (lattice.empty()) {
        return Degenerate{Degenerate::Kind::Empty, {}};
    }
    bool collinear = true;
    for (std::size_t i = 2; i < lattice.size() && collinear; ++i) {
        if (orient(lattice[0], lattice[1], lattice[i]) != 0) collinear = false;
    }
    if (lattice.size() == 1) {
        return Degenerate{Degenerate::Kind::Point, {lattice[0]}};
    }
    if (collinear) {
        auto ends = std::minmax_element(lattice.begin(), lattice.end(),
                                        [](const Point2& a, const Point2& b) {
                                            if (a.x != b.x) return a.x < b.x;
                                            return a.y < b.y;
                                        });
        if (*ends.first == *ends.second) {
            return Degenerate{Degenerate::Kind::Point, {*ends.first}};
        }
        return Degenerate{Degenerate::Kind::Segment, {*ends.first, *ends.second}};
    }
    return make_polygon(lattice);
}

bool lattice_equivalent(const RationalPolygon& a, const RationalPolygon& b) {
    const std::size_t n = a.vertices.size();
    if (n != b.vertices.size()) return false;
    // A linear lattice automorphism maps vertex cycles to vertex cycles, so a
    // candidate U is pinned by where two consecutive a-edges go.
    auto edge_frame = [](const std::vector<Point2>& v, std::size_t i, bool rev) {
        const std::size_t m = v.size();
        auto at = [&](std::size_t k) {
            return rev ? v[(i + m - (k % m)) % m] : v[(i + k) % m];
        };
        return std::array<Point2, 3>{at(0), at(1), at(2)};
    };
    const auto fa = edge_frame(a.vertices, 0, false);
    const Point2 e1 = fa[1] - fa[0];
    const Point2 e2 = fa[2] - fa[1];
    const Rational det_a = cross(e1, e2);
    if (det_a == 0) return false;
    for (bool rev : {false, true}) {
        for (std::size_t off = 0; off < n; ++off) {
            const auto fb = edge_frame(b.vertices, off, rev);
            const Point2 f1 = fb[1] - fb[0];
            const Point2 f2 = fb[2] - fb[1];
            // Solve U * [e1 e2] = [f1 f2].
            Mat2 E{e1.x, e2.x, e1.y, e2.y};
            Mat2 F{f1.x, f2.x, f1.y, f2.y};
            Mat2 u = F * inverse(E);
            if (!is_integer(u.a) || !is_integer(u.b) || !is_integer(u.c) ||
                !is_integer(u.d)) {
                continue;
            }
            const Rational d = u.det();
            if (d != 1 && d != -1) continue;
            bool all = true;
            for (std::size_t k = 0; k < n && all; ++k) {
                const std::size_t bk = rev ? (off + n - k) % n : (off + k) % n;
                if (u.apply(a.vertices[k]) != b.vertices[bk]) all = false;
            }
            if (all) return true;
        }
    }
    return false;
}

} // namespace ehrhart_lab
