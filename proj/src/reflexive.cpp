#include "ehrhart_lab/reflexive.hpp"

#include "ehrhart_lab/ehrhart.hpp"
#include "ehrhart_lab/enumerate.hpp"
#include "ehrhart_lab/errors.hpp"
#include "ehrhart_lab/lattice_count.hpp"
#include "ehrhart_lab/pz_morphism.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <map>
#include <utility>

namespace ehrhart_lab {

namespace {

const Point2 kOrigin{rat(0), rat(0)};

bool all_lattice(const RationalPolygon& p) {
    return std::all_of(p.vertices.begin(), p.vertices.end(),
                       [](const Point2& v) { return is_lattice(v); });
}

// Dual vertex of the edge u -> v, index-aligned with edges(p).
Point2 dual_vertex(const Point2& u, const Point2& v) {
    EdgeLine el = edge_line(u, v);
    return {el.nu.x / el.c, el.nu.y / el.c};
}

} // namespace

Mat2 gen_A() { return gen_A_pow(rat(1)); }
Mat2 gen_B() { return gen_B_pow(rat(1)); }

Mat2 gen_A_pow(const Rational& a) { return Mat2{rat(1), a, rat(0), rat(1)}; }

Mat2 gen_B_pow(const Rational& b) { return Mat2{rat(1), rat(0), -b, rat(1)}; }

RationalPolygon polar_dual(const RationalPolygon& p) {
    if (locate(p, kOrigin) != Location::Interior) {
        throw OriginNotInterior("polar dual requires the origin strictly inside the polygon");
    }
    std::vector<Point2> duals;
    duals.reserve(p.vertices.size());
    const std::size_t m = p.vertices.size();
    for (std::size_t i = 0; i < m; ++i) {
        duals.push_back(dual_vertex(p.vertices[i], p.vertices[(i + 1) % m]));
    }
    return make_polygon(duals);
}

ReflexivityReport reflexivity_report(const RationalPolygon& p) {
    const RationalPolygon dual = polar_dual(p);
    ReflexivityReport r;
    const bool dual_integral = all_lattice(dual);
    r.reflexive = all_lattice(p) && dual_integral;
    r.pseudo_reflexive = dual_integral && pip_report(p).is_pip;
    r.twelve = boundary_interior(p).boundary + boundary_interior(dual).boundary == 12;
    return r;
}

GeneratorWord extract_word(const RationalPolygon& p) {
    const std::size_t m = p.vertices.size();
    std::size_t start = m;
    for (std::size_t i = 0; i < m; ++i) {
        if (is_lattice(p.vertices[i])) {
            start = i;
            break;
        }
    }
    if (start == m) {
        throw NoLatticeVertex("word extraction starts at a lattice vertex, but none exists");
    }

    // Dual vertex k corresponds to the edge vertex k -> vertex k+1, so the
    // dual edge with outer normal vertex k runs from dual k-1 to dual k.
    std::vector<Point2> duals;
    duals.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        duals.push_back(dual_vertex(p.vertices[i], p.vertices[(i + 1) % m]));
    }
    if (locate(p, kOrigin) != Location::Interior) {
        throw OriginNotInterior("word extraction requires the origin strictly inside the polygon");
    }

    GeneratorWord word;
    word.letters.reserve(m);
    for (std::size_t step = 1; step <= m; ++step) {
        const std::size_t k = (start + step) % m;
        const Point2& prev = p.vertices[(start + step - 1) % m];
        const Point2& cur = p.vertices[k];
        const Rational a = lattice_length({cur.x - prev.x, cur.y - prev.y}).lambda;
        const Point2& d_in = duals[(k + m - 1) % m];
        const Point2& d_out = duals[k];
        const Rational b_dual = lattice_length({d_out.x - d_in.x, d_out.y - d_in.y}).lambda;
        const Rational b = Rational(point_denominator(cur)) * b_dual;
        if (!is_integer(b)) {
            throw InvalidWord("dual edge length does not give an integer exponent");
        }
        word.letters.push_back({a, to_long(b)});
    }
    return word;
}

bool word_valid(const GeneratorWord& w) {
    if (w.letters.empty()) return false;
    Rational sum = rat(0);
    for (const WordLetter& l : w.letters) {
        if (!(l.a > 0) || l.b < 1) return false;
        sum += l.a;
        const Integer d = den(sum);
        if (Integer(l.b) % (d * d) != 0) return false;
    }
    return is_integer(sum);
}

Mat2 word_product(const GeneratorWord& w) {
    Mat2 m = Mat2::identity();
    for (const WordLetter& l : w.letters) {
        m = gen_B_pow(rat(l.b)) * (gen_A_pow(l.a) * m);
    }
    return m;
}

PathReconstruction reconstruct_path(const GeneratorWord& w) {
    if (!word_valid(w)) {
        throw InvalidWord("letters must have a_i > 0, integer b_i >= 1 with "
                              "den(a_1+...+a_i)^2 | b_i, and integer total a");
    }
    PathReconstruction out;
    Point2 v{rat(1), rat(0)};
    Point2 d{rat(0), rat(1)};
    for (const WordLetter& l : w.letters) {
        out.vertices.push_back(v);
        out.directions.push_back(d);
        v = v + l.a * d;
        d = {d.x - rat(l.b) * v.x, d.y - rat(l.b) * v.y};
    }
    out.winding = winding_number(out.vertices);
    return out;
}

long winding_number(const std::vector<Point2>& path) {
    if (path.empty()) {
        throw InvalidParameter("winding number needs a nonempty path");
    }
    long winding = 0;
    const std::size_t n = path.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& u = path[i];
        const Point2& w = path[(i + 1) % n];
        const Rational cr = cross(u, w);
        if (cr == 0 && dot(u, w) <= 0) {
            throw OriginOnPath("path passes through the origin");
        }
        // Half-open crossings of the positive x-axis; the sign of cross(u, w)
        // is the sign of the x-intercept times the sign of w.y - u.y.
        if (u.y <= 0 && w.y > 0 && cr > 0) ++winding;
        if (u.y > 0 && w.y <= 0 && cr < 0) --winding;
    }
    return winding;
}

namespace {

// Boundary lattice points in counterclockwise order for an integral polygon.
std::vector<std::array<long, 2>> boundary_chain(const RationalPolygon& p) {
    std::vector<std::array<long, 2>> chain;
    const std::size_t m = p.vertices.size();
    for (std::size_t i = 0; i < m; ++i) {
        const Point2& u = p.vertices[i];
        const Point2& v = p.vertices[(i + 1) % m];
        const long ux = to_long(u.x), uy = to_long(u.y);
        const long dx = to_long(v.x) - ux, dy = to_long(v.y) - uy;
        const long g = to_long(gcd(Integer(std::abs(dx)), Integer(std::abs(dy))));
        for (long t = 0; t < g; ++t) {
            chain.push_back({ux + t * (dx / g), uy + t * (dy / g)});
        }
    }
    return chain;
}

// Unimodular-invariant key: consecutive boundary lattice points of a polygon
// with the origin as its only interior lattice point form a lattice basis, so
// mapping one such pair to the standard basis pins down the whole chain.
// Minimizing over start point and orientation kills the remaining freedom.
std::vector<long> canonical_chain_key(const std::vector<std::array<long, 2>>& chain) {
    const long n = static_cast<long>(chain.size());
    std::vector<long> best;
    std::vector<long> key;
    for (int orient : {1, -1}) {
        for (long start = 0; start < n; ++start) {
            const auto at = [&](long i) {
                return chain[static_cast<std::size_t>(((start + orient * i) % n + n) % n)];
            };
            const auto q0 = at(0), q1 = at(1);
            const long det = q0[0] * q1[1] - q0[1] * q1[0];
            if (det != 1 && det != -1) continue;
            key.clear();
            for (long i = 0; i < n; ++i) {
                const auto q = at(i);
                key.push_back((q1[1] * q[0] - q1[0] * q[1]) / det);
                key.push_back((q0[0] * q[1] - q0[1] * q[0]) / det);
            }
            if (best.empty() || key < best) best = key;
        }
    }
    return best;
}

} // namespace

std::vector<RationalPolygon> reflexive_scan(long max_bbox) {
    if (max_bbox < 1) {
        throw InvalidParameter("bounding-box bound must be at least 1");
    }
    std::map<std::vector<long>, RationalPolygon> classes;
    // One interior point forces b <= 9 (b = 9 only for the triple triangle)
    // and, by Pick, twice-area b <= 9, so the enumeration below is exhaustive
    // for any box bound.
    EnumBounds bounds{9, 0, max_bbox, max_bbox, 9};
    enumerate_lattice_polygons(bounds, [&](const LatticePolygonSummary& s) {
        if (s.interior != 1) return true;
        std::vector<Point2> verts;
        verts.reserve(s.vertices.size());
        for (const auto& v : s.vertices) verts.push_back({rat(v[0]), rat(v[1])});
        RationalPolygon poly = make_polygon(verts);
        Point2 ip = kOrigin;
        bool found = false;
        for (long x = 0; x <= s.width && !found; ++x) {
            for (long y = 0; y <= s.height && !found; ++y) {
                ip = {rat(x), rat(y)};
                found = locate(poly, ip) == Location::Interior;
            }
        }
        if (!found) return true;
        poly = translate(poly, {-ip.x, -ip.y});
        if (!all_lattice(polar_dual(poly))) return true;
        classes.emplace(canonical_chain_key(boundary_chain(poly)), std::move(poly));
        return true;
    });
    std::vector<RationalPolygon> out;
    out.reserve(classes.size());
    for (auto& [key, poly] : classes) out.push_back(std::move(poly));
    return out;
}

} // namespace ehrhart_lab
