#pragma once

#include "ehrhart_lab/rational.hpp"

#include <variant>
#include <vector>

namespace ehrhart_lab {

struct Point2 {
    Rational x;
    Rational y;

    bool operator==(const Point2& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point2& o) const { return !(*this == o); }
};

inline Point2 operator+(const Point2& a, const Point2& b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(const Rational& s, const Point2& p) { return {s * p.x, s * p.y}; }
inline Point2 operator-(const Point2& p) { return {-p.x, -p.y}; }

inline Rational cross(const Point2& a, const Point2& b) { return a.x * b.y - a.y * b.x; }
inline Rational dot(const Point2& a, const Point2& b) { return a.x * b.x + a.y * b.y; }

inline bool is_lattice(const Point2& p) { return is_integer(p.x) && is_integer(p.y); }

/// den(v): least k > 0 with k*v integral = lcm of the coordinate denominators.
inline Integer point_denominator(const Point2& p) { return lcm(den(p.x), den(p.y)); }

// Row-major 2x2 rational matrix with an optional translation part, so a
// single type covers both linear (t = 0) and affine maps x -> M x + t.
struct Mat2 {
    Rational a, b, c, d;
    Point2 t{Rational(0), Rational(0)};

    static Mat2 identity() { return {Rational(1), Rational(0), Rational(0), Rational(1)}; }

    Point2 apply(const Point2& p) const {
        return {a * p.x + b * p.y + t.x, c * p.x + d * p.y + t.y};
    }

    Rational det() const { return a * d - b * c; }

    bool operator==(const Mat2& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d && t == o.t;
    }
};

// Composition: (m1 * m2)(x) = m1(m2(x)).
Mat2 operator*(const Mat2& m1, const Mat2& m2);
Mat2 inverse(const Mat2& m);
// Integer power, negative exponents via the inverse.
Mat2 mat_pow(const Mat2& m, long k);
bool is_unimodular(const Mat2& m); // integer entries, det = +1, no translation

enum class Closedness { Closed, HalfOpenU, HalfOpenV, Open };

struct Segment {
    Point2 u;
    Point2 v;
    Closedness closedness = Closedness::Closed;
};

/// Vertices in canonical form: strictly convex, counterclockwise, starting at
// the lexicographically least vertex. Construct only via make_polygon.
struct RationalPolygon {
    std::vector<Point2> vertices;

    bool operator==(const RationalPolygon& o) const { return vertices == o.vertices; }
};

enum class Location { Interior, Boundary, Outside };

// Integral hulls with empty planar interior are first-class results.
struct Degenerate {
    enum class Kind { Empty, Point, Segment };
    Kind kind = Kind::Empty;
    std::vector<Point2> points; // the point, or the two segment endpoints
};

using HullResult = std::variant<RationalPolygon, Degenerate>;

// Convex hull (monotone chain over exact rationals) with non-corner points
// removed; throws DegenerateInput if fewer than 3 hull vertices remain.
RationalPolygon make_polygon(const std::vector<Point2>& points);

Rational area(const RationalPolygon& p);
RationalPolygon dilate(const RationalPolygon& p, long n);
RationalPolygon scale(const RationalPolygon& p, const Rational& s);
RationalPolygon translate(const RationalPolygon& p, const Point2& t);
RationalPolygon apply(const Mat2& m, const RationalPolygon& p);
Segment apply(const Mat2& m, const Segment& s);

HullResult integral_hull(const RationalPolygon& p);
Location locate(const RationalPolygon& p, const Point2& q);

struct BBox {
    Rational xmin, xmax, ymin, ymax;
};
BBox bounding_box(const RationalPolygon& p);

// Edge i runs from vertex i to vertex i+1 (cyclically), closed.
std::vector<Segment> edges(const RationalPolygon& p);

// Affine line <nu, x> = c of an edge with nu the primitive integer outward
// normal (outward for a CCW polygon).
struct EdgeLine {
    Point2 nu;
    Rational c;
};
EdgeLine edge_line(const Point2& u, const Point2& v);

// lcm of all vertex coordinate denominators (the fitting period D = j0).
Integer denominator_lcm(const RationalPolygon& p);

// True when some U in GL2(Z) with U(a) = b exists (linear, origin fixed).
bool lattice_equivalent(const RationalPolygon& a, const RationalPolygon& b);

} // namespace ehrhart_lab
