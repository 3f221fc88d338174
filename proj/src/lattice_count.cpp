#include "ehrhart_lab/lattice_count.hpp"

#include "ehrhart_lab/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace ehrhart_lab {

namespace {

constexpr long long kCoordGuard = 700000; // 12 * guard^3 < 2^62

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long long ceil_div(long long a, long long b) {
    return -floor_div(-a, b);
}

} // namespace

namespace kernel {

bool scale_to_int64(const RationalPolygon& p, std::vector<ScaledVertex>& w, long long& m) {
    const Integer d = denominator_lcm(p);
    if (!d.fits_slong_p()) return false;
    m = d.get_si();
    w.clear();
    w.reserve(p.vertices.size());
    for (const Point2& q : p.vertices) {
        const Integer sx = num(q.x) * (d / den(q.x));
        const Integer sy = num(q.y) * (d / den(q.y));
        if (!sx.fits_slong_p() || !sy.fits_slong_p()) return false;
        w.push_back(ScaledVertex{sx.get_si(), sy.get_si()});
    }
    return true;
}

bool scaled_count_fits(const std::vector<ScaledVertex>& w, long long m, long long n) {
    if (m > kCoordGuard) return false;
    long long max_abs = 0;
    for (const ScaledVertex& v : w) {
        max_abs = std::max({max_abs, std::llabs(v[0]), std::llabs(v[1])});
    }
    return max_abs <= kCoordGuard / (n > 0 ? n : 1);
}

long long scaled_count(const std::vector<ScaledVertex>& w, long long m, long long n) {
    long long min_x = n * w[0][0], max_x = min_x;
    for (const ScaledVertex& v : w) {
        min_x = std::min(min_x, n * v[0]);
        max_x = std::max(max_x, n * v[0]);
    }
    long long total = 0;
    const std::size_t k = w.size();
    for (long long zx = ceil_div(min_x, m); zx <= floor_div(max_x, m); ++zx) {
        const long long X = m * zx;
        // Lower bound is the max over lower-chain edges (dx > 0), upper bound
        // the min over upper-chain edges (dx < 0); vertical edges are covered
        // by their non-vertical neighbors at the shared column.
        long long lo_num = 0, lo_den = 0, hi_num = 0, hi_den = 0;
        for (std::size_t i = 0; i < k; ++i) {
            const long long ax = n * w[i][0], ay = n * w[i][1];
            const long long bx = n * w[(i + 1) % k][0], by = n * w[(i + 1) % k][1];
            long long dx = bx - ax;
            if (dx == 0) continue;
            if (X < std::min(ax, bx) || X > std::max(ax, bx)) continue;
            long long numr = ay * dx + (X - ax) * (by - ay);
            long long denr = dx;
            if (denr < 0) {
                numr = -numr;
                denr = -denr;
            }
            if (dx > 0) {
                if (lo_den == 0 || numr * lo_den > lo_num * denr) {
                    lo_num = numr;
                    lo_den = denr;
                }
            } else {
                if (hi_den == 0 || numr * hi_den < hi_num * denr) {
                    hi_num = numr;
                    hi_den = denr;
                }
            }
        }
        if (lo_den == 0 || hi_den == 0) continue;
        const long long y_hi = floor_div(hi_num, hi_den * m);
        const long long y_lo = ceil_div(lo_num, lo_den * m);
        if (y_hi >= y_lo) total += y_hi - y_lo + 1;
    }
    return total;
}

} // namespace kernel

namespace {

// Arbitrary-precision column scan; same algorithm as the int64 kernel.
long long column_count_exact(const RationalPolygon& p, long n) {
    const RationalPolygon d = dilate(p, n);
    const BBox box = bounding_box(d);
    long long total = 0;
    const auto& v = d.vertices;
    for (Integer x = iceil(box.xmin); x <= ifloor(box.xmax); ++x) {
        const Rational rx(x);
        bool has_lo = false, has_hi = false;
        Rational lo, hi;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const Point2& a = v[i];
            const Point2& b = v[(i + 1) % v.size()];
            if (a.x == b.x) continue;
            if (rx < std::min(a.x, b.x) || rx > std::max(a.x, b.x)) continue;
            const Rational y = a.y + (rx - a.x) * (b.y - a.y) / (b.x - a.x);
            if (b.x > a.x) {
                if (!has_lo || y > lo) lo = y;
                has_lo = true;
            } else {
                if (!has_hi || y < hi) hi = y;
                has_hi = true;
            }
        }
        if (!has_lo || !has_hi) continue;
        const Integer y_hi = ifloor(hi);
        const Integer y_lo = iceil(lo);
        if (y_hi >= y_lo) total += to_long(Integer(y_hi - y_lo + 1));
    }
    return total;
}

} // namespace

long long count_lattice_points(const RationalPolygon& p, long n) {
    if (n < 1) {
        throw InvalidParameter("dilation factor must be positive");
    }
    std::vector<kernel::ScaledVertex> w;
    long long m = 1;
    if (kernel::scale_to_int64(p, w, m) && kernel::scaled_count_fits(w, m, n)) {
        return kernel::scaled_count(w, m, n);
    }
    return column_count_exact(p, n);
}

long long oracle_count(const RationalPolygon& p, long n) {
    if (n < 1) {
        throw InvalidParameter("dilation factor must be positive");
    }
    std::vector<kernel::ScaledVertex> w;
    long long m = 1;
    if (kernel::scale_to_int64(p, w, m) && kernel::scaled_count_fits(w, m, n)) {
        long long min_x = n * w[0][0], max_x = min_x, min_y = n * w[0][1], max_y = min_y;
        for (const auto& v : w) {
            min_x = std::min(min_x, n * v[0]);
            max_x = std::max(max_x, n * v[0]);
            min_y = std::min(min_y, n * v[1]);
            max_y = std::max(max_y, n * v[1]);
        }
        const std::size_t k = w.size();
        long long total = 0;
        for (long long zx = ceil_div(min_x, m); zx <= floor_div(max_x, m); ++zx) {
            for (long long zy = ceil_div(min_y, m); zy <= floor_div(max_y, m); ++zy) {
                bool inside = true;
                for (std::size_t i = 0; i < k && inside; ++i) {
                    const long long ax = n * w[i][0], ay = n * w[i][1];
                    const long long bx = n * w[(i + 1) % k][0], by = n * w[(i + 1) % k][1];
                    const long long s = (bx - ax) * (m * zy - ay) - (by - ay) * (m * zx - ax);
                    if (s < 0) inside = false;
                }
                if (inside) ++total;
            }
        }
        return total;
    }
    const RationalPolygon d = dilate(p, n);
    const BBox box = bounding_box(d);
    long long total = 0;
    for (Integer x = iceil(box.xmin); x <= ifloor(box.xmax); ++x) {
        for (Integer y = iceil(box.ymin); y <= ifloor(box.ymax); ++y) {
            if (locate(d, Point2{Rational(x), Rational(y)}) != Location::Outside) ++total;
        }
    }
    return total;
}

BoundaryInteriorCounts boundary_interior(const RationalPolygon& p) {
    long long boundary = 0;
    for (const Segment& e : edges(p)) {
        const Segment half_open{e.u, e.v, Closedness::HalfOpenV};
        boundary += count_segment(half_open, 1);
    }
    BoundaryInteriorCounts counts;
    counts.boundary = boundary;
    counts.interior = count_lattice_points(p, 1) - boundary;
    return counts;
}

long long count_segment(const Segment& s, long n) {
    if (n < 1) {
        throw InvalidParameter("dilation factor must be positive");
    }
    const Point2 u{Rational(n) * s.u.x, Rational(n) * s.u.y};
    const Point2 v{Rational(n) * s.v.x, Rational(n) * s.v.y};
    long long total = 0;
    if (u.x == v.x) {
        if (is_integer(u.x)) {
            const Integer hi = ifloor(std::max(u.y, v.y));
            const Integer lo = iceil(std::min(u.y, v.y));
            if (hi >= lo) total = to_long(Integer(hi - lo + 1));
        }
    } else {
        const Rational lo_x = std::min(u.x, v.x);
        const Rational hi_x = std::max(u.x, v.x);
        for (Integer x = iceil(lo_x); x <= ifloor(hi_x); ++x) {
            const Rational y = u.y + (Rational(x) - u.x) * (v.y - u.y) / (v.x - u.x);
            if (is_integer(y)) ++total;
        }
    }
    const bool drop_u = s.closedness == Closedness::HalfOpenU || s.closedness == Closedness::Open;
    const bool drop_v = s.closedness == Closedness::HalfOpenV || s.closedness == Closedness::Open;
    if (drop_u && is_lattice(u)) --total;
    if (drop_v && is_lattice(v)) --total;
    return total;
}

long long count_region(const RegionExpression& e, long n) {
    long long total = 0;
    for (const RegionTerm& term : e.terms) {
        long long c = 0;
        if (const auto* poly = std::get_if<RationalPolygon>(&term.body)) {
            c = count_lattice_points(*poly, n);
        } else if (const auto* seg = std::get_if<Segment>(&term.body)) {
            c = count_segment(*seg, n);
        } else {
            const Point2& q = std::get<Point2>(term.body);
            c = is_lattice(Point2{Rational(n) * q.x, Rational(n) * q.y}) ? 1 : 0;
        }
        total += term.multiplicity * c;
    }
    return total;
}

} // namespace ehrhart_lab
