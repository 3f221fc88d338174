#include "ehrhart_lab/scan.hpp"

#include "ehrhart_lab/ehrhart.hpp"
#include "ehrhart_lab/enumerate.hpp"
#include "ehrhart_lab/errors.hpp"
#include "ehrhart_lab/lattice_count.hpp"
#include "ehrhart_lab/rational.hpp"
#include "ehrhart_lab/threads.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

namespace ehrhart_lab {

namespace {

struct GridPoint {
    long x = 0;
    long y = 0;
};

long lcm_up_to(long d) {
    long m = 1;
    for (long k = 2; k <= d; ++k) m = std::lcm(m, k);
    return m;
}

// Coordinates k/M in [-bound, bound] whose reduced denominator is at most d.
std::vector<long> grid_values(long m, long d, long bound) {
    std::vector<long> vals;
    for (long k = -bound * m; k <= bound * m; ++k) {
        if (m / std::gcd(std::abs(k), m) <= d) vals.push_back(k);
    }
    return vals;
}

bool detector(const RationalPolygon& p, long dilate_bound) {
    const long d = static_cast<long>(denominator_lcm(p).get_si());
    const BoundaryInteriorCounts bi = boundary_interior(p);
    const Rational a = area(p);
    // n = 1 reduces to Pick's identity area = I + b/2 - 1.
    if (a != rat(2 * bi.interior + bi.boundary - 2, 2)) return false;
    const long top = std::max(3 * d, dilate_bound);
    for (long n = 2; n <= top; ++n) {
        const Rational expect = a * rat(n) * rat(n) + rat(bi.boundary, 2) * rat(n) + 1;
        if (rat(static_cast<long>(count_lattice_points(p, n))) != expect) return false;
    }
    return true;
}

// Builds the row for a scaled candidate, or nothing when it is not a PIP.
std::optional<PipScanRow> check_candidate(const std::vector<GridPoint>& verts, long m,
                                          const PipScanOptions& opt) {
    if (!opt.include_integral) {
        bool integral = true;
        for (const GridPoint& v : verts) integral = integral && v.x % m == 0 && v.y % m == 0;
        if (integral) return std::nullopt;
    }
    std::vector<Point2> pts;
    pts.reserve(verts.size());
    for (const GridPoint& v : verts) pts.push_back({rat(v.x, m), rat(v.y, m)});
    RationalPolygon poly = make_polygon(pts);
    if (poly.vertices.size() != verts.size()) return std::nullopt; // chain was not strict
    const BBox bb = bounding_box(poly);
    poly = translate(poly, {-Rational(ifloor(bb.xmin)), -Rational(ifloor(bb.ymin))});
    if (!detector(poly, opt.dilate_bound)) return std::nullopt;
    const BoundaryInteriorCounts bi = boundary_interior(poly);
    PipScanRow row;
    row.interior = bi.interior;
    row.boundary = bi.boundary;
    row.polygon = poly;
    for (const Point2& v : row.polygon.vertices) {
        row.key.push_back(to_long(Rational(v.x * m)));
        row.key.push_back(to_long(Rational(v.y * m)));
    }
    return row;
}

long icross(long ax, long ay, long bx, long by) { return ax * by - ay * bx; }

// Chains of points in convex position around a lex-least anchor; emits every
// strictly convex polygon with 4..max_vertices vertices whose lex-least
// vertex is the anchor.
struct ChainSearch {
    const PipScanOptions* opt = nullptr;
    long m = 0;
    long band = 0; // min coordinate must be below this for the min translate
    std::vector<GridPoint> sorted; // candidates after the anchor, by angle
    std::vector<GridPoint> chain;  // chain[0] is the anchor
    std::vector<PipScanRow>* rows = nullptr;

    void try_emit() {
        const std::size_t k = chain.size();
        if (k < 4) return;
        const GridPoint& v0 = chain[0];
        const GridPoint& last = chain[k - 1];
        const GridPoint& prev = chain[k - 2];
        if (icross(last.x - prev.x, last.y - prev.y, v0.x - last.x, v0.y - last.y) <= 0) return;
        if (icross(v0.x - last.x, v0.y - last.y, chain[1].x - v0.x, chain[1].y - v0.y) <= 0) return;
        long miny = v0.y;
        long twice = 0;
        for (std::size_t i = 0; i < k; ++i) {
            const GridPoint& a = chain[i];
            const GridPoint& b = chain[(i + 1) % k];
            miny = std::min(miny, a.y);
            twice += icross(a.x, a.y, b.x, b.y);
        }
        if (miny >= band) return;
        if (twice % (m * m) != 0) return;
        if (auto row = check_candidate(chain, m, *opt)) rows->push_back(std::move(*row));
    }

    void dfs(std::size_t from) {
        try_emit();
        if (chain.size() >= static_cast<std::size_t>(opt->max_vertices)) return;
        for (std::size_t i = from; i < sorted.size(); ++i) {
            const GridPoint& cand = sorted[i];
            if (chain.size() >= 2) {
                const GridPoint& last = chain.back();
                const GridPoint& prev = chain[chain.size() - 2];
                if (icross(last.x - prev.x, last.y - prev.y, cand.x - last.x,
                           cand.y - last.y) <= 0) {
                    continue;
                }
            }
            chain.push_back(cand);
            dfs(i + 1);
            chain.pop_back();
        }
    }
};

} // namespace

bool pip_counts_match_polynomial(const RationalPolygon& p, long dilate_bound) {
    return detector(p, dilate_bound);
}

std::vector<PipScanRow> pip_scan(const PipScanOptions& opt) {
    if (opt.max_denominator < 1 || opt.coordinate_bound < 0 || opt.dilate_bound < 0 ||
        opt.max_vertices < 3) {
        throw InvalidParameter("scan needs max_denominator >= 1, coordinate_bound >= 0, "
                              "dilate_bound >= 0, max_vertices >= 3");
    }
    const long m = lcm_up_to(opt.max_denominator);
    const std::vector<long> vals = grid_values(m, opt.max_denominator, opt.coordinate_bound);
    std::vector<GridPoint> pts; // lexicographic order
    for (long x : vals) {
        for (long y : vals) pts.push_back({x, y});
    }
    const long n = static_cast<long>(pts.size());
    const long mm = m * m;
    // A candidate is processed only as its minimal lattice translate inside
    // the box: shifting down or left by one lattice unit must exit the box.
    const long band = m * (1 - opt.coordinate_bound);

    std::vector<long> anchors;
    for (long i = 0; i < n; ++i) {
        if (pts[static_cast<std::size_t>(i)].x < band) anchors.push_back(i);
    }

    std::vector<PipScanRow> rows;
#pragma omp parallel num_threads(thread_cap())
    {
        std::vector<PipScanRow> local;
#pragma omp for schedule(dynamic)
        for (long ai = 0; ai < static_cast<long>(anchors.size()); ++ai) {
            const long i = anchors[static_cast<std::size_t>(ai)];
            const GridPoint pi = pts[static_cast<std::size_t>(i)];
            for (long j = i + 1; j < n; ++j) {
                const GridPoint pj = pts[static_cast<std::size_t>(j)];
                const long dx1 = pj.x - pi.x, dy1 = pj.y - pi.y;
                for (long k = j + 1; k < n; ++k) {
                    const GridPoint pk = pts[static_cast<std::size_t>(k)];
                    const long cr = dx1 * (pk.y - pi.y) - dy1 * (pk.x - pi.x);
                    if (cr == 0 || cr % mm != 0) continue;
                    if (std::min({pi.y, pj.y, pk.y}) >= band) continue;
                    if (auto row = check_candidate({pi, pj, pk}, m, opt)) {
                        local.push_back(std::move(*row));
                    }
                }
            }
            if (opt.max_vertices >= 4) {
                ChainSearch search;
                search.opt = &opt;
                search.m = m;
                search.band = band;
                search.rows = &local;
                for (long j = i + 1; j < n; ++j) search.sorted.push_back(pts[static_cast<std::size_t>(j)]);
                std::sort(search.sorted.begin(), search.sorted.end(),
                          [&](const GridPoint& a, const GridPoint& b) {
                              const long cr = icross(a.x - pi.x, a.y - pi.y, b.x - pi.x, b.y - pi.y);
                              if (cr != 0) return cr > 0;
                              return std::abs(a.x - pi.x) + std::abs(a.y - pi.y) <
                                     std::abs(b.x - pi.x) + std::abs(b.y - pi.y);
                          });
                search.chain.push_back(pi);
                search.dfs(0);
            }
        }
#pragma omp critical(pip_scan_merge)
        rows.insert(rows.end(), std::make_move_iterator(local.begin()),
                    std::make_move_iterator(local.end()));
    }

    std::sort(rows.begin(), rows.end(), [](const PipScanRow& a, const PipScanRow& b) {
        if (a.interior != b.interior) return a.interior < b.interior;
        if (a.boundary != b.boundary) return a.boundary < b.boundary;
        return a.key < b.key;
    });
    return rows;
}

std::string pip_scan_csv(const PipScanOptions& opt) {
    std::ostringstream out;
    out << "I,b,vertices\n";
    for (const PipScanRow& row : pip_scan(opt)) {
        out << row.interior << ',' << row.boundary << ',';
        bool first = true;
        for (const Point2& v : row.polygon.vertices) {
            if (!first) out << ';';
            first = false;
            out << rational_string(v.x) << ' ' << rational_string(v.y);
        }
        out << '\n';
    }
    return out.str();
}

std::vector<ScottMapRow> scott_map(long max_interior, long max_boundary) {
    if (max_interior < 0 || max_boundary < 0) {
        throw InvalidParameter("scott map bounds must be nonnegative");
    }
    std::vector<ScottMapRow> rows;
    for (long i = 0; i <= max_interior; ++i) {
        for (long b = 0; b <= max_boundary; ++b) {
            rows.push_back({i, b, scott_admissible(i, b, false), scott_admissible(i, b, true)});
        }
    }
    return rows;
}

std::string scott_map_csv(long max_interior, long max_boundary, bool include_pips) {
    std::ostringstream out;
    out << (include_pips ? "I,b,realizable_integral,realizable_pip_known\n"
                         : "I,b,realizable_integral\n");
    for (const ScottMapRow& row : scott_map(max_interior, max_boundary)) {
        out << row.interior << ',' << row.boundary << ',' << (row.realizable_integral ? 1 : 0);
        if (include_pips) out << ',' << (row.realizable_pip_known ? 1 : 0);
        out << '\n';
    }
    return out.str();
}

std::vector<std::array<long, 2>> realized_integral_pairs(long max_interior, long max_boundary,
                                                         long max_bbox) {
    if (max_interior < 0) {
        throw InvalidParameter("interior bound must be nonnegative");
    }
    std::set<std::array<long, 2>> pairs;
    EnumBounds eb;
    eb.max_boundary = max_boundary;
    eb.max_width = max_bbox;
    eb.max_height = max_bbox;
    eb.max_twice_area = 2 * max_interior + max_boundary - 2;
    enumerate_lattice_polygons(eb, [&](const LatticePolygonSummary& s) {
        if (s.interior <= max_interior) {
            pairs.insert({s.interior, s.boundary});
        }
        return true;
    });
    return {pairs.begin(), pairs.end()};
}

} // namespace ehrhart_lab
