#include "ehrhart_lab/enumerate.hpp"

#include "ehrhart_lab/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace ehrhart_lab {

namespace {

using Vec = std::array<long, 2>;

long icross(const Vec& a, const Vec& b) { return a[0] * b[1] - a[1] * b[0]; }

// Angular order starting at (1, 0) and sweeping counterclockwise.
bool angle_less(const Vec& a, const Vec& b) {
    const auto half = [](const Vec& v) { return v[1] < 0 || (v[1] == 0 && v[0] < 0) ? 1 : 0; };
    const int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return icross(a, b) > 0;
}

struct Search {
    const EnumBounds& bounds;
    const std::function<bool(const LatticePolygonSummary&)>& visit;
    std::vector<Vec> dirs;
    std::vector<Vec> chain; // direction-change vertices of the partial walk
    bool stopped = false;

    Search(const EnumBounds& b, const std::function<bool(const LatticePolygonSummary&)>& v)
        : bounds(b), visit(v) {
        for (long dx = -b.max_width; dx <= b.max_width; ++dx) {
            for (long dy = -b.max_height; dy <= b.max_height; ++dy) {
                if (dx == 0 && dy == 0) continue;
                if (std::gcd(std::labs(dx), std::labs(dy)) != 1) continue;
                dirs.push_back(Vec{dx, dy});
            }
        }
        std::sort(dirs.begin(), dirs.end(), angle_less);
        chain.push_back(Vec{0, 0});
    }

    void emit(long steps) {
        // Require a genuinely two-dimensional cycle.
        if (chain.size() < 4) return; // origin + at least 3 direction changes
        LatticePolygonSummary out;
        const std::size_t m = chain.size() - 1; // last chain entry is the origin again
        long twice_area = 0;
        long min_x = 0, min_y = 0;
        for (std::size_t i = 0; i < m; ++i) {
            twice_area += icross(chain[i], chain[(i + 1) % m]);
            min_x = std::min(min_x, chain[i][0]);
            min_y = std::min(min_y, chain[i][1]);
        }
        if (twice_area <= 0) return;
        if (bounds.max_twice_area > 0 && twice_area > bounds.max_twice_area) return;
        out.vertices.reserve(m);
        long max_x = 0, max_y = 0;
        for (std::size_t i = 0; i < m; ++i) {
            out.vertices.push_back(Vec{chain[i][0] - min_x, chain[i][1] - min_y});
            max_x = std::max(max_x, out.vertices.back()[0]);
            max_y = std::max(max_y, out.vertices.back()[1]);
        }
        out.twice_area = twice_area;
        out.boundary = steps;
        out.interior = (twice_area - steps + 2) / 2;
        out.width = max_x;
        out.height = max_y;
        if (!visit(out)) stopped = true;
    }

    void dfs(std::size_t idx, Vec pos, long steps, long min_x, long max_x, long min_y,
             long max_y, long area2) {
        if (stopped) return;
        if (pos[0] == 0 && pos[1] == 0 && steps > 0) {
            // A later re-closure is impossible once the walk returns to the
            // start, so emit and stop this branch.
            if (steps >= 3 && (bounds.exact_boundary == 0 || steps == bounds.exact_boundary)) {
                emit(steps);
            }
            return;
        }
        if (idx == dirs.size()) return;
        if (steps > 0 || pos[0] != 0 || pos[1] != 0) {
            // Feasibility of closing: enough budget and, when the remaining
            // directions span less than a half turn, the return vector must
            // lie in their cone.
            const long budget = bounds.max_boundary - steps;
            const Vec back{-pos[0], -pos[1]};
            if (std::labs(back[0]) > budget * bounds.max_width ||
                std::labs(back[1]) > budget * bounds.max_height) {
                return;
            }
            const Vec& first = dirs[idx];
            const Vec& last = dirs.back();
            if (icross(first, last) > 0 || (icross(first, last) == 0 && idx + 1 == dirs.size())) {
                if (icross(first, back) < 0 || icross(back, last) < 0) return;
            }
        }
        dfs(idx + 1, pos, steps, min_x, max_x, min_y, max_y, area2);
        if (stopped) return;
        const Vec d = dirs[idx];
        // Shoelace contribution of the segment pos -> pos + k*d. Partial sums
        // are monotone along any walk that closes counterclockwise (the start
        // vertex sees the polygon star-shaped), so exceeding the area cap
        // rules out every completion of this branch.
        const long seg_cross = icross(pos, d);
        Vec q = pos;
        for (long k = 1; steps + k <= bounds.max_boundary; ++k) {
            q[0] += d[0];
            q[1] += d[1];
            const long narea2 = area2 + k * seg_cross;
            if (bounds.max_twice_area > 0 && narea2 > bounds.max_twice_area) break;
            const long nmin_x = std::min(min_x, q[0]);
            const long nmax_x = std::max(max_x, q[0]);
            const long nmin_y = std::min(min_y, q[1]);
            const long nmax_y = std::max(max_y, q[1]);
            if (nmax_x - nmin_x > bounds.max_width || nmax_y - nmin_y > bounds.max_height) break;
            chain.push_back(q);
            dfs(idx + 1, q, steps + k, nmin_x, nmax_x, nmin_y, nmax_y, narea2);
            chain.pop_back();
            if (stopped) return;
        }
    }
};

} // namespace

void enumerate_lattice_polygons(const EnumBounds& bounds,
                                const std::function<bool(const LatticePolygonSummary&)>& visit) {
    if (bounds.max_boundary < 3 || bounds.max_width < 1 || bounds.max_height < 1) {
        throw InvalidParameter("enumeration bounds must allow a triangle");
    }
    if (bounds.exact_boundary > bounds.max_boundary) {
        throw InvalidParameter("exact boundary target exceeds the boundary bound");
    }
    Search search(bounds, visit);
    search.dfs(0, {0, 0}, 0, 0, 0, 0, 0, 0);
}

} // namespace ehrhart_lab
