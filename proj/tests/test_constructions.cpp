#include <doctest.h>

#include <ehrhart_lab/constructions.hpp>
#include <ehrhart_lab/errors.hpp>
#include <ehrhart_lab/lattice_count.hpp>

#include "test_util.hpp"

using namespace ehrhart_lab;
using test_util::poly;
using test_util::pt;

TEST_CASE("scott polygons carry the requested counts") {
    const long cases[][2] = {{0, 3}, {0, 5}, {0, 12}, {1, 9}, {1, 3}, {2, 10}, {3, 12}, {4, 7}};
    for (const auto& c : cases) {
        const RationalPolygon p = scott_polygon(c[0], c[1]);
        const BoundaryInteriorCounts bi = boundary_interior(p);
        CHECK(bi.interior == c[0]);
        CHECK(bi.boundary == c[1]);
    }
}

TEST_CASE("scott rejects pairs outside the admissible region") {
    CHECK_THROWS_AS((void)scott_polygon(1, 10), NotAdmissible);
    CHECK_THROWS_AS((void)scott_polygon(0, 2), NotAdmissible);
    CHECK_THROWS_AS((void)scott_polygon(2, 11), NotAdmissible);
    CHECK_THROWS_AS((void)scott_polygon(3, 1), NotAdmissible);
}

TEST_CASE("every admissible pair up to (6, 18) is realized") {
    for (long interior = 0; interior <= 6; ++interior) {
        for (long boundary = 3; boundary <= 18; ++boundary) {
            if (!scott_admissible(interior, boundary, false)) continue;
            const RationalPolygon p = scott_polygon(interior, boundary);
            const BoundaryInteriorCounts bi = boundary_interior(p);
            REQUIRE(bi.interior == interior);
            REQUIRE(bi.boundary == boundary);
        }
    }
}

TEST_CASE("the boundary-two family") {
    const ConstructionCertificate one = pip_b2(1);
    CHECK(one.polygon ==
          poly({pt(0, 0), pt(2, 0), pt(1, rat(1, 2)), pt(1, rat(-1, 2))}));
    CHECK(one.verified);
    CHECK(std::get<CountClaim>(one.claim) == CountClaim{1, 2});

    const ConstructionCertificate five = pip_b2(5);
    CHECK(five.polygon ==
          poly({pt(0, 0), pt(6, 0), pt(1, rat(5, 6)), pt(1, rat(-5, 6))}));
    CHECK(five.verified);
    CHECK(std::get<CountClaim>(five.claim) == CountClaim{5, 2});
}

TEST_CASE("the boundary-one family") {
    const ConstructionCertificate one = pip_b1(1);
    CHECK(one.polygon == poly({pt(0, -1), pt(rat(1, 3), rat(2, 3)), pt(rat(-1, 3), rat(1, 3))}));
    CHECK(one.verified);
    CHECK(std::get<CountClaim>(one.claim) == CountClaim{1, 1});

    const ConstructionCertificate three = pip_b1(3);
    CHECK(three.polygon ==
          poly({pt(0, -1), pt(rat(5, 7), rat(30, 7)), pt(rat(-5, 7), rat(5, 7))}));
    CHECK(three.verified);
    CHECK(std::get<CountClaim>(three.claim) == CountClaim{3, 1});

    CHECK_THROWS_AS((void)pip_b1(0), InvalidParameter);
    CHECK_THROWS_AS((void)pip_b2(0), InvalidParameter);
}

TEST_CASE("pipeline stages preserve counts and end at the b=1 triangle") {
    for (long interior = 1; interior <= 2; ++interior) {
        const std::vector<RegionExpression> stages = pip_b1_pipeline(interior);
        REQUIRE(stages.size() == 4);
        for (long n = 1; n <= 8; ++n) {
            const long long reference = count_region(stages[0], n);
            for (std::size_t k = 1; k < stages.size(); ++k) {
                REQUIRE(count_region(stages[k], n) == reference);
            }
        }
    }
    // The semi-open start region holds exactly I + b points at n = 1.
    const std::vector<RegionExpression> one = pip_b1_pipeline(1);
    CHECK(count_region(one[0], 1) == 2);
    // Final stage counts match the certificate polygon.
    const RationalPolygon target = pip_b1(1).polygon;
    for (long n = 1; n <= 8; ++n) {
        CHECK(count_region(one[3], n) == count_lattice_points(target, n));
    }
}

TEST_CASE("intermediate pipeline stages match the displayed regions") {
    const std::vector<RegionExpression> stages = pip_b1_pipeline(1);

    // Second stage: conv{(1,0),(0,1/2),(-1,0)} minus the half-open segment
    // ((0,0),(1,0)]. The stage is stored piecewise, so compare counts.
    RegionExpression t2;
    t2.add(1, poly({pt(1, 0), pt(0, rat(1, 2)), pt(-1, 0)}));
    t2.add(-1, Segment{pt(0, 0), pt(1, 0), Closedness::HalfOpenU});
    for (long n = 1; n <= 10; ++n) {
        CHECK(count_region(stages[1], n) == count_region(t2, n));
    }

    // Third stage: the removed boundary has healed into the closed hull
    // conv{(0,-1),(1/3,1/3),(0,1/2),(-1/3,1/3)}.
    const RationalPolygon t3 =
        poly({pt(0, -1), pt(rat(1, 3), rat(1, 3)), pt(0, rat(1, 2)), pt(rat(-1, 3), rat(1, 3))});
    for (long n = 1; n <= 10; ++n) {
        CHECK(count_region(stages[2], n) == count_lattice_points(t3, n));
    }
    std::vector<Point2> piece_vertices;
    for (const RegionTerm& t : stages[2].terms) {
        if (const auto* p = std::get_if<RationalPolygon>(&t.body)) {
            piece_vertices.insert(piece_vertices.end(), p->vertices.begin(), p->vertices.end());
        }
    }
    CHECK(make_polygon(piece_vertices) == t3);
}

TEST_CASE("heptagon vertices at s = 2 and s = 3") {
    const HeptagonResult two = heptagon_H(2);
    CHECK(two.H == poly({pt(rat(-1, 2), 3), pt(0, 3), pt(1, 2), pt(rat(3, 2), 0), pt(1, -2),
                         pt(0, -3), pt(rat(-1, 2), -3)}));
    REQUIRE(two.H.vertices.size() == 7);

    const HeptagonResult three = heptagon_H(3);
    CHECK(three.H == poly({pt(rat(-1, 3), 7), pt(0, 7), pt(1, 6), pt(rat(7, 3), 0), pt(1, -6),
                           pt(0, -7), pt(rat(-1, 3), -7)}));
    CHECK(three.parts.R == poly({pt(rat(-1, 3), 7), pt(0, 7), pt(0, -7), pt(rat(-1, 3), -7)}));
    CHECK(three.parts.T3 == poly({pt(0, 7), pt(0, -7), pt(rat(7, 3), 0)}));
    CHECK_THROWS_AS((void)heptagon_H(1), InvalidParameter);
}

TEST_CASE("heptagon period sequences") {
    for (long s = 2; s <= 6; ++s) {
        const PeriodSequence ps = period_sequence(ehrhart_qp(heptagon_H(s).H));
        CHECK(ps.s0 == 1);
        CHECK(ps.s1 == s);
        CHECK(ps.s2 == 1);
    }
}

TEST_CASE("heptagon rearrangement gluing identity") {
    for (long s = 2; s <= 4; ++s) {
        const HeptagonResult h = heptagon_H(s);
        const long big = s * (s - 1) + 1;
        // H' = R united with the integral triangle conv{u1, u2, (s,0)}.
        const RationalPolygon hp = poly({pt(rat(-1, s), big), pt(0, big), pt(s, 0),
                                         pt(0, -big), pt(rat(-1, s), -big)});
        const Segment h_seg{pt(rat(1, s), 0), pt(1, 0), Closedness::HalfOpenU};
        for (long n = 1; n <= 12; ++n) {
            CHECK(count_lattice_points(h.H, n) ==
                  count_lattice_points(hp, n) + count_segment(h_seg, n));
        }
        // The rearranged polygon inherits the segment's constant table.
        const QuasiPolynomial qp = ehrhart_qp(hp);
        const QuasiPolynomial seg =
            fit_segment_qp(Segment{pt(0, 0), pt(rat(1, s), 0), Closedness::Closed});
        REQUIRE(qp.period == s);
        CHECK(qp.c0 == seg.c0);
        CHECK(period_sequence(qp).s1 == s);
    }
}

TEST_CASE("the anchored triangle and its generating series") {
    CHECK(triangle_Q(2, pt(0, 0)) == poly({pt(0, 0), pt(1, -1), pt(rat(1, 2), 0)}));
    CHECK(triangle_Q(3, pt(2, 5)) == poly({pt(2, 5), pt(3, 4), pt(rat(7, 3), 5)}));

    for (long r = 2; r <= 6; ++r) {
        const RationalPolygon q = triangle_Q(r, pt(0, 0));
        const PeriodSequence ps = period_sequence(ehrhart_qp(q));
        CHECK(ps.s0 == r);
        CHECK(ps.s1 == 1);
        CHECK(ps.s2 == 1);
    }

    // Coefficients of (1 - z)^-2 (1 - z^r)^-1.
    for (long r = 2; r <= 3; ++r) {
        const RationalPolygon q = triangle_Q(r, pt(0, 0));
        for (long k = 1; k <= 5 * r; ++k) {
            long long expect = 0;
            for (long t = 0; t * r <= k; ++t) {
                expect += k - t * r + 1;
            }
            CHECK(count_lattice_points(q, k) == expect);
        }
    }
}

TEST_CASE("period polygons cover the degenerate axes") {
    const ConstructionCertificate cell = period_polygon(1, 1);
    CHECK(cell.verified);
    CHECK(std::get<PeriodClaim>(cell.claim) == PeriodClaim{1, 1, 1});
    CHECK(boundary_interior(cell.polygon).boundary + boundary_interior(cell.polygon).interior ==
          count_lattice_points(cell.polygon, 1));

    const ConstructionCertificate row = period_polygon(4, 1);
    CHECK(row.verified);
    CHECK(std::get<PeriodClaim>(row.claim) == PeriodClaim{4, 1, 1});

    const ConstructionCertificate col = period_polygon(1, 4);
    CHECK(col.verified);
    CHECK(std::get<PeriodClaim>(col.claim) == PeriodClaim{1, 4, 1});
    CHECK(col.polygon == heptagon_H(4).H);
}

TEST_CASE("the glued period polygon") {
    const ConstructionCertificate c = period_polygon(2, 3);
    CHECK(c.verified);
    CHECK(std::get<PeriodClaim>(c.claim) == PeriodClaim{2, 3, 1});
    // u1 is absorbed: t1, u1, u1 + (1/r, 0) are collinear on y = s(s-1)+1.
    CHECK(c.polygon.vertices.size() == 7);
    CHECK(locate(c.polygon, pt(rat(1, 2), 7)) == Location::Boundary);

    const ConstructionCertificate d = period_polygon(4, 2);
    CHECK(d.verified);
    CHECK(std::get<PeriodClaim>(d.claim) == PeriodClaim{4, 2, 1});

    // Gluing identity: the union counts like H plus Q minus the shared edge.
    const RationalPolygon h = heptagon_H(3).H;
    const RationalPolygon q = triangle_Q(2, pt(0, 7));
    for (long n = 1; n <= 12; ++n) {
        CHECK(count_lattice_points(c.polygon, n) ==
              count_lattice_points(h, n) + count_lattice_points(q, n) - (n + 1));
    }
}
