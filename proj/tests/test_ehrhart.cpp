#include <doctest.h>

#include <ehrhart_lab/ehrhart.hpp>
#include <ehrhart_lab/errors.hpp>
#include <ehrhart_lab/lattice_count.hpp>

#include "test_util.hpp"

#include <numeric>

using namespace ehrhart_lab;
using test_util::b1_triangle;
using test_util::b2_quad;
using test_util::poly;
using test_util::pt;
using test_util::unit_square;

namespace {

const RationalPolygon& half_triangle() {
    static const RationalPolygon p = poly({pt(0, 0), pt(1, 0), pt(0, rat(1, 2))});
    return p;
}

} // namespace

TEST_CASE("integral polygons fit with period 1") {
    const QuasiPolynomial tri = ehrhart_qp(poly({pt(0, 0), pt(1, 0), pt(0, 1)}));
    REQUIRE(tri.period == 1);
    CHECK(tri.c0[0] == rat(1));
    CHECK(tri.c1[0] == rat(3, 2));
    CHECK(tri.c2[0] == rat(1, 2));

    const QuasiPolynomial sq = ehrhart_qp(unit_square());
    REQUIRE(sq.period == 1);
    CHECK(sq.c0[0] == rat(1));
    CHECK(sq.c1[0] == rat(2));
    CHECK(sq.c2[0] == rat(1));
}

TEST_CASE("the half triangle fits with period 2") {
    const QuasiPolynomial q = ehrhart_qp(half_triangle());
    REQUIRE(q.period == 2);
    CHECK(q.c2[0] == rat(1, 4));
    CHECK(q.c2[1] == rat(1, 4));
    CHECK(q.c1[0] == rat(1));
    CHECK(q.c1[1] == rat(1));
    CHECK(q.c0[0] == rat(1));
    CHECK(q.c0[1] == rat(3, 4));
    for (long n = 1; n <= 8; ++n) {
        CHECK(q.evaluate(n) == rat(count_lattice_points(half_triangle(), n)));
    }
}

TEST_CASE("a pip fits to a genuine polynomial despite rational vertices") {
    const QuasiPolynomial q = ehrhart_qp(b2_quad());
    for (long n = 1; n <= 8; ++n) {
        CHECK(q.evaluate(n) == rat(n * n + n + 1));
    }
    const PeriodSequence s = period_sequence(q);
    CHECK(s == PeriodSequence{1, 1, 1, 1});
}

TEST_CASE("evaluate agrees with the independent oracle across the fit window") {
    const RationalPolygon samples[] = {half_triangle(), b2_quad(), b1_triangle()};
    for (const RationalPolygon& p : samples) {
        const QuasiPolynomial q = ehrhart_qp(p);
        const long d = to_long(denominator_lcm(p));
        REQUIRE(q.period == d);
        for (long n = 1; n <= 4 * d; ++n) {
            CHECK(q.evaluate(n) == rat(oracle_count(p, n)));
        }
        // Leading table is constant and equals the area.
        for (const Rational& c : q.c2) {
            CHECK(c == area(p));
        }
    }
}

TEST_CASE("parallel fit equals the serial reference exactly") {
    const RationalPolygon samples[] = {
        unit_square(), half_triangle(), b2_quad(), b1_triangle(),
        poly({pt(rat(-5, 6), rat(1, 4)), pt(rat(7, 4), rat(-2, 3)), pt(rat(1, 2), rat(11, 6))})};
    for (const RationalPolygon& p : samples) {
        CHECK(ehrhart_qp(p) == ehrhart_qp_serial(p));
    }
}

TEST_CASE("period sequences of the reference polygons") {
    CHECK(period_sequence(ehrhart_qp(poly({pt(0, 0), pt(1, 0), pt(0, 1)}))) ==
          PeriodSequence{1, 1, 1, 1});
    CHECK(period_sequence(ehrhart_qp(half_triangle())) == PeriodSequence{2, 1, 1, 2});
    // Quasi-period is the lcm of the table periods.
    const PeriodSequence s = period_sequence(ehrhart_qp(b1_triangle()));
    CHECK(s.quasi_period == std::lcm(std::lcm(s.s0, s.s1), s.s2));
}

TEST_CASE("index sequences") {
    CHECK(index_sequence(unit_square()) == IndexSequence{1, 1, 1});
    CHECK(index_sequence(half_triangle()) == IndexSequence{2, 1, 1});
    CHECK(index_sequence(poly({pt(0, 0), pt(1, 0), pt(1, rat(1, 2)), pt(0, rat(1, 2))})) ==
          IndexSequence{2, 2, 1});
    // j2 | j1 | j0 on a few rational polygons.
    const RationalPolygon samples[] = {b2_quad(), b1_triangle(),
                                       poly({pt(rat(1, 6), 0), pt(rat(13, 6), rat(1, 2)),
                                             pt(rat(-1, 3), rat(5, 2))})};
    for (const RationalPolygon& p : samples) {
        const IndexSequence j = index_sequence(p);
        CHECK(j.j0 % j.j1 == 0);
        CHECK(j.j1 % j.j2 == 0);
        CHECK(j.j2 == 1);
    }
}

TEST_CASE("pip reports") {
    const PipReport quad = pip_report(b2_quad());
    CHECK(quad.is_pip);
    CHECK(quad.pick_defect == rat(0));
    CHECK(quad.boundary_scaling_ok);

    const PipReport half = pip_report(half_triangle());
    CHECK(!half.is_pip);

    const PipReport sq = pip_report(unit_square());
    CHECK(sq.is_pip);
    CHECK(sq.pick_defect == rat(0));
    CHECK(sq.boundary_scaling_ok);

    const PipReport tri = pip_report(b1_triangle());
    CHECK(tri.is_pip);
    CHECK(tri.pick_defect == rat(0));
}

TEST_CASE("scott admissibility predicate") {
    CHECK(scott_admissible(0, 3, false));
    CHECK(scott_admissible(0, 100, false));
    CHECK(scott_admissible(1, 9, false));
    CHECK(!scott_admissible(1, 10, false));
    CHECK(scott_admissible(2, 10, false));
    CHECK(!scott_admissible(2, 11, false));
    CHECK(!scott_admissible(1, 2, false));
    CHECK(!scott_admissible(0, 2, false));
    CHECK(!scott_admissible(3, 0, true));
    CHECK(scott_admissible(3, 1, true));
    CHECK(scott_admissible(1, 2, true));
    CHECK(!scott_admissible(0, 1, true));
    CHECK(!scott_admissible(0, 2, true));
    CHECK(scott_admissible(1, 9, true));
    CHECK(!scott_admissible(1, 10, true));
}

TEST_CASE("closed forms for segments and rectangles") {
    const ClosedForms one = closed_forms(1, 1);
    CHECK(one.segment_qp.evaluate(5) == rat(6));
    const ClosedForms three = closed_forms(3, 1);
    CHECK(three.segment_qp.evaluate(1) == rat(1));
    const ClosedForms two = closed_forms(2, 1);
    CHECK(two.rectangle_qp.evaluate(1) == rat(2));
    CHECK_THROWS_AS((void)closed_forms(0, 1), InvalidParameter);

    for (long s = 1; s <= 6; ++s) {
        const Segment seg{pt(0, 0), pt(rat(1, s), 0), Closedness::Closed};
        const QuasiPolynomial fitted = fit_segment_qp(seg);
        for (long m = 1; m <= 3; ++m) {
            const ClosedForms cf = closed_forms(s, m);
            const RationalPolygon rect =
                poly({pt(0, 0), pt(rat(1, s), 0), pt(rat(1, s), m), pt(0, m)});
            const QuasiPolynomial rect_fit = ehrhart_qp(rect);
            for (long n = 1; n <= 4 * s; ++n) {
                CHECK(cf.segment_qp.evaluate(n) == fitted.evaluate(n));
                CHECK(cf.segment_qp.evaluate(n) == rat(count_segment(seg, n)));
                CHECK(cf.rectangle_qp.evaluate(n) == rect_fit.evaluate(n));
                CHECK(cf.rectangle_qp.evaluate(n) == rat(count_lattice_points(rect, n)));
            }
        }
    }
}

TEST_CASE("segment constant terms of the split interval sum to one") {
    for (long s = 2; s <= 12; ++s) {
        const QuasiPolynomial lo =
            fit_segment_qp(Segment{pt(0, 0), pt(rat(1, s), 0), Closedness::Closed});
        const QuasiPolynomial hi =
            fit_segment_qp(Segment{pt(rat(1, s), 0), pt(1, 0), Closedness::HalfOpenU});
        REQUIRE(lo.period == s);
        REQUIRE(hi.period == s);
        for (long r = 0; r < s; ++r) {
            CHECK(lo.c0[r] + hi.c0[r] == rat(1));
            CHECK(lo.c1[r] + hi.c1[r] == rat(1));
        }
    }
}

TEST_CASE("a rectangle glued to an integral block keeps the segment tables") {
    for (long s = 2; s <= 4; ++s) {
        for (long m = 1; m <= 2; ++m) {
            const RationalPolygon glued =
                poly({pt(-1, 0), pt(rat(1, s), 0), pt(rat(1, s), m), pt(-1, m)});
            const QuasiPolynomial q = ehrhart_qp(glued);
            REQUIRE(q.period == s);
            const QuasiPolynomial seg =
                fit_segment_qp(Segment{pt(0, 0), pt(rat(1, s), 0), Closedness::Closed});
            CHECK(q.c0 == seg.c0);
            CHECK(period_sequence(q).s1 == s);
        }
    }
}

TEST_CASE("mcmullen divisibility on reference polygons") {
    const RationalPolygon samples[] = {
        unit_square(), half_triangle(), b2_quad(), b1_triangle(),
        poly({pt(0, 0), pt(1, 0), pt(1, rat(1, 2)), pt(0, rat(1, 2))}),
        poly({pt(rat(-5, 6), rat(1, 4)), pt(rat(7, 4), rat(-2, 3)), pt(rat(1, 2), rat(11, 6))})};
    for (const RationalPolygon& p : samples) {
        CHECK(mcmullen_check(p));
    }
    CHECK(index_sequence(half_triangle()).j0 == 2);
    CHECK(period_sequence(ehrhart_qp(half_triangle())).s0 == 2);
}

TEST_CASE("integral hull proposition") {
    CHECK(integral_hull_proposition_check(poly({pt(0, 0), pt(3, 0), pt(0, 3)})));
    CHECK(integral_hull_proposition_check(unit_square()));
    // Degenerate hull: vacuously true.
    CHECK(integral_hull_proposition_check(b1_triangle()));
    CHECK(integral_hull_proposition_check(b2_quad()));
    // A fat rational polygon whose hull has interior points.
    CHECK(integral_hull_proposition_check(
        poly({pt(rat(-1, 2), rat(-1, 2)), pt(rat(7, 2), 0), pt(0, rat(7, 2))})));
}
