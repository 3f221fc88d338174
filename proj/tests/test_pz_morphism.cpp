#include <doctest.h>

#include <ehrhart_lab/constructions.hpp>
#include <ehrhart_lab/errors.hpp>
#include <ehrhart_lab/lattice_count.hpp>
#include <ehrhart_lab/pz_morphism.hpp>

#include "test_util.hpp"

#include <random>

using namespace ehrhart_lab;
using test_util::diamond;
using test_util::poly;
using test_util::pt;

TEST_CASE("lattice lengths and primitive generators") {
    const LatticeDirection a = lattice_length(pt(3, 0));
    CHECK(a.lambda == rat(3));
    CHECK(a.r_p == pt(1, 0));

    const LatticeDirection b = lattice_length(pt(rat(2, 3), rat(4, 3)));
    CHECK(b.lambda == rat(2, 3));
    CHECK(b.r_p == pt(1, 2));

    const LatticeDirection c = lattice_length(pt(rat(1, 2), rat(1, 3)));
    CHECK(c.lambda == rat(1, 6));
    CHECK(c.r_p == pt(3, 2));

    const LatticeDirection d = lattice_length(pt(rat(3, 2), rat(9, 4)));
    CHECK(d.lambda == rat(3, 4));
    CHECK(d.r_p == pt(2, 3));

    const LatticeDirection e = lattice_length(pt(rat(-1, 2), 0));
    CHECK(e.lambda == rat(1, 2));
    CHECK(e.r_p == pt(-1, 0));

    CHECK_THROWS_AS((void)lattice_length(pt(0, 0)), ZeroVector);
}

TEST_CASE("lattice length scales linearly and r = lambda r_p") {
    const Point2 dirs[] = {pt(rat(2, 3), rat(4, 3)), pt(rat(1, 2), rat(1, 3)), pt(-3, 5),
                           pt(rat(-7, 6), rat(7, 4))};
    for (const Point2& r : dirs) {
        const LatticeDirection d = lattice_length(r);
        CHECK(d.lambda * d.r_p.x == r.x);
        CHECK(d.lambda * d.r_p.y == r.y);
        CHECK(d.lambda > 0);
        CHECK(gcd(num(d.r_p.x), num(d.r_p.y)) == 1);
        for (long m = 2; m <= 4; ++m) {
            CHECK(lattice_length(rat(m) * r).lambda == rat(m) * d.lambda);
            CHECK(lattice_length(rat(m) * r).r_p == d.r_p);
        }
    }
}

TEST_CASE("skew matrices of the generator directions") {
    const Mat2 a = skew_matrix(pt(1, 0));
    CHECK(a == Mat2{rat(1), rat(1), rat(0), rat(1)});
    const Mat2 b = skew_matrix(pt(0, -1));
    CHECK(b == Mat2{rat(1), rat(0), rat(-1), rat(1)});
    const Mat2 m = skew_matrix(pt(1, -2));
    CHECK(m == Mat2{rat(3), rat(1), rat(-4), rat(-1)});
    CHECK_THROWS_AS((void)skew_matrix(pt(0, 0)), ZeroVector);
}

TEST_CASE("skew matrices are unimodular, ray-determined, and fix the line") {
    const Point2 dirs[] = {pt(1, 0), pt(0, -1), pt(1, -2), pt(rat(2, 3), rat(4, 3)),
                           pt(rat(-3, 2), rat(5, 4))};
    for (const Point2& r : dirs) {
        const Mat2 u = skew_matrix(r);
        CHECK(u.det() == rat(1));
        CHECK(is_unimodular(u));
        CHECK(u == skew_matrix(rat(2) * r));
        const LatticeDirection d = lattice_length(r);
        CHECK(u.apply(d.r_p) == d.r_p);
        CHECK(u.apply(rat(-5, 2) * r) == rat(-5, 2) * r);
    }
}

TEST_CASE("piecewise application preserves counts on both sides of the cut") {
    const PiecewiseSkewMap map = linear_skew(pt(1, 0), SkewSign::Plus, 2);
    const RegionExpression image = apply_piecewise(diamond(), map);
    for (long n = 1; n <= 8; ++n) {
        CHECK(count_region(image, n) == count_lattice_points(diamond(), n));
    }
}

TEST_CASE("a cut line missing the polygon transforms it in one piece") {
    const RationalPolygon high = poly({pt(0, 2), pt(2, 2), pt(1, 3)});
    const PiecewiseSkewMap map = linear_skew(pt(1, 0), SkewSign::Plus, 1);
    const RegionExpression image = apply_piecewise(high, map);
    const Mat2 a = skew_matrix(pt(1, 0));
    bool saw_image = false;
    for (const RegionTerm& t : image.terms) {
        if (const auto* p = std::get_if<RationalPolygon>(&t.body)) {
            if (*p == apply(a, high)) saw_image = t.multiplicity == 1;
        }
    }
    CHECK(saw_image);
    for (long n = 1; n <= 6; ++n) {
        CHECK(count_region(image, n) == count_lattice_points(high, n));
    }
}

TEST_CASE("minus maps use the inverse on the nonpositive side") {
    const RationalPolygon low = poly({pt(0, -2), pt(2, -2), pt(1, -1)});
    const PiecewiseSkewMap map = linear_skew(pt(1, 0), SkewSign::Minus, 3);
    const RegionExpression image = apply_piecewise(low, map);
    const Mat2 expect = mat_pow(inverse(skew_matrix(pt(1, 0))), 3);
    bool saw_image = false;
    for (const RegionTerm& t : image.terms) {
        if (const auto* p = std::get_if<RationalPolygon>(&t.body)) {
            if (*p == apply(expect, low)) saw_image = t.multiplicity == 1;
        }
    }
    CHECK(saw_image);
}

TEST_CASE("affine piecewise maps conjugate by the base translation") {
    const RationalPolygon p = poly({pt(2, 1), pt(4, 1), pt(3, 3)});
    // Base u = (3, 1) on the cut line y = 1; p lies on the '+' side, so the
    // image is translate(shear(translate(p, -u)), u) in a single piece.
    const RegionExpression shifted =
        apply_affine_piecewise(p, pt(3, 1), pt(4, 1), SkewSign::Plus, 1);
    const RationalPolygon expect = poly({pt(2, 1), pt(4, 1), pt(5, 3)});
    bool saw = false;
    for (const RegionTerm& t : shifted.terms) {
        if (const auto* q = std::get_if<RationalPolygon>(&t.body)) {
            if (*q == expect) saw = t.multiplicity == 1;
        }
    }
    CHECK(saw);
    for (long n = 1; n <= 6; ++n) {
        CHECK(count_region(shifted, n) == count_lattice_points(p, n));
    }
    CHECK_THROWS_AS(
        (void)apply_affine_piecewise(p, pt(rat(1, 2), 0), pt(1, 0), SkewSign::Plus, 1),
        NonLatticeBase);
}

TEST_CASE("skew map construction rejects bad parameters") {
    CHECK_THROWS_AS((void)apply_piecewise(diamond(), PiecewiseSkewMap{pt(0, 0), pt(0, 0),
                                                                      SkewSign::Plus, 1}),
                    ZeroVector);
    CHECK_THROWS_AS((void)apply_piecewise(diamond(), PiecewiseSkewMap{pt(0, 0), pt(1, 0),
                                                                      SkewSign::Plus, 0}),
                    InvalidParameter);
}

TEST_CASE("heptagon triangle images match the stated vertices") {
    const HeptagonResult h = heptagon_H(3);
    const Point2 u1 = pt(0, 7), u2 = pt(0, -7), v = pt(3, 0), w = pt(rat(7, 3), 0);
    REQUIRE(h.parts.T1 == poly({u1, pt(1, 6), w}));
    REQUIRE(h.parts.T2 == poly({u2, pt(1, -6), w}));

    const RegionExpression img1 = apply_piecewise(h.parts.T1, h.parts.U1);
    const RationalPolygon expect1 = poly({u1, v, w});
    bool saw1 = false;
    for (const RegionTerm& t : img1.terms) {
        if (const auto* p = std::get_if<RationalPolygon>(&t.body)) {
            if (*p == expect1) saw1 = true;
        }
    }
    CHECK(saw1);
    for (long n = 1; n <= 8; ++n) {
        CHECK(count_region(img1, n) == count_lattice_points(h.parts.T1, n));
    }

    const RegionExpression img2 = apply_piecewise(h.parts.T2, h.parts.U2);
    const RationalPolygon expect2 = poly({u2, v, w});
    bool saw2 = false;
    for (const RegionTerm& t : img2.terms) {
        if (const auto* p = std::get_if<RationalPolygon>(&t.body)) {
            if (*p == expect2) saw2 = true;
        }
    }
    CHECK(saw2);
    for (long n = 1; n <= 8; ++n) {
        CHECK(count_region(img2, n) == count_lattice_points(h.parts.T2, n));
    }
}

TEST_CASE("split expressions partition counts") {
    const RationalPolygon p = poly({pt(rat(-3, 2), -1), pt(2, rat(-1, 2)), pt(1, 2), pt(-1, 1)});
    const RegionExpression whole = make_region(p);
    const SplitExpression s = split_expression(whole, pt(0, 0), pt(1, 1));
    for (long n = 1; n <= 8; ++n) {
        const long long total = count_lattice_points(p, n);
        CHECK(count_region(s.pos, n) + count_region(s.neg, n) + count_region(s.correction, n) ==
              total);
    }
    // Splitting again along another line stays consistent.
    const SplitExpression s2 = split_expression(s.pos, pt(0, 0), pt(0, 1));
    for (long n = 1; n <= 6; ++n) {
        CHECK(count_region(s2.pos, n) + count_region(s2.neg, n) +
                  count_region(s2.correction, n) ==
              count_region(s.pos, n));
    }
}

TEST_CASE("random piecewise maps preserve counts") {
    std::mt19937_64 rng(77002211u);
    std::uniform_int_distribution<long> coord(-6, 6);
    std::uniform_int_distribution<long> denr(1, 3);
    std::uniform_int_distribution<int> kind(0, 1);
    std::uniform_int_distribution<long> expo(1, 3);
    long done = 0;
    while (done < 50) {
        std::vector<Point2> pts;
        for (int i = 0; i < 5; ++i) {
            pts.push_back(pt(rat(coord(rng), denr(rng)), rat(coord(rng), denr(rng))));
        }
        RationalPolygon p;
        try {
            p = make_polygon(pts);
        } catch (const DegenerateInput&) {
            continue;
        }
        Point2 r = pt(coord(rng), coord(rng));
        if (r == pt(0, 0)) r = pt(1, 0);
        const PiecewiseSkewMap map =
            linear_skew(r, kind(rng) == 0 ? SkewSign::Plus : SkewSign::Minus, expo(rng));
        const RegionExpression image = apply_piecewise(p, map);
        for (long n = 1; n <= 8; ++n) {
            REQUIRE(count_region(image, n) == count_lattice_points(p, n));
        }
        ++done;
    }
}
