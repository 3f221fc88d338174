#include "ehrhart_lab/ehrhart.hpp"

#include "ehrhart_lab/errors.hpp"
#include "ehrhart_lab/lattice_count.hpp"
#include "ehrhart_lab/threads.hpp"

#include <exception>
#include <stdexcept>
#include <variant>

namespace ehrhart_lab {

namespace {

void fit_polygon_residue(const RationalPolygon& p, long D, long rho, QuasiPolynomial& q) {
    const long n1 = rho == 0 ? D : rho;
    const Rational L1 = rat(count_lattice_points(p, n1));
    const Rational L2 = rat(count_lattice_points(p, n1 + D));
    const Rational L3 = rat(count_lattice_points(p, n1 + 2 * D));
    const Rational rD = rat(D);
    const Rational c2 = (L3 - 2 * L2 + L1) / (2 * rD * rD);
    const Rational c1 = (L2 - L1) / rD - c2 * rat(2 * n1 + D);
    const Rational c0 = L1 - c1 * rat(n1) - c2 * rat(n1) * rat(n1);
    q.c0[rho] = c0;
    q.c1[rho] = c1;
    q.c2[rho] = c2;
}

void verify_polygon_fit(const QuasiPolynomial& q, const RationalPolygon& p, long D) {
    const Rational A = area(p);
    for (long rho = 0; rho < D; ++rho) {
        if (q.c2[rho] != A) {
            throw FitVerificationFailure("leading coefficient differs from the area");
        }
    }
    for (long n = 3 * D + 1; n <= 4 * D; ++n) {
        if (q.evaluate(n) != rat(count_lattice_points(p, n))) {
            throw FitVerificationFailure("fitted value disagrees with a verification count");
        }
    }
}

QuasiPolynomial empty_tables(long D) {
    QuasiPolynomial q;
    q.period = D;
    q.c0.resize(static_cast<std::size_t>(D));
    q.c1.resize(static_cast<std::size_t>(D));
    q.c2.resize(static_cast<std::size_t>(D));
    return q;
}

long minimal_table_period(const std::vector<Rational>& table, long D) {
    for (long s = 1; s <= D; ++s) {
        if (D % s != 0) continue;
        bool invariant = true;
        for (long i = 0; i < D && invariant; ++i) {
            invariant = table[i] == table[(i + s) % D];
        }
        if (invariant) return s;
    }
    return D;
}

} // namespace

Rational QuasiPolynomial::evaluate(long n) const {
    const long rho = ((n % period) + period) % period;
    const Rational rn = rat(n);
    return c0[rho] + c1[rho] * rn + c2[rho] * rn * rn;
}

QuasiPolynomial ehrhart_qp_serial(const RationalPolygon& p) {
    const long D = to_long(denominator_lcm(p));
    QuasiPolynomial q = empty_tables(D);
    for (long rho = 0; rho < D; ++rho) {
        fit_polygon_residue(p, D, rho, q);
    }
    verify_polygon_fit(q, p, D);
    return q;
}

QuasiPolynomial ehrhart_qp(const RationalPolygon& p) {
    const long D = to_long(denominator_lcm(p));
    QuasiPolynomial q = empty_tables(D);
#if defined(EHRHART_LAB_HAVE_OPENMP)
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) num_threads(thread_cap())
    for (long rho = 0; rho < D; ++rho) {
        try {
            fit_polygon_residue(p, D, rho, q);
        } catch (...) {
#pragma omp critical(ehrhart_fit_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
#else
    for (long rho = 0; rho < D; ++rho) {
        fit_polygon_residue(p, D, rho, q);
    }
#endif
    verify_polygon_fit(q, p, D);
    return q;
}

QuasiPolynomial fit_segment_qp(const Segment& s) {
    const long D = to_long(lcm(point_denominator(s.u), point_denominator(s.v)));
    QuasiPolynomial q = empty_tables(D);
    for (long rho = 0; rho < D; ++rho) {
        const long n1 = rho == 0 ? D : rho;
        const Rational L1 = rat(count_segment(s, n1));
        const Rational L2 = rat(count_segment(s, n1 + D));
        const Rational c1 = (L2 - L1) / rat(D);
        q.c0[rho] = L1 - c1 * rat(n1);
        q.c1[rho] = c1;
        q.c2[rho] = rat(0);
    }
    for (long n = 2 * D + 1; n <= 3 * D; ++n) {
        if (q.evaluate(n) != rat(count_segment(s, n))) {
            throw FitVerificationFailure("segment fit disagrees with a verification count");
        }
    }
    return q;
}

PeriodSequence period_sequence(const QuasiPolynomial& q) {
    PeriodSequence ps;
    ps.s0 = minimal_table_period(q.c0, q.period);
    ps.s1 = minimal_table_period(q.c1, q.period);
    ps.s2 = minimal_table_period(q.c2, q.period);
    ps.quasi_period = to_long(lcm(lcm(Integer(ps.s0), Integer(ps.s1)), Integer(ps.s2)));
    return ps;
}

IndexSequence index_sequence(const RationalPolygon& p) {
    IndexSequence ix;
    ix.j0 = to_long(denominator_lcm(p));
    Integer j1(1);
    const auto& vs = p.vertices;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const EdgeLine line = edge_line(vs[i], vs[(i + 1) % vs.size()]);
        j1 = lcm(j1, den(line.c));
    }
    ix.j1 = to_long(j1);
    ix.j2 = 1;
    return ix;
}

PipReport pip_report(const RationalPolygon& p) {
    PipReport r;
    const QuasiPolynomial q = ehrhart_qp(p);
    r.is_pip = period_sequence(q).quasi_period == 1;
    const BoundaryInteriorCounts bi = boundary_interior(p);
    r.pick_defect = area(p) - (rat(bi.interior) + rat(bi.boundary) / 2 - 1);
    r.boundary_scaling_ok = true;
    for (long n = 1; n <= 2 * q.period && r.boundary_scaling_ok; ++n) {
        const long long bn = boundary_interior(dilate(p, n)).boundary;
        r.boundary_scaling_ok = bn == n * bi.boundary;
    }
    return r;
}

bool scott_admissible(long interior_points, long boundary_points, bool allow_pip_extension) {
    const long I = interior_points;
    const long b = boundary_points;
    if (I < 0 || b < 0) return false;
    if (b >= 3 && (I == 0 || (I == 1 && b == 9) || b <= 2 * I + 6)) return true;
    return allow_pip_extension && (b == 1 || b == 2) && I >= 1;
}

ClosedForms closed_forms(long s, long m) {
    if (s < 1 || m < 1) {
        throw InvalidParameter("closed forms require s >= 1 and m >= 1");
    }
    ClosedForms cf;
    cf.segment_qp = empty_tables(s);
    cf.rectangle_qp = empty_tables(s);
    for (long rho = 0; rho < s; ++rho) {
        const Rational cl0 = 1 - rat(rho, s); // floor(n/s) - n/s + 1 at n = rho (mod s)
        cf.segment_qp.c0[rho] = cl0;
        cf.segment_qp.c1[rho] = rat(1, s);
        cf.segment_qp.c2[rho] = rat(0);
        cf.rectangle_qp.c0[rho] = cl0;
        cf.rectangle_qp.c1[rho] = rat(m) * cl0 + rat(1, s);
        cf.rectangle_qp.c2[rho] = rat(m, s);
    }
    return cf;
}

bool mcmullen_check(const RationalPolygon& p) {
    const PeriodSequence s = period_sequence(ehrhart_qp(p));
    const IndexSequence j = index_sequence(p);
    return j.j0 % s.s0 == 0 && j.j1 % s.s1 == 0 && j.j2 % s.s2 == 0;
}

bool integral_hull_proposition_check(const RationalPolygon& p) {
    const HullResult h = integral_hull(p);
    const auto* hull = std::get_if<RationalPolygon>(&h);
    if (hull == nullptr) return true;
    const BoundaryInteriorCounts bi = boundary_interior(*hull);
    if (bi.interior < 1) return true;
    return (bi.interior == 1 && bi.boundary == 9) || bi.boundary <= 2 * bi.interior + 6;
}

} // namespace ehrhart_lab
