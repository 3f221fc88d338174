#pragma once

#include "ehrhart_lab/geometry.hpp"
#include "ehrhart_lab/rational.hpp"

#include <vector>

namespace ehrhart_lab {

// L(n) = c0(n) + c1(n) n + c2(n) n^2 with coefficient tables indexed by
// n mod period. Degree-1 cases (segments) reuse the type with c2 = 0.
struct QuasiPolynomial {
    long period = 1;
    std::vector<Rational> c0, c1, c2;

    Rational evaluate(long n) const;

    bool operator==(const QuasiPolynomial& o) const {
        return period == o.period && c0 == o.c0 && c1 == o.c1 && c2 == o.c2;
    }
};

// Minimal periods of the three coefficient tables; each divides the fitting
// period, and their lcm is the quasi-period (1 for a PIP).
struct PeriodSequence {
    long s0 = 1, s1 = 1, s2 = 1;
    long quasi_period = 1;

    bool operator==(const PeriodSequence& o) const = default;
};

// j_i = least k > 0 such that every i-dimensional face of kP spans a lattice
// affine subspace; j2 | j1 | j0 and j2 = 1 in the plane.
struct IndexSequence {
    long j0 = 1, j1 = 1, j2 = 1;

    bool operator==(const IndexSequence& o) const = default;
};

struct PipReport {
    bool is_pip = false;
    Rational pick_defect;
    bool boundary_scaling_ok = false;
};

struct ClosedForms {
    QuasiPolynomial segment_qp;   // [0, 1/s], degree 1
    QuasiPolynomial rectangle_qp; // [0, 1/s] x [0, m]
};

// Exact fit with period D = lcm of vertex coordinate denominators: per
// residue rho, solve the 3x3 system through counts at {rho', rho'+D,
// rho'+2D} (rho' = rho if rho >= 1 else D), then verify every n in
// (3D, 4D] and that c2 is constant equal to the area. The default entry
// point fits residues in parallel; the _serial variant is the reference
// implementation and must agree exactly.
QuasiPolynomial ehrhart_qp(const RationalPolygon& p);
QuasiPolynomial ehrhart_qp_serial(const RationalPolygon& p);

// Degree-1 fit for segment counts n -> |nS meet Z^2|, verified on (2D, 3D].
QuasiPolynomial fit_segment_qp(const Segment& s);

PeriodSequence period_sequence(const QuasiPolynomial& q);

IndexSequence index_sequence(const RationalPolygon& p);

// is_pip <=> quasi-period 1; pick_defect = area - (I + b/2 - 1);
// boundary_scaling_ok checks b(nP) = n b(P) for n up to 2D.
PipReport pip_report(const RationalPolygon& p);

// Admissibility of (I, b) as (interior, boundary) counts of a convex lattice
// polygon: b >= 3 and I = 0, (I, b) = (1, 9), or b <= 2I + 6. With the
// extension flag, additionally b in {1, 2} with I >= 1 (rational PIPs).
bool scott_admissible(long interior_points, long boundary_points,
                      bool allow_pip_extension);

// Closed-form tables for the segment [0, 1/s] and rectangle [0,1/s] x [0,m].
ClosedForms closed_forms(long s, long m);

// s_i divides j_i for i = 0, 1, 2.
bool mcmullen_check(const RationalPolygon& p);

// If the integral hull is 2-dimensional with an interior lattice point, its
// (I, b) must satisfy the unextended admissibility bound; vacuous otherwise.
bool integral_hull_proposition_check(const RationalPolygon& p);

} // namespace ehrhart_lab
