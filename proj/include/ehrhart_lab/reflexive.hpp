#pragma once

#include "ehrhart_lab/geometry.hpp"
#include "ehrhart_lab/rational.hpp"

#include <vector>

namespace ehrhart_lab {

struct ReflexivityReport {
    bool reflexive = false;
    bool pseudo_reflexive = false;
    bool twelve = false;
};

// One letter B^b A^a of a generator word. The word's letters are stored in
// application order: letters[0] is the rightmost factor of the product
// B^{b_n} A^{a_n} ... B^{b_1} A^{a_1}.
struct WordLetter {
    Rational a;
    long b = 1;

    bool operator==(const WordLetter& o) const { return a == o.a && b == o.b; }
};

struct GeneratorWord {
    std::vector<WordLetter> letters;

    bool operator==(const GeneratorWord& o) const { return letters == o.letters; }
};

struct PathReconstruction {
    std::vector<Point2> vertices;   // v_0 ... v_{n-1}
    std::vector<Point2> directions; // d_0 ... d_{n-1}
    long winding = 0;
};

Mat2 gen_A();
Mat2 gen_B();
Mat2 gen_A_pow(const Rational& a); // [[1, a], [0, 1]]
Mat2 gen_B_pow(const Rational& b); // [[1, 0], [-b, 1]]

// Polar dual: each edge on <nu, x> = c (primitive integer outward normal,
// c > 0 because the origin is interior) contributes the vertex nu / c.
RationalPolygon polar_dual(const RationalPolygon& p);

// reflexive: P and its dual are both integral. pseudo_reflexive: P has
// quasi-period 1 and an integral dual. twelve: b_P + b_dual = 12 (reported
// for every input; a theorem only for reflexive P).
ReflexivityReport reflexivity_report(const RationalPolygon& p);

// Letters read off the boundary starting at the first lattice vertex of the
// canonical cycle: a_i is the lattice length of the edge into v_i, and
// b_i = den(v_i) times the lattice length of the dual edge with outer
// normal v_i. The letters are invariant under lattice automorphisms.
GeneratorWord extract_word(const RationalPolygon& p);

// True when the letters can drive the path recursion: all a_i > 0, b_i >= 1,
// the total of the a_i is an integer, and den(a_1 + ... + a_i)^2 | b_i.
bool word_valid(const GeneratorWord& w);

// Product B^{b_n} A^{a_n} ... B^{b_1} A^{a_1} as an exact rational matrix.
Mat2 word_product(const GeneratorWord& w);

// Run the recursion [v_i; d_i] = B^{b_i} A^{a_i} [v_{i-1}; d_{i-1}] (rows
// stacked, left multiplication) from v_0 = (1, 0), d_0 = (0, 1).
PathReconstruction reconstruct_path(const GeneratorWord& w);

// Winding number about the origin of the closed path through the given
// vertices, by signed crossings of the positive x-axis.
long winding_number(const std::vector<Point2>& path);

// One representative per unimodular equivalence class of reflexive polygons
// (integral, one interior lattice point at the origin, integral dual) found
// by exhaustive enumeration within the bounding-box bound. Deterministic
// order, sorted by the class key.
std::vector<RationalPolygon> reflexive_scan(long max_bbox);

} // namespace ehrhart_lab
