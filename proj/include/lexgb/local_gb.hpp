#pragma once

#include <vector>

#include "lexgb/bipoly.hpp"

namespace lexgb {

// One element h * g of a lexicographic basis: h in GF(p)[x] monic, g y-monic.
struct GBElement {
    UniPoly h;
    BiPoly g;

    BiPoly expand() const { return g.scale(h); }
};

// Minimal lexicographic Groebner basis (x < y) stored in factored form
// [h1, h2*g2, ..., g_l] with increasing deg_y g_i.  The unit ideal is the
// single element 1.
struct LexGB {
    std::vector<GBElement> elems;

    static LexGB unit(Prime p);
    bool is_unit() const;
    // x-part of the basis: the h of the first element.
    const UniPoly& h1() const { return elems.front().h; }
    std::vector<BiPoly> polys() const;
    // dim k[x,y]/<G>: sum of (d_{i+1} - d_i) * deg h_i over consecutive elements.
    long dim() const;
};

// Output of the last-non-nilpotent search: <u, multiplier*v, multiplier*cofactor>.
struct LnnComponent {
    BiPoly u;            // y-monic
    BiPoly v;            // y-monic, or 0
    UniPoly multiplier;  // 1 when v = 0
    UniPoly cofactor;
    // Degree-condition exceptions: deg u = deg v (i), deg u = deg f1 under (i) (ii),
    // deg u = deg f1 otherwise (iii).
    bool corner_i = false;
    bool corner_ii = false;
    bool corner_iii = false;

    UniPoly modulus() const { return multiplier * cofactor; }
};

// Requires T primary, lc(f1) a unit mod T, f2 != 0 mod T, deg_y f1 >= deg_y f2.
LnnComponent last_non_nil(const BiPoly& f1, const BiPoly& f2, const UniPoly& T);

// Minimal lexGB of <a, b, T> for a primary T.  Requires lc(a) a unit mod T,
// b not nilpotent mod T and deg_y a >= deg_y b.
LexGB subres_to_gb(const BiPoly& a, const BiPoly& b, const UniPoly& T);

}  // namespace lexgb
