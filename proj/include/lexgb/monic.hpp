#pragma once

#include "lexgb/bipoly.hpp"

namespace lexgb {

// Result of the coefficient scan of f modulo a primary T = p^e.
struct WeierstrassScan {
    UniPoly g;      // gcd of T with the coefficients above index d
    int d;          // largest index with c_d a unit mod T, or -1
    UniPoly alpha;  // c_d^-1 mod T when d >= 0, else 0
};

// Scans the coefficients of f (reduced mod T) from the top.  d = -1 iff f is
// nilpotent mod T, in which case g is the gcd of T with all coefficients.
// Requires T a power of an irreducible and f != 0 mod T.
WeierstrassScan weierstrass_form(const BiPoly& f, const UniPoly& T);

struct HenselFactors {
    BiPoly a;  // cofactor
    BiPoly b;  // y-monic factor
};

// Quadratic lifting of f = a*b mod N together with alpha*a + beta*b = 1 mod N,
// repeated until the modulus is N^target_exp (target_exp a power of two).
// Returns the factors reduced mod N^target_exp.
HenselFactors hensel_lift(const BiPoly& f, const BiPoly& a, const BiPoly& b, const BiPoly& alpha,
                          const BiPoly& beta, const UniPoly& N, u64 target_exp);

// Monic b* of y-degree d with <b*, T> = <f, T>.  Requires c_d invertible mod T
// with inverse alpha, the coefficients above d nilpotent mod T, and
// N = gcd(T, c_{d+1}, ..., c_delta) (N = T when d = deg_y f).
BiPoly musser_q(const BiPoly& f, const UniPoly& T, int d, const UniPoly& alpha, const UniPoly& N);

// Smallest eps with T | N^(2^eps), found by squaring N mod T.
int lifting_rounds(const UniPoly& N, const UniPoly& T);

struct MonicPair {
    BiPoly b;   // y-monic
    UniPoly U;  // monic divisor of T with <b, T/U> = <f/U, T/U>
};

// Monic form of f modulo a primary T.  Requires f != 0 mod T.
MonicPair monic_form(const BiPoly& f, const UniPoly& T);

}  // namespace lexgb
