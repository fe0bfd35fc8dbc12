#pragma once

#include <utility>
#include <vector>

#include "lexgb/bipoly.hpp"

namespace lexgb {

// The b-component of a: the product of the primary factors of a whose
// irreducible divides b, with their full multiplicity in a.  Returns
// (a_b, a / a_b); the two parts are coprime.  Requires a, b != 0.
std::pair<UniPoly, UniPoly> isol_factor(const UniPoly& a, const UniPoly& b);

// Splitting of T = T1*T2 into the part where f is invertible and the part
// where f is nilpotent.
struct InvNilSplit {
    UniPoly f1;  // f^-1 mod T1, 0 when T1 = 1
    UniPoly T1;
    UniPoly f2;  // f mod T2
    UniPoly T2;
};
// Requires f != 0 and T monic nonconstant.
InvNilSplit invert_nil(const UniPoly& f, const UniPoly& T);

// One branch of the split coefficient scan.
struct ScanBranch {
    BiPoly f;   // f mod T
    UniPoly T;  // branch modulus
    int d;      // largest index with coeff(f, d) a unit mod T, or -1
    UniPoly a;  // coeff(f, d)^-1 mod T, 0 when d = -1
    UniPoly N;  // gcd of T with the coefficients above d
};

// Coefficient scan of f over a general monic T, splitting T whenever a
// coefficient is invertible on one part and nilpotent on the other.  The main
// call uses d = deg_y f and N = T.  Branch moduli are pairwise coprime with
// product T.
std::vector<ScanBranch> weierstrass_form_d5(const BiPoly& f, const UniPoly& T, int d, const UniPoly& N);

// One branch of the split monic form; its modulus is multiplier * cofactor.
// <multiplier*b, modulus> = <f, modulus>.  On a branch where f vanishes
// identically b is 0, the multiplier is 1 and the cofactor is the modulus.
struct MonicBranch {
    BiPoly b;
    UniPoly cofactor;
    UniPoly multiplier;

    UniPoly modulus() const { return multiplier * cofactor; }
};

// Split monic form of f modulo T.  Requires f != 0 and T monic nonconstant.
std::vector<MonicBranch> monic_form_d5(const BiPoly& f, const UniPoly& T);

}  // namespace lexgb
