#pragma once

#include <string>
#include <vector>

#include "lexgb/global_gb.hpp"

// Groebner-basis oracles used by the tests.  The computation pipeline never
// calls into this header.
namespace lexgb {

// Exponents of x^x y^y; lex order with x < y.
struct Monomial {
    int x;
    int y;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

bool mono_less(const Monomial& a, const Monomial& b);

// Leading monomial for lex x < y.  Requires f != 0.
Monomial leading_monomial(const BiPoly& f);

// Reduced lexicographic Groebner basis of <gens>, sorted by increasing
// leading monomial with monic leading terms.  [1] for the unit ideal and the
// empty list for the zero ideal.
std::vector<BiPoly> buchberger_lex(const std::vector<BiPoly>& gens);

// Fully reduced remainder of f by the list G.  Zero iff f is in <G> when G is
// a Groebner basis.
BiPoly normal_form(const BiPoly& f, const std::vector<BiPoly>& G);

// Reduced basis of the ideal of a minimal lexGB, by inter-reduction.
LexGB reduce_gb(const LexGB& G);

struct LazardReport {
    bool ok = false;       // the list is a lexGB
    bool minimal = false;  // and it is minimal
    std::string failure;   // first failed condition when !ok
};

// Structural test of a candidate lexGB [h1, h2*g2, ..., g_l] sorted by deg_y.
// Throws ContractViolation when the y-leading coefficient of an element does
// not divide it.
LazardReport lazard_check(const std::vector<BiPoly>& G);
LazardReport lazard_check(const LexGB& G);

// Extension test: given a lexGB L and g of larger y-degree, [h0*f : f in L]
// cat [g] is a lexGB iff g lies in <L>.
bool lazard_extension_ok(const std::vector<BiPoly>& L, const BiPoly& g);

// dim k[x,y]/<G> by enumerating the monomials under the staircase of the
// expanded basis.  Throws ContractViolation when G is not zero-dimensional.
long staircase_dim(const LexGB& G);

// Same count by enumerating the monomials outside the leading-term ideal of
// a Groebner basis.
long staircase_dim(const std::vector<BiPoly>& G);

// Every oracle element of <gens> reduces to 0 modulo each member, the member
// x-parts are pairwise coprime and the dimensions add up.
bool verify_product(const GBFamily& family, const std::vector<BiPoly>& gens);

// Reduced bases of <A> and <B> coincide.
bool ideals_equal(const std::vector<BiPoly>& A, const std::vector<BiPoly>& B);

// Generators of the product ideal <A><B>.
std::vector<BiPoly> ideal_product(const std::vector<BiPoly>& A, const std::vector<BiPoly>& B);

// prod (I_l + <g>) = (prod I_l) + <g>.  Throws ContractViolation when the
// x-contractions of the I_l are not pairwise coprime.
bool appendix_identity_check(const std::vector<std::vector<BiPoly>>& ideals, const BiPoly& g);

}  // namespace lexgb
