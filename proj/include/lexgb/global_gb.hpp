#pragma once

#include <string>
#include <vector>

#include "lexgb/local_gb.hpp"

namespace lexgb {

using LnnD5Component = LnnComponent;

// Pairwise coprime lexGBs whose ideals multiply to the input ideal.  The
// unit ideal is the family holding the single unit basis.
struct GBFamily {
    std::vector<LexGB> members;

    bool is_unit() const { return members.size() == 1 && members[0].is_unit(); }
};

// Last-non-nilpotent search over a general monic T, splitting T where a
// leading coefficient is neither a unit nor nilpotent.  Components satisfy
// <f1, f2, T> ~ prod <u, multiplier*v, multiplier*cofactor>.
// Requires lc(f1) a unit mod T, f2 != 0 and deg_y f1 >= deg_y f2.
std::vector<LnnD5Component> last_non_nil_d5(const BiPoly& f1, const BiPoly& f2, const UniPoly& T);

// Family of minimal lexGBs for <a, b, T>.  Requires lc(a) a unit mod T,
// b != 0 and deg_y a >= deg_y b.
GBFamily subres_to_gb_aux(const BiPoly& a, const BiPoly& b, const UniPoly& T);

// Family of pairwise coprime minimal lexGBs with product <a, b, T>.
// Throws AssumptionHViolated when a or b is nilpotent modulo some primary
// factor of T (detected while making them monic).
GBFamily subres_to_gb_d5(const BiPoly& a, const BiPoly& b, const UniPoly& T);

// Deterministic member order: by deg h1, then by the coefficients of h1.
void sort_family(GBFamily& family);

// Structural checks that need no Groebner computation.  Returns an empty
// string when all hold, otherwise a description of the first failure.
//  (i)  the h1 are pairwise coprime and their product divides T;
//  (ii) within a member, the h of all but the last element share one squarefree part.
std::string check_family_structure(const GBFamily& family, const UniPoly& T);

}  // namespace lexgb
