#pragma once

#include <vector>

#include "lexgb/bipoly.hpp"

namespace lexgb {

// One element F_i of a first-kind subresultant p.r.s.
struct PrsStep {
    BiPoly f;
    int n;      // deg_y f
    UniPoly c;  // normalization constant c_i (meaningful from i = 3 on)
};

enum class PrsStatus {
    Completed,  // the element after the last step is 0
    Blocked,    // the last step has a leading coefficient that is not a unit mod T
};

struct PrsOutcome {
    std::vector<PrsStep> steps;  // steps[0] = F1, steps[1] = F2, ...
    PrsStatus status;
    // Completed: index of the last nonzero step.  Blocked: index of the blocked step.
    size_t last;
};

// Subresultant p.r.s. of f1, f2 computed modulo T.  Stops at the first zero
// remainder or at the first step whose leading coefficient is not invertible
// mod T; that step is computed and returned.
// Requires lc(f1) a unit mod T, f2 != 0 mod T and deg_y f1 >= deg_y f2.
PrsOutcome prs_mod(const BiPoly& f1, const BiPoly& f2, const UniPoly& T);

// Subresultant p.r.s. over GF(p)[x] up to the last nonzero element.
// Requires f1, f2 != 0 and deg_y f1 >= deg_y f2.
std::vector<PrsStep> prs_plain(const BiPoly& f1, const BiPoly& f2);

// Res_y(a, b) in GF(p)[x].  Zero iff a and b share a factor of positive y-degree.
UniPoly resultant_y(const BiPoly& a, const BiPoly& b);

}  // namespace lexgb
