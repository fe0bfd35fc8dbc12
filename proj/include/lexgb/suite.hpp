#pragma once

#include <random>
#include <vector>

#include "lexgb/global_gb.hpp"

namespace lexgb {

// One primary factor (x + shift)^exponent of the suite modulus.  The local
// polynomials are (y + c*r) * prod_{l=1}^{factors} (y + r + r^2 + ... + r^l + l + k*r^(l+1))
// mod r^exponent with r = x + shift, (c, k) = (1, 2) for a and (2, 1) for b.
struct LocalFactor {
    long long shift;
    int exponent;
    int factors;
};

struct SuiteInstance {
    BiPoly a;
    BiPoly b;
    UniPoly T;  // product of the local moduli
};

// Local pair for one factor, reduced mod (x + shift)^exponent.
std::pair<BiPoly, BiPoly> local_pair(const Prime& P, const LocalFactor& f);

// CRT assembly of the local pairs.  Shifts must be distinct mod p.
SuiteInstance assemble(const Prime& P, const std::vector<LocalFactor>& factors);

// Primary factors of a suite instance.  Family 1 has indices 1..16, family 2
// has indices 1..6 (e = 6 + index).  Throws ContractViolation out of range.
std::vector<LocalFactor> family_factors(int family, int index);

SuiteInstance gen_family(int family, int index, const Prime& P);

struct RandomParams {
    int max_deg_y = 4;
    int max_primaries = 3;
    int max_T_degree = 8;
};

// Random system over T = prod (x - r_i)^e_i with a and b not nilpotent
// modulo any (x - r_i)^e_i.  Local parts mix shared and perturbed roots in y
// and nilpotent leading coefficients.
SuiteInstance random_instance(const Prime& P, std::mt19937_64& rng, const RandomParams& rp = {});

// Res_y(a, b) with the power of lc(a) removed that comes from a shared
// leading term: when deg_y a = deg_y b and lc(b) = k*lc(a) for a constant k,
// this is Res_y(a, b - k*a), otherwise Res_y(a, b).  Made monic.  It lies in
// <a, b>.
UniPoly reduced_resultant(const BiPoly& a, const BiPoly& b);

struct SuiteStats {
    long DEG = 0;
    int deg_y = 0;
    int tdeg = 0;
    int deg_resultant = 0;       // of the reduced resultant R
    int deg_resultant_full = 0;  // of Res_y(a, b)
    int deg_mult1 = 0;           // of the simple factors of R
    int deg_multgt1 = 0;         // of the repeated factors of R, with multiplicity
    double avg_multgt1 = 0;      // per irreducible repeated factor, 0 when there is none
    int n_lexgbs = 0;            // members whose x-part meets a repeated factor of R
    double avg_npolys = 0;       // over those members
    int n_members = 0;           // all members
};

struct StatsRun {
    SuiteStats stats;
    UniPoly resultant;  // R
    GBFamily family;    // subres_to_gb_d5(a, b, R)
};

// Table columns for the system (a, b) with T = R.  The multiplicity split
// uses squarefree decomposition, so the average counts irreducible factors
// exactly when every repeated factor is linear.  Throws ContractViolation
// when the resultant vanishes.
StatsRun compute_stats(const BiPoly& a, const BiPoly& b);

}  // namespace lexgb
