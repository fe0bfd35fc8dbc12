#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lexgb/suite.hpp"

namespace lexgb {

enum class ModulusPolicy { Given, Resultant, SqfSplit };

ModulusPolicy parse_policy(const std::string& s);
std::string policy_name(ModulusPolicy p);

// Input system: a[i][j] is the coefficient of y^i x^j, T lists x^j coefficients.
struct Problem {
    Prime p;
    BiPoly a;
    BiPoly b;
    std::optional<UniPoly> T;
    ModulusPolicy policy = ModulusPolicy::Given;
};

struct ResultMember {
    LexGB basis;
    UniPoly modulus;  // the T of the call that produced the member
};

struct Result {
    Prime p;
    std::vector<ResultMember> members;
    std::optional<UniPoly> T;  // full modulus of the run: T, or the resultant
    std::optional<SuiteStats> stats;
    std::map<std::string, long long> timings_us;
};

// JSON text conversions.  Parsing throws ParseError on malformed input.
Problem parse_problem(const std::string& text);
std::string serialize_problem(const Problem& pb);
Result parse_result(const std::string& text);
std::string serialize_result(const Result& r);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

// Runs the pipeline under the problem's policy (or the override).
//  given:     subres_to_gb_d5(a, b, T);
//  resultant: T = Res_y(a, b) made monic;
//  sqf-split: one call per R_i^e_i of the squarefree decomposition of Res_y(a, b).
// Throws ContractViolation when T is missing for the given policy or the
// resultant vanishes.
Result compute_problem(const Problem& pb, std::optional<ModulusPolicy> policy = std::nullopt);

// Family of a result file.
GBFamily family_of(const Result& r);

// Generators of the problem ideal: a, b and T when present.
std::vector<BiPoly> problem_generators(const Problem& pb);

// Generators of the ideal a result claims to decompose: a, b and the run's
// modulus (falling back to the problem's T, then to Res_y(a, b)).
std::vector<BiPoly> result_generators(const Problem& pb, const Result& r);

}  // namespace lexgb
