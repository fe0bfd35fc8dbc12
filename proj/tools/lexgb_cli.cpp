// Command-line front end: compute, verify, gen, stats, bench.
//
// Exit codes: 0 success, 2 parse error, 3 contract violation (including a
// violated nilpotency assumption), 4 verification failure, 1 anything else.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lexgb/errors.hpp"
#include "lexgb/io.hpp"
#include "lexgb/verify.hpp"

using namespace lexgb;

namespace {

constexpr int EXIT_PARSE = 2;
constexpr int EXIT_CONTRACT = 3;
constexpr int EXIT_VERIFY = 4;

constexpr u64 DEFAULT_PRIME = 65521;

// "1-4", "2,5,7" or a mix of both.
std::vector<int> parse_indices(const std::string& list) {
    std::vector<int> out;
    std::stringstream ss(list);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty()) continue;
        try {
            const auto dash = part.find('-');
            if (dash == std::string::npos) {
                out.push_back(std::stoi(part));
            } else {
                const int lo = std::stoi(part.substr(0, dash)), hi = std::stoi(part.substr(dash + 1));
                if (hi < lo) throw ParseError("empty index range '" + part + "'");
                for (int i = lo; i <= hi; ++i) out.push_back(i);
            }
        } catch (const std::logic_error&) {
            throw ParseError("bad index list '" + list + "'");
        }
    }
    if (out.empty()) throw ParseError("empty index list");
    return out;
}

std::string stats_header() {
    return "DEG\tdeg_y\ttdeg\tres\tres_full\tm1\tm>1\tavg\t#lexGBs\t(avg polys)\tmembers";
}

std::string stats_row(const SuiteStats& s) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%ld\t%d\t%d\t%d\t%d\t%d\t%d\t%.2f\t%d\t(%.2f)\t%d", s.DEG, s.deg_y, s.tdeg,
                  s.deg_resultant, s.deg_resultant_full, s.deg_mult1, s.deg_multgt1, s.avg_multgt1, s.n_lexgbs,
                  s.avg_npolys, s.n_members);
    return buf;
}

long long median(std::vector<long long> v) {
    std::sort(v.begin(), v.end());
    const size_t n = v.size();
    return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2;
}

int run_compute(const std::string& in, const std::string& out, const std::string& policy) {
    const Problem pb = parse_problem(read_file(in));
    std::optional<ModulusPolicy> pol;
    if (!policy.empty()) pol = parse_policy(policy);
    const Result r = compute_problem(pb, pol);
    const std::string text = serialize_result(r);
    if (out.empty() || out == "-") {
        std::cout << text;
    } else {
        write_file(out, text);
    }
    std::cerr << r.members.size() << " member(s), " << r.timings_us.at("total") << " us\n";
    return 0;
}

int run_verify(const std::string& problem_path, const std::string& result_path) {
    const Problem pb = parse_problem(read_file(problem_path));
    const Result r = parse_result(read_file(result_path));
    if (!(r.p == pb.p)) throw ParseError("problem and result use different primes");
    const GBFamily fam = family_of(r);
    bool ok = true;
    for (size_t i = 0; i < fam.members.size(); ++i) {
        const LexGB& g = fam.members[i];
        const LazardReport rep = lazard_check(g);
        long dim = -1;
        if (rep.ok) dim = g.dim();
        std::cout << "member " << i << ": " << g.elems.size() << " poly(s), dim " << dim
                  << (rep.ok ? (rep.minimal ? ", minimal lexGB" : ", lexGB") : ", not a lexGB: " + rep.failure) << "\n";
        ok = ok && rep.ok;
    }
    const bool prod = ok && verify_product(fam, result_generators(pb, r));
    std::cout << (prod ? "OK" : "FAILED") << ": product of the members "
              << (prod ? "equals" : "does not equal") << " the input ideal\n";
    return prod ? 0 : EXIT_VERIFY;
}

int run_gen(const std::string& family, int index, u64 prime, const std::string& out, u64 seed) {
    const Prime P(prime);
    SuiteInstance si{BiPoly(P), BiPoly(P), UniPoly(P)};
    if (family == "random") {
        std::mt19937_64 rng(seed + static_cast<u64>(index));
        si = random_instance(P, rng);
    } else if (family == "1" || family == "2") {
        si = gen_family(family == "1" ? 1 : 2, index, P);
    } else {
        throw ParseError("unknown family '" + family + "' (expected 1, 2 or random)");
    }
    const Problem pb{P, si.a, si.b, si.T, ModulusPolicy::Given};
    const std::string text = serialize_problem(pb);
    if (out.empty() || out == "-") {
        std::cout << text;
    } else {
        write_file(out, text);
    }
    return 0;
}

int run_stats(const std::string& in) {
    const Problem pb = parse_problem(read_file(in));
    const auto t0 = std::chrono::steady_clock::now();
    const StatsRun run = compute_stats(pb.a, pb.b);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << stats_header() << "\ttime(s)\n" << stats_row(run.stats) << "\t" << secs << "\n";
    return 0;
}

int run_bench(const std::string& family, const std::string& indices, int reps, const std::string& csv, u64 prime) {
    if (reps < 1) throw ContractViolation("--reps must be positive");
    const int fam = family == "1" ? 1 : family == "2" ? 2 : 0;
    if (fam == 0) throw ParseError("bench needs family 1 or 2");
    const Prime P(prime);
    std::ostringstream body;
    body << "case,policy,phase,median_us\n";
    for (int idx : parse_indices(indices)) {
        const SuiteInstance si = gen_family(fam, idx, P);
        for (ModulusPolicy pol : {ModulusPolicy::Given, ModulusPolicy::Resultant, ModulusPolicy::SqfSplit}) {
            std::map<std::string, std::vector<long long>> samples;
            for (int k = 0; k < reps; ++k) {
                const Result r = compute_problem(Problem{P, si.a, si.b, si.T, pol});
                for (const auto& [phase, us] : r.timings_us) samples[phase].push_back(us);
            }
            const std::string name = "f" + std::to_string(fam) + "-" + std::to_string(idx);
            for (const auto& [phase, v] : samples) {
                body << name << "," << policy_name(pol) << "," << phase << "," << median(v) << "\n";
            }
            std::cerr << name << " " << policy_name(pol) << " done\n";
        }
    }
    if (csv.empty() || csv == "-") {
        std::cout << body.str();
    } else {
        write_file(csv, body.str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lexicographic Groebner bases of <a, b, T> in GF(p)[x, y]"};
    app.require_subcommand(1);
    u64 seed = 1;
    app.add_option("--seed", seed, "Seed for randomized instance generation");

    std::string in, out, policy;
    auto* compute = app.add_subcommand("compute", "Compute the family of lexGBs of a problem file");
    compute->add_option("--in", in, "Problem JSON")->required();
    compute->add_option("--out", out, "Result JSON (stdout when omitted)");
    compute->add_option("--policy", policy, "given | resultant | sqf-split (overrides the file)");

    std::string problem_path, result_path;
    auto* verify = app.add_subcommand("verify", "Check a result against its problem with a Groebner oracle");
    verify->add_option("--problem", problem_path, "Problem JSON")->required();
    verify->add_option("--result", result_path, "Result JSON")->required();

    std::string family;
    int index = 1;
    u64 prime = DEFAULT_PRIME;
    auto* gen = app.add_subcommand("gen", "Write a benchmark or random problem file");
    gen->add_option("--family", family, "1, 2 or random")->required();
    gen->add_option("--index", index, "Row index within the family");
    gen->add_option("--prime", prime, "Field characteristic");
    gen->add_option("--out", out, "Problem JSON (stdout when omitted)");

    auto* stats = app.add_subcommand("stats", "Print the table row of a problem with T its resultant");
    stats->add_option("--in", in, "Problem JSON")->required();

    std::string indices = "1", csv;
    int reps = 3;
    auto* bench = app.add_subcommand("bench", "Median phase timings over a family");
    bench->add_option("--family", family, "1 or 2")->required();
    bench->add_option("--indices", indices, "Row indices, e.g. 1-4 or 1,3");
    bench->add_option("--reps", reps, "Repetitions per case");
    bench->add_option("--csv", csv, "CSV output (stdout when omitted)");
    bench->add_option("--prime", prime, "Field characteristic");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : EXIT_PARSE;
    }

    try {
        if (*compute) return run_compute(in, out, policy);
        if (*verify) return run_verify(problem_path, result_path);
        if (*gen) return run_gen(family, index, prime, out, seed);
        if (*stats) return run_stats(in);
        if (*bench) return run_bench(family, indices, reps, csv, prime);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return EXIT_PARSE;
    } catch (const ContractViolation& e) {
        std::cerr << "contract violation: " << e.what() << "\n";
        return EXIT_CONTRACT;
    } catch (const AssumptionHViolated& e) {
        std::cerr << "assumption violated: " << e.what() << "\n";
        return EXIT_CONTRACT;
    } catch (const DivisionByZero& e) {
        std::cerr << "division by zero: " << e.what() << "\n";
        return EXIT_CONTRACT;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
