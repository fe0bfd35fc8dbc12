#include "lexgb/io.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "lexgb/errors.hpp"
#include "lexgb/subres.hpp"

namespace lexgb {

using json = nlohmann::json;

ModulusPolicy parse_policy(const std::string& s) {
    if (s == "given") return ModulusPolicy::Given;
    if (s == "resultant") return ModulusPolicy::Resultant;
    if (s == "sqf-split") return ModulusPolicy::SqfSplit;
    throw ParseError("unknown modulus policy '" + s + "'");
}

std::string policy_name(ModulusPolicy p) {
    switch (p) {
        case ModulusPolicy::Given: return "given";
        case ModulusPolicy::Resultant: return "resultant";
        case ModulusPolicy::SqfSplit: return "sqf-split";
    }
    return "given";
}

namespace {

u64 coeff_from_json(const json& v, const Prime& P) {
    if (v.is_number_unsigned()) return P.reduce(v.get<u64>());
    if (v.is_number_integer()) return P.from_int(v.get<long long>());
    throw ParseError("coefficient is not an integer");
}

UniPoly uni_from_json(const json& v, const Prime& P) {
    if (!v.is_array()) throw ParseError("univariate polynomial must be an array");
    std::vector<u64> c;
    c.reserve(v.size());
    for (const json& e : v) c.push_back(coeff_from_json(e, P));
    return UniPoly(P, std::move(c));
}

BiPoly bi_from_json(const json& v, const Prime& P) {
    if (!v.is_array()) throw ParseError("bivariate polynomial must be an array of arrays");
    std::vector<UniPoly> rows;
    rows.reserve(v.size());
    for (const json& r : v) rows.push_back(uni_from_json(r, P));
    return BiPoly(P, std::move(rows));
}

json uni_to_json(const UniPoly& f) { return json(f.coeffs()); }

json bi_to_json(const BiPoly& f) {
    json out = json::array();
    for (const UniPoly& c : f.ycoeffs()) out.push_back(uni_to_json(c));
    return out;
}

Prime prime_from_json(const json& doc) {
    if (!doc.contains("p") || !doc["p"].is_number_unsigned()) throw ParseError("missing or invalid prime 'p'");
    try {
        return Prime(doc["p"].get<u64>());
    } catch (const ContractViolation& e) {
        throw ParseError(e.what());
    }
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

json stats_to_json(const SuiteStats& s) {
    return {{"DEG", s.DEG},
            {"deg_y", s.deg_y},
            {"tdeg", s.tdeg},
            {"deg_resultant", s.deg_resultant},
            {"deg_resultant_full", s.deg_resultant_full},
            {"deg_mult1", s.deg_mult1},
            {"deg_multgt1", s.deg_multgt1},
            {"avg_multgt1", s.avg_multgt1},
            {"n_lexgbs", s.n_lexgbs},
            {"avg_npolys", s.avg_npolys},
            {"n_members", s.n_members}};
}

SuiteStats stats_from_json(const json& j) {
    SuiteStats s;
    s.DEG = j.at("DEG").get<long>();
    s.deg_y = j.at("deg_y").get<int>();
    s.tdeg = j.at("tdeg").get<int>();
    s.deg_resultant = j.at("deg_resultant").get<int>();
    s.deg_resultant_full = j.at("deg_resultant_full").get<int>();
    s.deg_mult1 = j.at("deg_mult1").get<int>();
    s.deg_multgt1 = j.at("deg_multgt1").get<int>();
    s.avg_multgt1 = j.at("avg_multgt1").get<double>();
    s.n_lexgbs = j.at("n_lexgbs").get<int>();
    s.avg_npolys = j.at("avg_npolys").get<double>();
    s.n_members = j.at("n_members").get<int>();
    return s;
}

}  // namespace

Problem parse_problem(const std::string& text) {
    const json doc = parse_json(text);
    if (!doc.is_object()) throw ParseError("problem file must be a JSON object");
    const Prime P = prime_from_json(doc);
    if (!doc.contains("a") || !doc.contains("b")) throw ParseError("problem file needs 'a' and 'b'");
    Problem pb{P, bi_from_json(doc["a"], P), bi_from_json(doc["b"], P), std::nullopt, ModulusPolicy::Given};
    if (doc.contains("T") && !doc["T"].is_null()) pb.T = uni_from_json(doc["T"], P);
    if (doc.contains("modulus_policy")) {
        if (!doc["modulus_policy"].is_string()) throw ParseError("modulus_policy must be a string");
        pb.policy = parse_policy(doc["modulus_policy"].get<std::string>());
    } else if (!pb.T) {
        pb.policy = ModulusPolicy::Resultant;
    }
    return pb;
}

std::string serialize_problem(const Problem& pb) {
    json doc = {{"p", pb.p.value()}, {"a", bi_to_json(pb.a)}, {"b", bi_to_json(pb.b)}, {"modulus_policy", policy_name(pb.policy)}};
    if (pb.T) doc["T"] = uni_to_json(*pb.T);
    return doc.dump() + "\n";
}

Result parse_result(const std::string& text) {
    const json doc = parse_json(text);
    if (!doc.is_object()) throw ParseError("result file must be a JSON object");
    const Prime P = prime_from_json(doc);
    Result r{P, {}, std::nullopt, std::nullopt, {}};
    try {
        for (const json& m : doc.at("members")) {
            const json& hs = m.at("h_parts");
            const json& gs = m.at("g_parts");
            if (!hs.is_array() || !gs.is_array() || hs.size() != gs.size() || hs.empty()) {
                throw ParseError("member needs h_parts and g_parts of equal nonzero length");
            }
            ResultMember rm{LexGB{}, uni_from_json(m.at("modulus"), P)};
            for (size_t i = 0; i < hs.size(); ++i) rm.basis.elems.push_back({uni_from_json(hs[i], P), bi_from_json(gs[i], P)});
            r.members.push_back(std::move(rm));
        }
        if (doc.contains("T") && !doc["T"].is_null()) r.T = uni_from_json(doc["T"], P);
        if (doc.contains("stats") && !doc["stats"].is_null()) r.stats = stats_from_json(doc["stats"]);
        if (doc.contains("timings")) {
            for (const auto& [k, v] : doc["timings"].items()) r.timings_us[k] = v.get<long long>();
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed result file: ") + e.what());
    }
    return r;
}

std::string serialize_result(const Result& r) {
    json members = json::array();
    for (const ResultMember& m : r.members) {
        json hs = json::array(), gs = json::array();
        for (const GBElement& e : m.basis.elems) {
            hs.push_back(uni_to_json(e.h));
            gs.push_back(bi_to_json(e.g));
        }
        members.push_back({{"h_parts", hs}, {"g_parts", gs}, {"modulus", uni_to_json(m.modulus)}});
    }
    json doc = {{"p", r.p.value()}, {"members", members}};
    if (r.T) doc["T"] = uni_to_json(*r.T);
    if (r.stats) doc["stats"] = stats_to_json(*r.stats);
    doc["timings"] = r.timings_us;
    return doc.dump() + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << text;
}

namespace {

using Clock = std::chrono::steady_clock;

long long micros_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - t0).count();
}

void append_family(Result& r, const GBFamily& fam, const UniPoly& T) {
    if (fam.is_unit()) return;
    for (const LexGB& g : fam.members) r.members.push_back({g, T});
}

}  // namespace

Result compute_problem(const Problem& pb, std::optional<ModulusPolicy> override_policy) {
    const ModulusPolicy policy = override_policy.value_or(pb.policy);
    Result r{pb.p, {}, std::nullopt, std::nullopt, {}};
    const auto t_total = Clock::now();
    if (policy == ModulusPolicy::Given) {
        if (!pb.T) throw ContractViolation("policy 'given' needs a modulus T");
        const UniPoly T = monic(*pb.T);
        r.T = T;
        const auto t0 = Clock::now();
        append_family(r, subres_to_gb_d5(pb.a, pb.b, T), T);
        r.timings_us["gb"] = micros_since(t0);
    } else {
        auto t0 = Clock::now();
        UniPoly res = resultant_y(pb.a, pb.b);
        r.timings_us["resultant"] = micros_since(t0);
        if (res.is_zero()) throw ContractViolation("the resultant vanishes: a and b share a factor");
        res = monic(res);
        r.T = res;
        if (res.degree() > 0 && policy == ModulusPolicy::Resultant) {
            t0 = Clock::now();
            append_family(r, subres_to_gb_d5(pb.a, pb.b, res), res);
            r.timings_us["gb"] = micros_since(t0);
        } else if (res.degree() > 0) {
            t0 = Clock::now();
            const std::vector<SqfFactor> parts = sqf_decomposition(res);
            r.timings_us["sqf"] = micros_since(t0);
            t0 = Clock::now();
            for (const SqfFactor& f : parts) {
                const UniPoly Ti = pow(f.r, static_cast<unsigned>(f.e));
                append_family(r, subres_to_gb_d5(pb.a, pb.b, Ti), Ti);
            }
            r.timings_us["gb"] = micros_since(t0);
        }
    }
    GBFamily fam = family_of(r);
    if (!fam.is_unit()) {
        // Deterministic order across policies.
        std::vector<ResultMember> sorted = r.members;
        std::stable_sort(sorted.begin(), sorted.end(), [](const ResultMember& x, const ResultMember& y) {
            return canonical_less(x.basis.h1(), y.basis.h1());
        });
        r.members = std::move(sorted);
    }
    r.timings_us["total"] = micros_since(t_total);
    return r;
}

GBFamily family_of(const Result& r) {
    GBFamily fam;
    for (const ResultMember& m : r.members) fam.members.push_back(m.basis);
    if (fam.members.empty()) fam.members.push_back(LexGB::unit(r.p));
    return fam;
}

std::vector<BiPoly> problem_generators(const Problem& pb) {
    std::vector<BiPoly> gens{pb.a, pb.b};
    if (pb.T) gens.push_back(BiPoly(*pb.T));
    return gens;
}

std::vector<BiPoly> result_generators(const Problem& pb, const Result& r) {
    std::vector<BiPoly> gens{pb.a, pb.b};
    if (r.T) {
        gens.push_back(BiPoly(*r.T));
    } else if (pb.T) {
        gens.push_back(BiPoly(*pb.T));
    } else {
        gens.push_back(BiPoly(resultant_y(pb.a, pb.b)));
    }
    return gens;
}

}  // namespace lexgb
