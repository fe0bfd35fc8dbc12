#include "lexgb/suite.hpp"

#include <algorithm>

#include "lexgb/errors.hpp"
#include "lexgb/subres.hpp"

namespace lexgb {

namespace {

// y + r + r^2 + ... + r^l + l + k * r^(l+1), reduced mod M.
BiPoly linear_factor(const Prime& P, const UniPoly& r, int l, u64 k, const UniPoly& M) {
    UniPoly c = UniPoly::constant(P, static_cast<u64>(l));
    UniPoly rp = r;
    for (int j = 1; j <= l; ++j) {
        c += rp;
        rp = mul_mod(rp, r, M);
    }
    c += rp.scale(k);
    return BiPoly(P, {rem(c, M), UniPoly::constant(P, 1)});
}

BiPoly local_poly(const Prime& P, const LocalFactor& f, u64 lead, u64 k) {
    const UniPoly r = UniPoly::from_ints(P, {f.shift, 1});
    const UniPoly M = pow(r, static_cast<unsigned>(f.exponent));
    BiPoly acc(P, {rem(r.scale(lead), M), UniPoly::constant(P, 1)});
    for (int l = 1; l <= f.factors; ++l) acc = mul_mod(acc, linear_factor(P, r, l, k, M), M);
    return acc;
}

BiPoly crt_bipoly(const BiPoly& f1, const UniPoly& m1, const BiPoly& f2, const UniPoly& m2) {
    const Prime& P = m1.prime();
    const int d = std::max(f1.deg_y(), f2.deg_y());
    std::vector<UniPoly> cs;
    for (int i = 0; i <= d; ++i) cs.push_back(crt_pair(f1.coeff(i), m1, f2.coeff(i), m2));
    return BiPoly(P, std::move(cs));
}

}  // namespace

std::pair<BiPoly, BiPoly> local_pair(const Prime& P, const LocalFactor& f) {
    if (f.exponent < 1 || f.factors < 0) throw ContractViolation("local_pair: bad factor data");
    return {local_poly(P, f, 1, 2), local_poly(P, f, 2, 1)};
}

SuiteInstance assemble(const Prime& P, const std::vector<LocalFactor>& factors) {
    if (factors.empty()) throw ContractViolation("assemble: no factors");
    SuiteInstance out{BiPoly(P), BiPoly(P), UniPoly::constant(P, 1)};
    for (const LocalFactor& f : factors) {
        auto [a, b] = local_pair(P, f);
        const UniPoly M = pow(UniPoly::from_ints(P, {f.shift, 1}), static_cast<unsigned>(f.exponent));
        if (!gcd(M, out.T).is_one()) throw ContractViolation("assemble: shifts collide mod p");
        out.a = crt_bipoly(out.a, out.T, a, M);
        out.b = crt_bipoly(out.b, out.T, b, M);
        out.T = out.T * M;
    }
    return out;
}

std::vector<LocalFactor> family_factors(int family, int index) {
    std::vector<LocalFactor> out;
    auto add = [&out](long long shift, int e) { out.push_back({shift, e, e - 1}); };
    if (family == 1 && index >= 1 && index <= 4) {
        add(0, 5 * index);
        add(1, 5 * (index + 1));
    } else if (family == 1 && index >= 5 && index <= 11) {
        const int i = index - 2;
        add(10, 3 * i - 3);
        add(20, 3 * i - 2);
        add(30, 3 * i - 1);
    } else if (family == 1 && index >= 12 && index <= 16) {
        const int i = index - 11;
        for (int k = 0; k < 4; ++k) add(5 * k, 4 * i + k);
    } else if (family == 2 && index >= 1 && index <= 6) {
        const int e = 6 + index;
        long long shift = 0;
        for (int i = 1; i <= 7; ++i) {
            for (int j = 1; j <= 8 - i; ++j) add(shift++, e - 7 + i);
        }
    } else {
        throw ContractViolation("family_factors: no such suite instance");
    }
    return out;
}

SuiteInstance gen_family(int family, int index, const Prime& P) { return assemble(P, family_factors(family, index)); }

namespace {

UniPoly random_below(const Prime& P, std::mt19937_64& rng, int n) {
    std::vector<u64> c(static_cast<size_t>(std::max(n, 0)));
    for (u64& v : c) v = P.reduce(rng());
    return UniPoly(P, std::move(c));
}

// One local pair modulo M = pi^e.
std::pair<BiPoly, BiPoly> random_local(const Prime& P, std::mt19937_64& rng, const UniPoly& pi, int e, int max_dy) {
    const UniPoly M = pow(pi, static_cast<unsigned>(e));
    auto pick = [&rng](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<u64>(hi - lo + 1)); };
    auto root_factor = [&P](const UniPoly& r) { return BiPoly(P, {-r, UniPoly::constant(P, 1)}); };
    if (rng() % 5 == 0) {
        auto dense = [&]() {
            std::vector<UniPoly> cs;
            for (int i = 0, d = pick(1, max_dy); i <= d; ++i) cs.push_back(random_below(P, rng, e));
            return reduce_mod(BiPoly(P, std::move(cs)), M);
        };
        return {dense(), dense()};
    }
    const int da = pick(1, max_dy), db = pick(1, max_dy);
    const int shared = pick(0, std::min(da, db));
    BiPoly a = BiPoly::constant(P, 1), b = BiPoly::constant(P, 1);
    for (int j = 0; j < shared; ++j) {
        const UniPoly alpha = random_below(P, rng, e);
        const int t = pick(0, e);
        const UniPoly beta = rem(alpha + mul_mod(pow(pi, static_cast<unsigned>(t)), random_below(P, rng, e), M), M);
        a = mul_mod(a, root_factor(alpha), M);
        b = mul_mod(b, root_factor(beta), M);
    }
    for (int j = shared; j < da; ++j) a = mul_mod(a, root_factor(random_below(P, rng, e)), M);
    for (int j = shared; j < db; ++j) b = mul_mod(b, root_factor(random_below(P, rng, e)), M);
    // Nilpotent terms above the monic part, and a unit factor on b.
    auto nil_top = [&](BiPoly f) {
        if (f.deg_y() < max_dy && rng() % 3 == 0) {
            const UniPoly c = mul_mod(pow(pi, static_cast<unsigned>(pick(1, e))), random_below(P, rng, e), M);
            f = reduce_mod(f + BiPoly(c).shift_y(f.deg_y() + 1), M);
        }
        return f;
    };
    a = nil_top(a);
    b = nil_top(b);
    if (rng() % 2 == 0) b = scale_mod(b, UniPoly::constant(P, 1) + mul_mod(pi, random_below(P, rng, e), M), M);
    return {a, b};
}

}  // namespace

SuiteInstance random_instance(const Prime& P, std::mt19937_64& rng, const RandomParams& rp) {
    if (rp.max_deg_y < 1 || rp.max_primaries < 1 || rp.max_T_degree < 1) throw ContractViolation("random_instance: bad parameters");
    while (true) {
        const int k = 1 + static_cast<int>(rng() % static_cast<u64>(rp.max_primaries));
        std::vector<std::pair<u64, int>> prim;
        int budget = rp.max_T_degree;
        for (int i = 0; i < k && budget > 0; ++i) {
            const u64 r = P.reduce(rng());
            bool dup = false;
            for (const auto& q : prim) dup = dup || q.first == r;
            if (dup) continue;
            const int e = 1 + static_cast<int>(rng() % static_cast<u64>(std::min(budget, rp.max_T_degree)));
            prim.push_back({r, e});
            budget -= e;
        }
        SuiteInstance out{BiPoly(P), BiPoly(P), UniPoly::constant(P, 1)};
        bool ok = true;
        for (const auto& [r, e] : prim) {
            const UniPoly pi = UniPoly(P, {P.neg(r), 1});
            const UniPoly M = pow(pi, static_cast<unsigned>(e));
            auto [a, b] = random_local(P, rng, pi, e, rp.max_deg_y);
            if (is_nilpotent(a, M) || is_nilpotent(b, M)) {
                ok = false;
                break;
            }
            out.a = crt_bipoly(out.a, out.T, a, M);
            out.b = crt_bipoly(out.b, out.T, b, M);
            out.T = out.T * M;
        }
        if (ok && out.a.deg_y() >= 1 && out.b.deg_y() >= 1) return out;
    }
}

UniPoly reduced_resultant(const BiPoly& a, const BiPoly& b) {
    const Prime& P = a.prime();
    if (a.is_zero() || b.is_zero()) throw ContractViolation("reduced_resultant of a zero polynomial");
    BiPoly r = b;
    if (a.deg_y() == b.deg_y() && a.deg_y() > 0) {
        const UniPoly la = a.lc(), lb = b.lc();
        const u64 k = P.mul(lb.lc(), P.inv(la.lc()));
        if (lb == la.scale(k)) r = b - a.scale(UniPoly::constant(P, k));
    }
    const UniPoly res = r.is_zero() ? UniPoly(P) : resultant_y(a, r);
    return res.is_zero() ? res : monic(res);
}

StatsRun compute_stats(const BiPoly& a, const BiPoly& b) {
    const Prime& P = a.prime();
    const UniPoly res = reduced_resultant(a, b);
    if (res.is_zero()) throw ContractViolation("compute_stats: the resultant vanishes");
    StatsRun run{{}, res, GBFamily{}};
    SuiteStats& s = run.stats;
    s.deg_y = std::max(a.deg_y(), b.deg_y());
    s.tdeg = std::max(a.tdeg(), b.tdeg());
    s.deg_resultant = res.degree();
    s.deg_resultant_full = resultant_y(a, b).degree();
    long repeated_factors = 0;
    UniPoly repeated = UniPoly::constant(P, 1);
    for (const SqfFactor& f : sqf_decomposition(res)) {
        const int d = f.r.degree() * f.e;
        if (f.e == 1) {
            s.deg_mult1 += d;
        } else {
            s.deg_multgt1 += d;
            repeated_factors += f.r.degree();
            repeated = repeated * f.r;
        }
    }
    s.avg_multgt1 = repeated_factors > 0 ? static_cast<double>(s.deg_multgt1) / repeated_factors : 0.0;
    if (res.degree() == 0) {
        run.family.members.push_back(LexGB::unit(P));
        return run;
    }
    run.family = subres_to_gb_d5(a, b, res);
    if (run.family.is_unit()) return run;
    long npolys = 0;
    for (const LexGB& g : run.family.members) {
        s.DEG += g.dim();
        if (!gcd(g.h1(), repeated).is_one()) {
            ++s.n_lexgbs;
            npolys += static_cast<long>(g.elems.size());
        }
    }
    s.n_members = static_cast<int>(run.family.members.size());
    s.avg_npolys = s.n_lexgbs > 0 ? static_cast<double>(npolys) / s.n_lexgbs : 0.0;
    return run;
}

}  // namespace lexgb
