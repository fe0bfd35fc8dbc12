#include "lexgb/verify.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "lexgb/errors.hpp"

namespace lexgb {

bool mono_less(const Monomial& a, const Monomial& b) { return a.y < b.y || (a.y == b.y && a.x < b.x); }

Monomial leading_monomial(const BiPoly& f) {
    if (f.is_zero()) throw ContractViolation("leading monomial of 0");
    return {f.lc().degree(), f.deg_y()};
}

namespace {

struct Term {
    Monomial m;
    u64 c;
};

// Terms in decreasing lex order.
using Sparse = std::vector<Term>;

Sparse to_sparse(const BiPoly& f) {
    Sparse s;
    for (int i = f.deg_y(); i >= 0; --i) {
        const UniPoly c = f.coeff(i);
        for (int j = c.degree(); j >= 0; --j) {
            if (c.coeff(j) != 0) s.push_back({{j, i}, c.coeff(j)});
        }
    }
    return s;
}

BiPoly to_bipoly(const Sparse& s, const Prime& P) {
    if (s.empty()) return BiPoly(P);
    std::vector<std::vector<u64>> rows(s.front().m.y + 1);
    for (const Term& t : s) {
        auto& r = rows[t.m.y];
        if (static_cast<int>(r.size()) <= t.m.x) r.resize(t.m.x + 1, 0);
        r[t.m.x] = t.c;
    }
    std::vector<UniPoly> cs;
    cs.reserve(rows.size());
    for (auto& r : rows) cs.emplace_back(P, std::move(r));
    return BiPoly(P, std::move(cs));
}

bool divides(const Monomial& a, const Monomial& b) { return a.x <= b.x && a.y <= b.y; }

bool tail_less(const Monomial& a, const Monomial& b) { return mono_less(b, a); }

// f[from..] - c * x^sh.x y^sh.y * g
Sparse sub_scaled(const Sparse& f, size_t from, u64 c, Monomial sh, const Sparse& g, const Prime& P) {
    Sparse out;
    out.reserve(f.size() - from + g.size());
    size_t i = from, j = 0;
    while (i < f.size() || j < g.size()) {
        if (j == g.size()) {
            out.push_back(f[i++]);
            continue;
        }
        const Monomial gm{g[j].m.x + sh.x, g[j].m.y + sh.y};
        const u64 gc = P.neg(P.mul(c, g[j].c));
        if (i == f.size() || tail_less(gm, f[i].m)) {
            out.push_back({gm, gc});
            ++j;
        } else if (f[i].m == gm) {
            const u64 s = P.add(f[i].c, gc);
            if (s != 0) out.push_back({gm, s});
            ++i;
            ++j;
        } else {
            out.push_back(f[i++]);
        }
    }
    return out;
}

void make_monic(Sparse& f, const Prime& P) {
    const u64 inv = P.inv(f.front().c);
    for (Term& t : f) t.c = P.mul(t.c, inv);
}

Sparse reduce_full(Sparse f, const std::vector<Sparse>& G, const Prime& P) {
    Sparse r;
    size_t head = 0;
    while (head < f.size()) {
        const Term t = f[head];
        const Sparse* div = nullptr;
        for (const Sparse& g : G) {
            if (!g.empty() && divides(g.front().m, t.m)) {
                div = &g;
                break;
            }
        }
        if (div == nullptr) {
            r.push_back(t);
            ++head;
            continue;
        }
        const u64 c = P.mul(t.c, P.inv(div->front().c));
        const Monomial sh{t.m.x - div->front().m.x, t.m.y - div->front().m.y};
        f = sub_scaled(f, head, c, sh, *div, P);
        head = 0;
    }
    return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) { return {std::max(a.x, b.x), std::max(a.y, b.y)}; }

Sparse spoly(const Sparse& f, const Sparse& g, const Prime& P) {
    const Monomial L = lcm(f.front().m, g.front().m);
    // f and g are monic: S = (L/lm f) f - (L/lm g) g.
    Sparse sf;
    sf.reserve(f.size());
    const Monomial shf{L.x - f.front().m.x, L.y - f.front().m.y};
    for (const Term& t : f) sf.push_back({{t.m.x + shf.x, t.m.y + shf.y}, t.c});
    const Monomial shg{L.x - g.front().m.x, L.y - g.front().m.y};
    return sub_scaled(sf, 0, 1, shg, g, P);
}

std::vector<Sparse> buchberger_sparse(std::vector<Sparse> G, const Prime& P) {
    std::set<std::pair<size_t, size_t>> pending;
    for (size_t j = 0; j < G.size(); ++j) {
        for (size_t i = 0; i < j; ++i) pending.insert({i, j});
    }
    auto is_pending = [&pending](size_t a, size_t b) { return pending.count({std::min(a, b), std::max(a, b)}) > 0; };
    while (!pending.empty()) {
        const auto [i, j] = *pending.begin();
        pending.erase(pending.begin());
        const Monomial mi = G[i].front().m, mj = G[j].front().m;
        const Monomial L = lcm(mi, mj);
        // First criterion: coprime leading monomials.
        if ((mi.x == 0 || mj.x == 0) && (mi.y == 0 || mj.y == 0)) continue;
        // Second criterion: a third leading monomial divides the lcm and both
        // of its pairs have been treated.
        bool chain = false;
        for (size_t k = 0; k < G.size() && !chain; ++k) {
            if (k == i || k == j) continue;
            chain = divides(G[k].front().m, L) && !is_pending(i, k) && !is_pending(j, k);
        }
        if (chain) continue;
        Sparse r = reduce_full(spoly(G[i], G[j], P), G, P);
        if (r.empty()) continue;
        make_monic(r, P);
        const size_t n = G.size();
        G.push_back(std::move(r));
        for (size_t k = 0; k < n; ++k) pending.insert({k, n});
    }
    return G;
}

std::vector<Sparse> minimize_and_reduce(std::vector<Sparse> G, const Prime& P) {
    std::sort(G.begin(), G.end(), [](const Sparse& a, const Sparse& b) { return mono_less(a.front().m, b.front().m); });
    std::vector<Sparse> M;
    for (Sparse& g : G) {
        bool redundant = false;
        for (const Sparse& h : M) redundant = redundant || divides(h.front().m, g.front().m);
        if (!redundant) M.push_back(std::move(g));
    }
    for (size_t i = 0; i < M.size(); ++i) {
        std::vector<Sparse> others;
        for (size_t k = 0; k < M.size(); ++k) {
            if (k != i) others.push_back(M[k]);
        }
        const Term lead = M[i].front();
        Sparse tail(M[i].begin() + 1, M[i].end());
        Sparse r = reduce_full(std::move(tail), others, P);
        r.insert(r.begin(), lead);
        M[i] = std::move(r);
    }
    return M;
}

std::vector<Sparse> sparse_list(const std::vector<BiPoly>& G) {
    std::vector<Sparse> out;
    for (const BiPoly& g : G) {
        if (!g.is_zero()) out.push_back(to_sparse(g));
    }
    return out;
}

}  // namespace

std::vector<BiPoly> buchberger_lex(const std::vector<BiPoly>& gens) {
    std::vector<Sparse> G = sparse_list(gens);
    if (G.empty()) return {};
    const Prime P = gens.front().prime();
    for (Sparse& g : G) make_monic(g, P);
    G = minimize_and_reduce(buchberger_sparse(std::move(G), P), P);
    std::vector<BiPoly> out;
    out.reserve(G.size());
    for (const Sparse& g : G) out.push_back(to_bipoly(g, P));
    return out;
}

BiPoly normal_form(const BiPoly& f, const std::vector<BiPoly>& G) {
    return to_bipoly(reduce_full(to_sparse(f), sparse_list(G), f.prime()), f.prime());
}

LexGB reduce_gb(const LexGB& G) {
    if (G.is_unit()) return G;
    const Prime& P = G.h1().prime();
    std::vector<Sparse> M = sparse_list(G.polys());
    for (Sparse& g : M) make_monic(g, P);
    LexGB out;
    for (const Sparse& s : minimize_and_reduce(std::move(M), P)) {
        const BiPoly f = to_bipoly(s, P);
        out.elems.push_back({f.lc(), exact_div(f, f.lc())});
    }
    return out;
}

namespace {

struct Factored {
    UniPoly h;
    BiPoly g;
};

Factored factor_element(const BiPoly& f) {
    if (f.is_zero()) throw ContractViolation("lazard_check: zero element");
    const UniPoly h = f.lc();
    if (h.lc() != 1) throw ContractViolation("lazard_check: element is not monic");
    return {h, exact_div(f, h)};
}

LazardReport fail(std::string why) { return {false, false, std::move(why)}; }

}  // namespace

LazardReport lazard_check(const std::vector<BiPoly>& G) {
    if (G.empty()) throw ContractViolation("lazard_check: empty list");
    if (G.size() == 1 && G[0].is_one()) return {true, true, ""};
    std::vector<Factored> F;
    for (const BiPoly& f : G) F.push_back(factor_element(f));
    const size_t l = F.size();
    if (F[0].g.deg_y() != 0 || F[0].h.degree() < 1) return fail("first element is not a nonconstant polynomial in x");
    if (l < 2) return fail("no element of positive y-degree");
    if (!F[l - 1].h.is_one()) return fail("last element is not monic in y");
    for (size_t i = 1; i < l; ++i) {
        if (F[i].g.deg_y() <= F[i - 1].g.deg_y()) return fail("y-degrees are not strictly increasing");
        if (i + 1 < l && F[i].h.degree() < 1) return fail("h of a middle element is constant");
        if (!divides(F[i].h, F[i - 1].h)) return fail("divisibility chain of the h broken at element " + std::to_string(i + 1));
    }
    bool minimal = true;
    for (size_t i = 1; i + 1 < l; ++i) minimal = minimal && F[i].h.degree() < F[i - 1].h.degree();
    // g_i in <g_{i-1}, (h_{i-2}/h_{i-1}) g_{i-2}, ..., h_1/h_{i-1}>, 1-based i >= 3.
    for (size_t i = 2; i < l; ++i) {
        std::vector<BiPoly> gens;
        for (size_t j = 0; j < i; ++j) gens.push_back(F[j].g.scale(exact_div(F[j].h, F[i - 1].h)));
        const std::vector<BiPoly> B = buchberger_lex(gens);
        if (!normal_form(F[i].g, B).is_zero()) {
            return fail("membership condition fails for element " + std::to_string(i + 1));
        }
    }
    return {true, minimal, ""};
}

LazardReport lazard_check(const LexGB& G) { return lazard_check(G.polys()); }

bool lazard_extension_ok(const std::vector<BiPoly>& L, const BiPoly& g) {
    return normal_form(g, buchberger_lex(L)).is_zero();
}

long staircase_dim(const LexGB& G) {
    if (G.is_unit()) return 0;
    return staircase_dim(G.polys());
}

long staircase_dim(const std::vector<BiPoly>& G) {
    int max_x = -1, max_y = -1;
    std::vector<Monomial> lms;
    for (const BiPoly& g : G) {
        if (g.is_zero()) continue;
        const Monomial m = leading_monomial(g);
        lms.push_back(m);
        if (m.y == 0) max_x = max_x < 0 ? m.x : std::min(max_x, m.x);
        if (m.x == 0) max_y = max_y < 0 ? m.y : std::min(max_y, m.y);
    }
    if (max_x < 0 || max_y < 0) throw ContractViolation("staircase_dim: ideal is not zero-dimensional");
    long count = 0;
    for (int y = 0; y < max_y; ++y) {
        for (int x = 0; x < max_x; ++x) {
            bool under = true;
            for (const Monomial& m : lms) under = under && !(m.x <= x && m.y <= y);
            count += under ? 1 : 0;
        }
    }
    return count;
}

bool verify_product(const GBFamily& family, const std::vector<BiPoly>& gens) {
    const std::vector<BiPoly> oracle = buchberger_lex(gens);
    if (oracle.empty()) return false;
    long total = 0;
    std::vector<UniPoly> xparts;
    for (const LexGB& m : family.members) {
        const std::vector<BiPoly> B = buchberger_lex(m.polys());
        for (const BiPoly& o : oracle) {
            if (!normal_form(o, B).is_zero()) return false;
        }
        if (B.size() == 1 && B[0].is_one()) continue;
        // A member that is not zero-dimensional cannot be a factor.
        try {
            total += staircase_dim(B);
        } catch (const ContractViolation&) {
            return false;
        }
        xparts.push_back(B.front().coeff(0));
    }
    for (size_t i = 0; i < xparts.size(); ++i) {
        for (size_t j = 0; j < i; ++j) {
            if (!gcd(xparts[i], xparts[j]).is_one()) return false;
        }
    }
    const long expect = (oracle.size() == 1 && oracle[0].is_one()) ? 0 : staircase_dim(oracle);
    return total == expect;
}

bool ideals_equal(const std::vector<BiPoly>& A, const std::vector<BiPoly>& B) {
    return buchberger_lex(A) == buchberger_lex(B);
}

std::vector<BiPoly> ideal_product(const std::vector<BiPoly>& A, const std::vector<BiPoly>& B) {
    std::vector<BiPoly> out;
    for (const BiPoly& a : A) {
        for (const BiPoly& b : B) out.push_back(a * b);
    }
    return out;
}

bool appendix_identity_check(const std::vector<std::vector<BiPoly>>& ideals, const BiPoly& g) {
    if (ideals.empty()) throw ContractViolation("appendix_identity_check: no ideals");
    std::vector<UniPoly> h;
    for (const auto& I : ideals) {
        const std::vector<BiPoly> B = buchberger_lex(I);
        if (B.empty() || B.front().deg_y() != 0) throw ContractViolation("appendix_identity_check: ideal has no x-contraction");
        h.push_back(B.front().coeff(0));
    }
    for (size_t i = 0; i < h.size(); ++i) {
        for (size_t j = 0; j < i; ++j) {
            if (!gcd(h[i], h[j]).is_one()) throw ContractViolation("appendix_identity_check: contractions are not coprime");
        }
    }
    std::vector<BiPoly> lhs, rhs;
    for (size_t l = 0; l < ideals.size(); ++l) {
        std::vector<BiPoly> Ig = ideals[l];
        Ig.push_back(g);
        Ig = buchberger_lex(Ig);
        lhs = l == 0 ? Ig : buchberger_lex(ideal_product(lhs, Ig));
        rhs = l == 0 ? buchberger_lex(ideals[l]) : buchberger_lex(ideal_product(rhs, ideals[l]));
    }
    rhs.push_back(g);
    return ideals_equal(lhs, rhs);
}

}  // namespace lexgb
