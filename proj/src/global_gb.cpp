#include "lexgb/global_gb.hpp"

#include <algorithm>

#include "lexgb/dyneval.hpp"
#include "lexgb/errors.hpp"
#include "lexgb/subres.hpp"

namespace lexgb {

std::vector<LnnD5Component> last_non_nil_d5(const BiPoly& f1, const BiPoly& f2, const UniPoly& T) {
    const Prime& P = T.prime();
    const UniPoly one = UniPoly::constant(P, 1);
    const PrsOutcome prs = prs_mod(f1, f2, T);
    const auto& s = prs.steps;
    if (prs.status == PrsStatus::Completed) {
        return {{make_monic_mod(s[prs.last].f, T), BiPoly(P), one, T}};
    }
    const size_t i = prs.last;
    const BiPoly a = make_monic_mod(s[i - 1].f, T);
    std::vector<LnnD5Component> out;
    for (MonicBranch& mb : monic_form_d5(s[i].f, T)) {
        if (mb.b.is_zero()) {
            // f_i vanishes on this branch: f_{i-1} is the last nonzero element there.
            out.push_back({reduce_mod(a, mb.cofactor), BiPoly(P), one, mb.cofactor});
        } else if (!mb.multiplier.is_one()) {
            const UniPoly m = mb.modulus();
            out.push_back({reduce_mod(a, m), std::move(mb.b), mb.multiplier, mb.cofactor});
        } else {
            const BiPoly ar = reduce_mod(a, mb.cofactor);
            // Equal degrees only when f2 blocks; lc(b) is a unit on this branch, so the next p.r.s. advances.
            if (ar.deg_y() < mb.b.deg_y()) throw Error("last_non_nil_d5: branch degree exceeds deg_y f1");
            for (auto& c : last_non_nil_d5(ar, mb.b, mb.cofactor)) out.push_back(std::move(c));
        }
    }
    return out;
}

namespace {

bool is_unit_constant(const BiPoly& f, const UniPoly& T) { return f.deg_y() == 0 && is_unit_mod(f.coeff(0), T); }

}  // namespace

GBFamily subres_to_gb_aux(const BiPoly& ain, const BiPoly& bin, const UniPoly& T) {
    const Prime& P = T.prime();
    const UniPoly one = UniPoly::constant(P, 1);
    const BiPoly a = reduce_mod(ain, T), b = reduce_mod(bin, T);
    if (is_unit_constant(a, T) || is_unit_constant(b, T)) return {{LexGB::unit(P)}};
    GBFamily out;
    for (const LnnD5Component& c : last_non_nil_d5(a, b, T)) {
        if (c.u.is_one()) continue;
        if (c.v.is_zero()) {
            out.members.push_back({{GBElement{c.modulus(), BiPoly(one)}, GBElement{one, c.u}}});
            continue;
        }
        GBFamily rec = subres_to_gb_aux(c.u, c.v, c.cofactor);
        UniPoly rest = c.multiplier;
        for (const LexGB& g : rec.members) {
            if (g.is_unit()) continue;
            auto [V, r] = isol_factor(rest, g.h1());
            rest = r;
            LexGB m;
            for (const auto& e : g.elems) m.elems.push_back({V * e.h, e.g});
            m.elems.push_back({one, c.u});
            out.members.push_back(std::move(m));
        }
        // Primary parts of the multiplier on which <u, v, cofactor> is the unit ideal.
        if (!rest.is_one()) {
            out.members.push_back({{GBElement{rest, BiPoly(one)}, GBElement{one, reduce_mod(c.u, rest)}}});
        }
    }
    return out;
}

GBFamily subres_to_gb_d5(const BiPoly& ain, const BiPoly& bin, const UniPoly& T) {
    const Prime& P = T.prime();
    if (ain.is_zero() || bin.is_zero()) throw ContractViolation("subres_to_gb_d5: zero input");
    if (T.degree() < 1 || T.lc() != 1) throw ContractViolation("subres_to_gb_d5: T must be monic nonconstant");
    if (ain.deg_y() == 0 || bin.deg_y() == 0) return {{LexGB::unit(P)}};
    auto monicize = [](const BiPoly& f, const UniPoly& M, const char* which) {
        std::vector<MonicBranch> br = monic_form_d5(f, M);
        for (const auto& m : br) {
            if (m.b.is_zero() || !m.multiplier.is_one()) {
                throw AssumptionHViolated(std::string(which) + " is nilpotent modulo a primary factor of T");
            }
        }
        return br;
    };
    GBFamily out;
    auto append = [&out](GBFamily f) {
        for (auto& m : f.members) {
            if (!m.is_unit()) out.members.push_back(std::move(m));
        }
    };
    for (const MonicBranch& ma : monicize(ain, T, "a")) {
        const UniPoly& Tj = ma.cofactor;
        const BiPoly bj = reduce_mod(bin, Tj);
        if (bj.is_zero()) throw AssumptionHViolated("b is nilpotent modulo a primary factor of T");
        if (ma.b.deg_y() >= bj.deg_y()) {
            append(subres_to_gb_aux(ma.b, bj, Tj));
            continue;
        }
        for (const MonicBranch& mb : monicize(bj, Tj, "b")) {
            const BiPoly aij = reduce_mod(ma.b, mb.cofactor);
            if (aij.deg_y() >= mb.b.deg_y()) {
                append(subres_to_gb_aux(aij, mb.b, mb.cofactor));
            } else {
                append(subres_to_gb_aux(mb.b, aij, mb.cofactor));
            }
        }
    }
    if (out.members.empty()) out.members.push_back(LexGB::unit(P));
    sort_family(out);
    return out;
}

void sort_family(GBFamily& family) {
    std::stable_sort(family.members.begin(), family.members.end(),
                     [](const LexGB& x, const LexGB& y) { return canonical_less(x.h1(), y.h1()); });
}

std::string check_family_structure(const GBFamily& family, const UniPoly& T) {
    const Prime& P = T.prime();
    if (family.is_unit()) return "";
    UniPoly prod = UniPoly::constant(P, 1);
    for (size_t i = 0; i < family.members.size(); ++i) {
        const LexGB& g = family.members[i];
        if (g.is_unit()) return "unit basis inside a nontrivial family";
        for (size_t j = 0; j < i; ++j) {
            if (!gcd(g.h1(), family.members[j].h1()).is_one()) return "x-parts of two members are not coprime";
        }
        prod = prod * g.h1();
        const UniPoly s1 = sqfp(g.h1());
        for (size_t k = 1; k + 1 < g.elems.size(); ++k) {
            if (!(sqfp(g.elems[k].h) == s1)) return "member elements have different squarefree x-parts";
        }
    }
    if (!divides(prod, T)) return "product of the x-parts does not divide T";
    return "";
}

}  // namespace lexgb
