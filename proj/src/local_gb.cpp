#include "lexgb/local_gb.hpp"

#include "lexgb/errors.hpp"
#include "lexgb/monic.hpp"
#include "lexgb/subres.hpp"

namespace lexgb {

LexGB LexGB::unit(Prime p) { return {{GBElement{UniPoly::constant(p, 1), BiPoly::constant(p, 1)}}}; }

bool LexGB::is_unit() const { return elems.size() == 1 && elems[0].h.is_one() && elems[0].g.is_one(); }

std::vector<BiPoly> LexGB::polys() const {
    std::vector<BiPoly> out;
    out.reserve(elems.size());
    for (const auto& e : elems) out.push_back(e.expand());
    return out;
}

long LexGB::dim() const {
    if (is_unit()) return 0;
    if (elems.front().g.deg_y() != 0 || !elems.back().h.is_one()) throw ContractViolation("LexGB::dim: not zero-dimensional");
    long d = 0;
    for (size_t i = 0; i + 1 < elems.size(); ++i) {
        d += static_cast<long>(elems[i + 1].g.deg_y() - elems[i].g.deg_y()) * elems[i].h.degree();
    }
    return d;
}

namespace {

LnnComponent lnn_rec(const BiPoly& f1, const BiPoly& f2, const UniPoly& T) {
    const Prime& P = T.prime();
    const PrsOutcome prs = prs_mod(f1, f2, T);
    const auto& s = prs.steps;
    if (prs.status == PrsStatus::Blocked) {
        const size_t i = prs.last;
        MonicPair mf = monic_form(s[i].f, T);
        BiPoly a = make_monic_mod(s[i - 1].f, T);
        if (mf.U.degree() > 0) return {a, mf.b, mf.U, exact_div(T, mf.U)};
        if (a.deg_y() <= mf.b.deg_y()) throw Error("last_non_nil: recursion does not decrease the degree");
        return lnn_rec(a, mf.b, T);
    }
    return {make_monic_mod(s[prs.last].f, T), BiPoly(P), UniPoly::constant(P, 1), T};
}

}  // namespace

LnnComponent last_non_nil(const BiPoly& f1, const BiPoly& f2, const UniPoly& T) {
    LnnComponent c = lnn_rec(f1, f2, T);
    if (!c.v.is_zero()) {
        const int df1 = reduce_mod(f1, T).deg_y();
        c.corner_i = c.u.deg_y() == c.v.deg_y();
        c.corner_ii = c.corner_i && c.u.deg_y() == df1;
        c.corner_iii = !c.corner_i && c.u.deg_y() == df1;
    }
    return c;
}

LexGB subres_to_gb(const BiPoly& a, const BiPoly& b, const UniPoly& T) {
    const Prime& P = T.prime();
    const BiPoly ar = reduce_mod(a, T), br = reduce_mod(b, T);
    if (ar.is_zero() || br.is_zero()) throw ContractViolation("subres_to_gb: a or b vanishes mod T");
    if (ar.deg_y() == 0 || br.deg_y() == 0) return LexGB::unit(P);
    LnnComponent c = last_non_nil(ar, br, T);
    if (c.u.is_one()) return LexGB::unit(P);
    const UniPoly one = UniPoly::constant(P, 1);
    if (c.v.is_zero()) return {{GBElement{T, BiPoly(one)}, GBElement{one, c.u}}};
    const bool decreasing = c.u.deg_y() < ar.deg_y() || (c.u.deg_y() == ar.deg_y() && c.v.deg_y() < br.deg_y());
    if (c.u.deg_y() < c.v.deg_y() || !decreasing) throw Error("subres_to_gb: recursion measure does not decrease");
    LexGB g1 = subres_to_gb(c.u, c.v, c.cofactor);
    LexGB out;
    for (const auto& e : g1.elems) out.elems.push_back({c.multiplier * e.h, e.g});
    out.elems.push_back({one, c.u});
    return out;
}

}  // namespace lexgb
