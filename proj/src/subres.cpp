#include "lexgb/subres.hpp"

#include "lexgb/errors.hpp"

namespace lexgb {

namespace {

// Coefficient arithmetic over GF(p)[x].
struct PlainRing {
    Prime P;
    UniPoly red(const UniPoly& u) const { return u; }
    BiPoly red(const BiPoly& f) const { return f; }
    BiPoly prem(const BiPoly& f, const BiPoly& g) const { return prem_pquo(f, g).r; }
    UniPoly div(const UniPoly& a, const UniPoly& b) const { return exact_div(a, b); }
    BiPoly div(const BiPoly& f, const UniPoly& b) const { return exact_div(f, b); }
    UniPoly pw(const UniPoly& a, int e) const { return pow(a, static_cast<unsigned>(e)); }
};

// Coefficient arithmetic over GF(p)[x]/<T>; divisors must be units.
struct ModRing {
    Prime P;
    const UniPoly& T;
    UniPoly red(const UniPoly& u) const { return rem(u, T); }
    BiPoly red(const BiPoly& f) const { return reduce_mod(f, T); }
    BiPoly prem(const BiPoly& f, const BiPoly& g) const { return prem_pquo_mod(f, g, T).r; }
    UniPoly div(const UniPoly& a, const UniPoly& b) const { return mul_mod(a, inverse_mod_or_throw(b, T), T); }
    BiPoly div(const BiPoly& f, const UniPoly& b) const { return scale_mod(f, inverse_mod_or_throw(b, T), T); }
    UniPoly pw(const UniPoly& a, int e) const { return pow_mod(a, static_cast<u64>(e), T); }
};

UniPoly signed_one(Prime P, int e) { return UniPoly::constant(P, (e % 2 == 0) ? 1 : P.value() - 1); }

// Appends F_{i} computed from the two previous steps.  Returns false when the
// new element is zero.
template <class Ring>
bool next_step(const Ring& R, std::vector<PrsStep>& s, int c3_sign = -1) {
    const Prime& P = R.P;
    const size_t i = s.size();  // 0-based index of the new element
    const PrsStep& a = s[i - 2];
    const PrsStep& b = s[i - 1];
    BiPoly pr = R.prem(a.f, b.f);
    if (i == 2) {
        UniPoly c3 = signed_one(P, c3_sign < 0 ? 1 : 0);
        BiPoly f = pr.scale(signed_one(P, a.n - b.n + 1));
        if (f.is_zero()) return false;
        int n = f.deg_y();
        s.push_back({std::move(f), n, c3});
        return true;
    }
    const PrsStep& z = s[i - 3];
    // c_i = (lc(F_{i-2}) / c_{i-1})^(n_{i-3} - n_{i-2}) * c_{i-1}
    const int e1 = z.n - a.n;
    UniPoly la = R.red(a.f.lc());
    UniPoly ci = e1 >= 1 ? R.div(R.red(R.pw(la, e1)), R.pw(b.c, e1 - 1)) : R.red(b.c);
    // F_i = prem / (-lc(F_{i-2}) * (-c_i)^(n_{i-2} - n_{i-1}))
    const int e2 = a.n - b.n;
    UniPoly den = R.red(-la * R.pw(-ci, e2));
    if (pr.is_zero()) return false;
    BiPoly f = R.div(pr, den);
    if (f.is_zero()) return false;
    int n = f.deg_y();
    s.push_back({std::move(f), n, std::move(ci)});
    return true;
}

template <class Ring>
void check_inputs(const Ring&, const BiPoly& f1, const BiPoly& f2) {
    if (f1.is_zero() || f2.is_zero()) throw ContractViolation("p.r.s. of a zero polynomial");
    if (f1.deg_y() < f2.deg_y()) throw ContractViolation("p.r.s. requires deg_y f1 >= deg_y f2");
}

}  // namespace

PrsOutcome prs_mod(const BiPoly& f1in, const BiPoly& f2in, const UniPoly& T) {
    const Prime& P = f1in.prime();
    ModRing R{P, T};
    BiPoly f1 = reduce_mod(f1in, T), f2 = reduce_mod(f2in, T);
    check_inputs(R, f1, f2);
    if (!is_unit_mod(f1.lc(), T)) throw ContractViolation("prs_mod: lc(f1) is not a unit mod T");
    PrsOutcome out{{}, PrsStatus::Completed, 0};
    out.steps.push_back({f1, f1.deg_y(), UniPoly(P)});
    out.steps.push_back({f2, f2.deg_y(), UniPoly(P)});
    while (true) {
        const size_t i = out.steps.size() - 1;
        if (!is_unit_mod(out.steps[i].f.lc(), T)) {
            out.status = PrsStatus::Blocked;
            out.last = i;
            return out;
        }
        if (out.steps[i].n == 0 || !next_step(R, out.steps)) {
            out.status = PrsStatus::Completed;
            out.last = i;
            return out;
        }
    }
}

namespace {

std::vector<PrsStep> plain_sequence(const BiPoly& f1, const BiPoly& f2, int c3_sign) {
    const Prime& P = f1.prime();
    PlainRing R{P};
    check_inputs(R, f1, f2);
    std::vector<PrsStep> s;
    s.push_back({f1, f1.deg_y(), UniPoly(P)});
    s.push_back({f2, f2.deg_y(), UniPoly(P)});
    while (s.back().n > 0 && next_step(R, s, c3_sign)) {
    }
    return s;
}

}  // namespace

std::vector<PrsStep> prs_plain(const BiPoly& f1, const BiPoly& f2) { return plain_sequence(f1, f2, -1); }

UniPoly resultant_y(const BiPoly& a, const BiPoly& b) {
    const Prime& P = a.prime();
    if (a.is_zero() || b.is_zero()) throw ContractViolation("resultant of a zero polynomial");
    const int m = a.deg_y(), n = b.deg_y();
    if (m < n) {
        UniPoly r = resultant_y(b, a);
        return (static_cast<long long>(m) * n) % 2 ? -r : r;
    }
    if (n == 0) return pow(b.lc(), static_cast<unsigned>(m));
    // With c_3 = +1 the sequence equals the signed subresultant chain for
    // every degree gap; c_3 = -1 flips signs when deg a - deg b is even.
    std::vector<PrsStep> s = plain_sequence(a, b, 1);
    const PrsStep& last = s.back();
    if (last.n > 0) return UniPoly(P);
    // last = F_r has degree 0 and is the top of its block, Sres_{n_{r-1}-1}.
    // The bottom of that block is Sres_0 = (lc(F_r)/c_{r+1})^(n_{r-1}-1) F_r.
    const size_t r = s.size() - 1;
    const int gap = s[r - 1].n - 1;
    if (gap == 0) return last.f.coeff(0);
    const int e = s[r - 2].n - s[r - 1].n;
    UniPoly cnext = e >= 1 ? exact_div(pow(s[r - 1].f.lc(), static_cast<unsigned>(e)),
                                       pow(s[r].c, static_cast<unsigned>(e - 1)))
                           : s[r].c;
    UniPoly lr = last.f.coeff(0);
    return exact_div(pow(lr, static_cast<unsigned>(gap + 1)), pow(cnext, static_cast<unsigned>(gap)));
}

}  // namespace lexgb
