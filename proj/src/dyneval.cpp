#include "lexgb/dyneval.hpp"

#include "lexgb/errors.hpp"
#include "lexgb/monic.hpp"

namespace lexgb {

std::pair<UniPoly, UniPoly> isol_factor(const UniPoly& ain, const UniPoly& bin) {
    if (ain.is_zero() || bin.is_zero()) throw ContractViolation("isol_factor of a zero polynomial");
    const Prime& P = ain.prime();
    UniPoly a = monic(ain), b = bin;
    UniPoly c = UniPoly::constant(P, 1);
    do {
        b = gcd(a, b);
        a = exact_div(a, b);
        c = c * b;
    } while (!b.is_one());
    return {c, a};
}

InvNilSplit invert_nil(const UniPoly& f, const UniPoly& T) {
    const Prime& P = T.prime();
    if (f.is_zero()) throw ContractViolation("invert_nil of the zero polynomial");
    if (T.degree() < 1 || T.lc() != 1) throw ContractViolation("invert_nil requires T monic nonconstant");
    auto [T2, T1] = isol_factor(T, f);
    UniPoly f2 = rem(f, T2);
    UniPoly f1 = T1.is_one() ? UniPoly(P) : inverse_mod_or_throw(f, T1);
    return {f1, T1, f2, T2};
}

std::vector<ScanBranch> weierstrass_form_d5(const BiPoly& fin, const UniPoly& Tin, int din, const UniPoly& Nin) {
    const Prime& P = Tin.prime();
    if (Tin.degree() < 1) throw ContractViolation("weierstrass_form_d5 requires T nonconstant");
    std::vector<ScanBranch> out;
    BiPoly f = reduce_mod(fin, Tin);
    UniPoly T = Tin, N = Nin;
    int d = din;
    while (true) {
        if (d == -1) {
            out.push_back({f, T, -1, UniPoly(P), N});
            return out;
        }
        const UniPoly cd = rem(f.coeff(d), T);
        if (cd.is_zero()) {
            --d;
            continue;
        }
        InvNilSplit s = invert_nil(cd, T);
        if (s.T2.is_one()) {
            out.push_back({f, T, d, s.f1, N});
            return out;
        }
        if (s.T1.is_one()) {
            N = gcd(cd, N);
            --d;
            continue;
        }
        UniPoly N2 = gcd(gcd(s.f2, N), s.T2);
        UniPoly N1 = gcd(N, s.T1);
        out.push_back({reduce_mod(f, s.T1), s.T1, d, s.f1, N1});
        f = reduce_mod(f, s.T2);
        T = s.T2;
        N = N2;
        --d;
    }
}

std::vector<MonicBranch> monic_form_d5(const BiPoly& fin, const UniPoly& T) {
    const Prime& P = T.prime();
    if (fin.is_zero()) throw ContractViolation("monic_form_d5 of the zero polynomial");
    const BiPoly f = reduce_mod(fin, T);
    const UniPoly one = UniPoly::constant(P, 1);
    std::vector<MonicBranch> out;
    if (f.is_zero()) {
        out.push_back({BiPoly(P), T, one});
        return out;
    }
    for (const ScanBranch& w : weierstrass_form_d5(f, T, f.deg_y(), T)) {
        if (w.d >= 0) {
            out.push_back({musser_q(w.f, w.T, w.d, w.a, w.N), w.T, one});
            continue;
        }
        // f is nilpotent on this branch and N is its content in T.
        UniPoly rest = w.N;
        if (!(w.N == w.T)) {
            const BiPoly fz = exact_div(w.f, w.N);
            const UniPoly Tz = exact_div(w.T, w.N);
            for (const ScanBranch& z : weierstrass_form_d5(fz, Tz, fz.deg_y(), Tz)) {
                if (z.d < 0) throw Error("monic_form_d5: f/N is still nilpotent");
                BiPoly b = musser_q(z.f, z.T, z.d, z.a, z.N);
                auto [U, r] = isol_factor(rest, z.T);
                rest = r;
                out.push_back({std::move(b), z.T, U});
            }
        }
        // Primary parts of T on which f vanishes identically.
        if (!rest.is_one()) out.push_back({BiPoly(P), rest, one});
    }
    return out;
}

}  // namespace lexgb
