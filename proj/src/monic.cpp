#include "lexgb/monic.hpp"

#include "lexgb/errors.hpp"

namespace lexgb {

WeierstrassScan weierstrass_form(const BiPoly& fin, const UniPoly& T) {
    const Prime& P = T.prime();
    const BiPoly f = reduce_mod(fin, T);
    if (f.is_zero()) throw ContractViolation("weierstrass_form: f vanishes mod T");
    int d = f.deg_y();
    UniPoly g_new = T;
    UniPoly g = T;
    while (d >= 0 && !g_new.is_one()) {
        g = g_new;
        g_new = gcd(g, f.coeff(d));
        --d;
    }
    if (g_new.is_one()) {
        // c_{d+1} is a unit mod g, a power of the same irreducible as T, hence mod T.
        return {g, d + 1, inverse_mod_or_throw(f.coeff(d + 1), T)};
    }
    return {g_new, -1, UniPoly(P)};
}

namespace {

BiPoly truncate_y(const BiPoly& f, int deg) {
    if (f.deg_y() <= deg) return f;
    std::vector<UniPoly> c(f.ycoeffs().begin(), f.ycoeffs().begin() + (deg + 1));
    return BiPoly(f.prime(), std::move(c));
}

}  // namespace

HenselFactors hensel_lift(const BiPoly& f, const BiPoly& a0, const BiPoly& b0, const BiPoly& alpha0,
                          const BiPoly& beta0, const UniPoly& N, u64 target_exp) {
    const Prime& P = f.prime();
    if (!reduce_mod(f - a0 * b0, N).is_zero()) throw ContractViolation("hensel_lift: f != a*b mod N");
    if (!reduce_mod(alpha0 * a0 + beta0 * b0 - BiPoly::constant(P, 1), N).is_zero()) {
        throw ContractViolation("hensel_lift: Bezout identity fails mod N");
    }
    BiPoly b = reduce_mod(b0, N);
    if (!b.is_monic()) throw ContractViolation("hensel_lift: b is not monic mod N");
    if (target_exp == 0 || (target_exp & (target_exp - 1)) != 0) {
        throw ContractViolation("hensel_lift: target exponent must be a power of two");
    }
    const int da = f.deg_y() - b.deg_y();
    BiPoly a = reduce_mod(a0, N), s = reduce_mod(alpha0, N), t = reduce_mod(beta0, N);
    UniPoly M = N;
    const BiPoly one = BiPoly::constant(P, 1);
    for (u64 cur = 1; cur < target_exp; cur *= 2) {
        M = M * M;
        const BiPoly e = reduce_mod(f - a * b, M);
        auto [q, r] = divrem_monic_mod(s * e, b, M);
        BiPoly a1 = truncate_y(reduce_mod(a + t * e + q * a, M), da);
        BiPoly b1 = reduce_mod(b + r, M);
        const BiPoly beta = reduce_mod(s * a1 + t * b1 - one, M);
        auto [c, dd] = divrem_monic_mod(s * beta, b1, M);
        s = reduce_mod(s - dd, M);
        t = reduce_mod(t - t * beta - c * a1, M);
        a = std::move(a1);
        b = std::move(b1);
        if (!reduce_mod(f - a * b, M).is_zero()) throw Error("hensel_lift: lifted factorization is inconsistent");
    }
    return {a, b};
}

int lifting_rounds(const UniPoly& N, const UniPoly& T) {
    UniPoly r = rem(N, T);
    int eps = 0;
    while (!r.is_zero()) {
        if (eps > 62) throw ContractViolation("lifting_rounds: N is not nilpotent-complete mod T");
        r = mul_mod(r, r, T);
        ++eps;
    }
    return eps;
}

BiPoly musser_q(const BiPoly& fin, const UniPoly& T, int d, const UniPoly& alpha, const UniPoly& N) {
    const Prime& P = T.prime();
    const BiPoly f = reduce_mod(fin, T);
    if (d < 0 || d > f.deg_y()) throw ContractViolation("musser_q: index d out of range");
    const UniPoly cd = f.coeff(d);
    if (!rem(cd * alpha - UniPoly::constant(P, 1), T).is_zero()) {
        throw ContractViolation("musser_q: alpha is not the inverse of c_d mod T");
    }
    if (!divides(N, T)) throw ContractViolation("musser_q: N does not divide T");
#ifndef NDEBUG
    {
        UniPoly g = T;
        for (int i = d + 1; i <= f.deg_y(); ++i) g = gcd(g, f.coeff(i));
        if (!(g == N)) throw ContractViolation("musser_q: N is not gcd(T, c_{d+1}, ...)");
        if (!(sqfp(N) == sqfp(T))) throw ContractViolation("musser_q: sqfp(N) != sqfp(T)");
    }
#endif
    BiPoly b = scale_mod(f, alpha, N);
    if (b.deg_y() != d || !b.is_monic()) throw ContractViolation("musser_q: alpha*f mod N is not monic of degree d");
    const int eps = lifting_rounds(N, T);
    if (eps == 0) return reduce_mod(b, T);
    HenselFactors h = hensel_lift(f, BiPoly(cd), b, BiPoly(alpha), BiPoly(P), N, u64{1} << eps);
    return reduce_mod(h.b, T);
}

MonicPair monic_form(const BiPoly& fin, const UniPoly& T) {
    const Prime& P = T.prime();
    const BiPoly f = reduce_mod(fin, T);
    if (f.is_zero()) throw ContractViolation("monic_form: f vanishes mod T");
    WeierstrassScan s = weierstrass_form(f, T);
    if (s.d == -1) {
        const UniPoly U = s.g;
        const BiPoly f1 = exact_div(f, U);
        const UniPoly T1 = exact_div(T, U);
        WeierstrassScan s1 = weierstrass_form(f1, T1);
        if (s1.d < 0) throw Error("monic_form: f/U is still nilpotent");
        return {musser_q(f1, T1, s1.d, s1.alpha, s1.g), U};
    }
    return {musser_q(f, T, s.d, s.alpha, s.g), UniPoly::constant(P, 1)};
}

}  // namespace lexgb
