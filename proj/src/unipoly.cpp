#include "lexgb/unipoly.hpp"

#include <algorithm>

#include "lexgb/errors.hpp"

namespace lexgb {

UniPoly::UniPoly(Prime p, std::vector<u64> coeffs) : p_(p), c_(std::move(coeffs)) {
    for (auto& v : c_) v = p_.reduce(v);
    normalize();
}

void UniPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::constant(Prime p, u64 c) { return UniPoly(p, {c}); }

UniPoly UniPoly::monomial(Prime p, u64 c, int n) {
    if (n < 0) throw ContractViolation("negative exponent");
    std::vector<u64> v(static_cast<size_t>(n) + 1, 0);
    v[n] = c;
    return UniPoly(p, std::move(v));
}

UniPoly UniPoly::from_ints(Prime p, std::initializer_list<long long> coeffs) {
    std::vector<u64> v;
    v.reserve(coeffs.size());
    for (long long c : coeffs) v.push_back(p.from_int(c));
    return UniPoly(p, std::move(v));
}

u64 UniPoly::eval(u64 x0) const {
    u64 r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = p_.add(p_.mul(r, x0), c_[i]);
    return r;
}

UniPoly UniPoly::operator-() const {
    UniPoly r(*this);
    for (auto& v : r.c_) v = p_.neg(v);
    return r;
}

void check_same_field(const UniPoly& f, const UniPoly& g) {
    if (!(f.prime() == g.prime())) throw ContractViolation("polynomials over different fields");
}

UniPoly& UniPoly::operator+=(const UniPoly& g) {
    check_same_field(*this, g);
    if (g.c_.size() > c_.size()) c_.resize(g.c_.size(), 0);
    for (size_t i = 0; i < g.c_.size(); ++i) c_[i] = p_.add(c_[i], g.c_[i]);
    normalize();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& g) {
    check_same_field(*this, g);
    if (g.c_.size() > c_.size()) c_.resize(g.c_.size(), 0);
    for (size_t i = 0; i < g.c_.size(); ++i) c_[i] = p_.sub(c_[i], g.c_[i]);
    normalize();
    return *this;
}

UniPoly operator*(const UniPoly& f, const UniPoly& g) {
    check_same_field(f, g);
    const Prime& P = f.p_;
    if (f.is_zero() || g.is_zero()) return UniPoly(P);
    const size_t n = f.c_.size(), m = g.c_.size();
    std::vector<u64> out(n + m - 1);
    if (P.small()) {
        // Products fit in 64 bits; accumulate in 128 bits and reduce once.
        std::vector<u128> acc(n + m - 1, 0);
        for (size_t i = 0; i < n; ++i) {
            const u64 a = f.c_[i];
            if (a == 0) continue;
            u128* row = acc.data() + i;
            for (size_t j = 0; j < m; ++j) row[j] += a * g.c_[j];
        }
        const u64 p = P.value();
        for (size_t k = 0; k < acc.size(); ++k) out[k] = static_cast<u64>(acc[k] % p);
    } else {
        for (size_t i = 0; i < n; ++i) {
            const u64 a = f.c_[i];
            if (a == 0) continue;
            for (size_t j = 0; j < m; ++j) out[i + j] = P.add(out[i + j], P.mul(a, g.c_[j]));
        }
    }
    UniPoly r(P);
    r.c_ = std::move(out);
    r.normalize();
    return r;
}

UniPoly UniPoly::scale(u64 s) const {
    UniPoly r(p_);
    s = p_.reduce(s);
    if (s == 0) return r;
    r.c_ = c_;
    for (auto& v : r.c_) v = p_.mul(v, s);
    return r;
}

UniPoly UniPoly::shift(int n) const {
    if (is_zero() || n == 0) return *this;
    UniPoly r(p_);
    r.c_.assign(static_cast<size_t>(n), 0);
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

std::string UniPoly::to_string(const char* var) const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        u64 c = c_[i];
        if (c == 0) continue;
        if (!s.empty()) s += " + ";
        if (i == 0) {
            s += std::to_string(c);
        } else {
            if (c != 1) s += std::to_string(c) + "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

std::pair<UniPoly, UniPoly> divrem(const UniPoly& f, const UniPoly& g) {
    check_same_field(f, g);
    if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
    const Prime& P = f.prime();
    const int df = f.degree(), dg = g.degree();
    if (df < dg) return {UniPoly(P), f};
    std::vector<u64> r = f.coeffs();
    std::vector<u64> q(static_cast<size_t>(df - dg) + 1, 0);
    const auto& gc = g.coeffs();
    const u64 ilc = g.lc() == 1 ? 1 : P.inv(g.lc());
    for (int i = df; i >= dg; --i) {
        u64 c = r[i];
        if (c == 0) continue;
        if (ilc != 1) c = P.mul(c, ilc);
        q[i - dg] = c;
        u64* base = r.data() + (i - dg);
        for (int j = 0; j < dg; ++j) base[j] = P.sub(base[j], P.mul(c, gc[j]));
        r[i] = 0;
    }
    r.resize(static_cast<size_t>(dg));
    return {UniPoly(P, std::move(q)), UniPoly(P, std::move(r))};
}

UniPoly rem(const UniPoly& f, const UniPoly& g) {
    if (f.degree() < g.degree() && !g.is_zero()) {
        check_same_field(f, g);
        return f;
    }
    return divrem(f, g).second;
}

UniPoly quo(const UniPoly& f, const UniPoly& g) { return divrem(f, g).first; }

UniPoly exact_div(const UniPoly& f, const UniPoly& g) {
    auto [q, r] = divrem(f, g);
    if (!r.is_zero()) throw ContractViolation("inexact polynomial division");
    return q;
}

bool divides(const UniPoly& d, const UniPoly& f) {
    if (d.is_zero()) return f.is_zero();
    return rem(f, d).is_zero();
}

UniPoly monic(const UniPoly& f) {
    if (f.is_zero() || f.lc() == 1) return f;
    return f.scale(f.prime().inv(f.lc()));
}

UniPoly derivative(const UniPoly& f) {
    const Prime& P = f.prime();
    if (f.degree() <= 0) return UniPoly(P);
    std::vector<u64> d(f.coeffs().size() - 1);
    for (size_t i = 1; i < f.coeffs().size(); ++i) d[i - 1] = P.mul(f.coeffs()[i], P.reduce(i));
    return UniPoly(P, std::move(d));
}

UniPoly mul_mod(const UniPoly& f, const UniPoly& g, const UniPoly& m) { return rem(f * g, m); }

UniPoly pow(const UniPoly& f, unsigned e) {
    UniPoly r = UniPoly::constant(f.prime(), 1);
    UniPoly b = f;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

UniPoly pow_mod(const UniPoly& f, u64 e, const UniPoly& m) {
    UniPoly r = rem(UniPoly::constant(f.prime(), 1), m);
    UniPoly b = rem(f, m);
    while (e) {
        if (e & 1) r = mul_mod(r, b, m);
        e >>= 1;
        if (e) b = mul_mod(b, b, m);
    }
    return r;
}

Xgcd xgcd(const UniPoly& f, const UniPoly& h) {
    check_same_field(f, h);
    const Prime& P = f.prime();
    if (f.is_zero() && h.is_zero()) throw ContractViolation("xgcd of two zero polynomials");
    UniPoly r0 = f, r1 = h;
    UniPoly s0 = UniPoly::constant(P, 1), s1(P);
    UniPoly t0(P), t1 = UniPoly::constant(P, 1);
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        UniPoly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        UniPoly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    const u64 il = P.inv(r0.lc());
    return {r0.scale(il), s0.scale(il), t0.scale(il)};
}

UniPoly gcd(const UniPoly& f, const UniPoly& h) {
    check_same_field(f, h);
    UniPoly a = f, b = h;
    while (!b.is_zero()) {
        UniPoly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

std::optional<UniPoly> inverse_mod(const UniPoly& f, const UniPoly& m) {
    if (m.is_zero()) throw DivisionByZero("inverse modulo zero");
    UniPoly fr = rem(f, m);
    if (fr.is_zero()) {
        if (m.degree() == 0) return UniPoly(f.prime());
        return std::nullopt;
    }
    if (m.degree() == 0) return UniPoly(f.prime());
    Xgcd x = xgcd(fr, m);
    if (!x.g.is_one()) return std::nullopt;
    return rem(x.s, m);
}

UniPoly inverse_mod_or_throw(const UniPoly& f, const UniPoly& m) {
    auto r = inverse_mod(f, m);
    if (!r) throw DivisionByZero("non-invertible element modulo " + m.to_string());
    return *r;
}

bool is_unit_mod(const UniPoly& f, const UniPoly& m) {
    if (m.degree() == 0) return true;
    UniPoly fr = rem(f, m);
    if (fr.is_zero()) return false;
    return gcd(fr, m).is_one();
}

namespace {

void check_sqf_contract(const UniPoly& f) {
    if (f.is_zero()) throw ContractViolation("squarefree part of zero");
    if (static_cast<u64>(f.degree()) >= f.prime().value()) {
        throw ContractViolation("squarefree decomposition requires deg f < p");
    }
}

}  // namespace

UniPoly sqfp(const UniPoly& f) {
    check_sqf_contract(f);
    UniPoly m = monic(f);
    if (m.degree() == 0) return m;
    return exact_div(m, gcd(m, derivative(m)));
}

std::vector<SqfFactor> sqf_decomposition(const UniPoly& f) {
    check_sqf_contract(f);
    std::vector<SqfFactor> out;
    UniPoly m = monic(f);
    if (m.degree() == 0) return out;
    UniPoly fp = derivative(m);
    UniPoly a0 = gcd(m, fp);
    UniPoly b = exact_div(m, a0);
    UniPoly c = exact_div(fp, a0);
    UniPoly d = c - derivative(b);
    int i = 1;
    while (b.degree() > 0) {
        UniPoly a = gcd(b, d);
        b = exact_div(b, a);
        c = exact_div(d, a);
        d = c - derivative(b);
        if (a.degree() > 0) out.push_back({a, i});
        ++i;
    }
    return out;
}

UniPoly crt_pair(const UniPoly& f1, const UniPoly& m1, const UniPoly& f2, const UniPoly& m2) {
    auto inv = inverse_mod(m1, m2);
    if (!inv || !gcd(m1, m2).is_one()) throw ContractViolation("crt_pair: moduli not coprime");
    UniPoly r1 = rem(f1, m1);
    UniPoly t = mul_mod(f2 - r1, *inv, m2);
    return r1 + m1 * t;
}

bool canonical_less(const UniPoly& f, const UniPoly& g) {
    if (f.degree() != g.degree()) return f.degree() < g.degree();
    for (int i = f.degree(); i >= 0; --i) {
        if (f.coeff(i) != g.coeff(i)) return f.coeff(i) < g.coeff(i);
    }
    return false;
}

}  // namespace lexgb
