#include "lexgb/bipoly.hpp"

#include <algorithm>

#include "lexgb/errors.hpp"

namespace lexgb {

BiPoly::BiPoly(Prime p, std::vector<UniPoly> ycoeffs) : p_(p), c_(std::move(ycoeffs)) {
    for (const auto& c : c_) {
        if (!(c.prime() == p_)) throw ContractViolation("coefficient over a different field");
    }
    normalize();
}

BiPoly::BiPoly(const UniPoly& c) : p_(c.prime()) {
    if (!c.is_zero()) c_.push_back(c);
}

BiPoly BiPoly::y(Prime p) { return BiPoly(p, {UniPoly(p), UniPoly::constant(p, 1)}); }

BiPoly BiPoly::from_rows(Prime p, const std::vector<std::vector<long long>>& rows) {
    std::vector<UniPoly> cs;
    cs.reserve(rows.size());
    for (const auto& row : rows) {
        std::vector<u64> v;
        v.reserve(row.size());
        for (long long c : row) v.push_back(p.from_int(c));
        cs.emplace_back(p, std::move(v));
    }
    return BiPoly(p, std::move(cs));
}

void BiPoly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int BiPoly::deg_x() const {
    int d = NEG_INF;
    for (const auto& c : c_) d = std::max(d, c.degree());
    return d;
}

int BiPoly::tdeg() const {
    int d = NEG_INF;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i].is_zero()) d = std::max(d, c_[i].degree() + static_cast<int>(i));
    }
    return d;
}

UniPoly BiPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return UniPoly(p_);
    return c_[i];
}

BiPoly BiPoly::operator-() const {
    BiPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& g) {
    if (!(p_ == g.p_)) throw ContractViolation("polynomials over different fields");
    if (g.c_.size() > c_.size()) c_.resize(g.c_.size(), UniPoly(p_));
    for (size_t i = 0; i < g.c_.size(); ++i) c_[i] += g.c_[i];
    normalize();
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& g) {
    if (!(p_ == g.p_)) throw ContractViolation("polynomials over different fields");
    if (g.c_.size() > c_.size()) c_.resize(g.c_.size(), UniPoly(p_));
    for (size_t i = 0; i < g.c_.size(); ++i) c_[i] -= g.c_[i];
    normalize();
    return *this;
}

BiPoly operator*(const BiPoly& f, const BiPoly& g) {
    if (!(f.p_ == g.p_)) throw ContractViolation("polynomials over different fields");
    if (f.is_zero() || g.is_zero()) return BiPoly(f.p_);
    std::vector<UniPoly> out(f.c_.size() + g.c_.size() - 1, UniPoly(f.p_));
    for (size_t i = 0; i < f.c_.size(); ++i) {
        if (f.c_[i].is_zero()) continue;
        for (size_t j = 0; j < g.c_.size(); ++j) out[i + j] += f.c_[i] * g.c_[j];
    }
    return BiPoly(f.p_, std::move(out));
}

BiPoly BiPoly::scale(const UniPoly& c) const {
    std::vector<UniPoly> out;
    out.reserve(c_.size());
    for (const auto& v : c_) out.push_back(v * c);
    return BiPoly(p_, std::move(out));
}

BiPoly BiPoly::shift_y(int n) const {
    if (is_zero() || n == 0) return *this;
    std::vector<UniPoly> out(static_cast<size_t>(n), UniPoly(p_));
    out.insert(out.end(), c_.begin(), c_.end());
    return BiPoly(p_, std::move(out));
}

UniPoly BiPoly::eval_x(u64 x0) const {
    std::vector<u64> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(c.eval(x0));
    return UniPoly(p_, std::move(v));
}

std::string BiPoly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = deg_y(); i >= 0; --i) {
        if (c_[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        std::string c = c_[i].to_string();
        if (i == 0) {
            s += c;
            continue;
        }
        if (!c_[i].is_one()) s += "(" + c + ")*";
        s += "y";
        if (i > 1) s += "^" + std::to_string(i);
    }
    return s;
}

BiPoly reduce_mod(const BiPoly& f, const UniPoly& T) {
    std::vector<UniPoly> out;
    out.reserve(f.ycoeffs().size());
    for (const auto& c : f.ycoeffs()) out.push_back(rem(c, T));
    return BiPoly(f.prime(), std::move(out));
}

BiPoly mul_mod(const BiPoly& f, const BiPoly& g, const UniPoly& T) { return reduce_mod(f * g, T); }

BiPoly scale_mod(const BiPoly& f, const UniPoly& c, const UniPoly& T) {
    std::vector<UniPoly> out;
    out.reserve(f.ycoeffs().size());
    for (const auto& v : f.ycoeffs()) out.push_back(mul_mod(v, c, T));
    return BiPoly(f.prime(), std::move(out));
}

bool is_nilpotent(const BiPoly& f, const UniPoly& T) {
    const UniPoly s = sqfp(T);
    for (const auto& c : f.ycoeffs()) {
        if (!divides(s, c)) return false;
    }
    return true;
}

namespace {

PremResult prem_impl(const BiPoly& f, const BiPoly& g, const UniPoly* T) {
    if (g.is_zero()) throw DivisionByZero("pseudo-division by zero");
    if (f.deg_y() < g.deg_y()) throw ContractViolation("prem requires deg_y f >= deg_y g");
    const Prime& P = f.prime();
    auto red = [&](UniPoly u) { return T ? rem(u, *T) : u; };
    const int dg = g.deg_y();
    const UniPoly lg = red(g.lc());
    int remaining = f.deg_y() - dg + 1;
    std::vector<UniPoly> r = f.ycoeffs();
    if (T) {
        for (auto& c : r) c = rem(c, *T);
    }
    std::vector<UniPoly> q(static_cast<size_t>(f.deg_y() - dg) + 1, UniPoly(P));
    const auto& gc = g.ycoeffs();
    auto trim = [&] {
        while (!r.empty() && r.back().is_zero()) r.pop_back();
    };
    trim();
    while (!r.empty() && static_cast<int>(r.size()) - 1 >= dg) {
        const int k = static_cast<int>(r.size()) - 1 - dg;
        const UniPoly lead = r.back();
        for (auto& c : q) c = red(c * lg);
        q[k] += lead;
        for (auto& c : r) c = red(c * lg);
        for (int j = 0; j <= dg; ++j) r[k + j] = red(r[k + j] - lead * gc[j]);
        --remaining;
        trim();
    }
    if (remaining > 0) {
        const UniPoly m = T ? pow_mod(lg, static_cast<u64>(remaining), *T) : pow(lg, remaining);
        for (auto& c : q) c = red(c * m);
        for (auto& c : r) c = red(c * m);
    }
    return {BiPoly(P, std::move(q)), BiPoly(P, std::move(r))};
}

}  // namespace

PremResult prem_pquo(const BiPoly& f, const BiPoly& g) { return prem_impl(f, g, nullptr); }

PremResult prem_pquo_mod(const BiPoly& f, const BiPoly& g, const UniPoly& T) {
    return prem_impl(reduce_mod(f, T), reduce_mod(g, T), &T);
}

PremResult divrem_monic_mod(const BiPoly& f, const BiPoly& h, const UniPoly& M) {
    const Prime& P = f.prime();
    if (!h.is_monic()) throw ContractViolation("divrem_monic_mod requires a y-monic divisor");
    const int dh = h.deg_y();
    std::vector<UniPoly> r = reduce_mod(f, M).ycoeffs();
    const int df = static_cast<int>(r.size()) - 1;
    if (df < dh) return {BiPoly(P), BiPoly(P, std::move(r))};
    std::vector<UniPoly> q(static_cast<size_t>(df - dh) + 1, UniPoly(P));
    const auto& hc = h.ycoeffs();
    for (int i = df; i >= dh; --i) {
        if (r[i].is_zero()) continue;
        const UniPoly lead = r[i];
        q[i - dh] = lead;
        for (int j = 0; j < dh; ++j) r[i - dh + j] = rem(r[i - dh + j] - lead * hc[j], M);
        r[i] = UniPoly(P);
    }
    r.resize(static_cast<size_t>(dh), UniPoly(P));
    return {BiPoly(P, std::move(q)), BiPoly(P, std::move(r))};
}

UniPoly content_x(const BiPoly& f) {
    UniPoly g(f.prime());
    for (const auto& c : f.ycoeffs()) {
        g = gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

BiPoly exact_div(const BiPoly& f, const UniPoly& c) {
    std::vector<UniPoly> out;
    out.reserve(f.ycoeffs().size());
    for (const auto& v : f.ycoeffs()) out.push_back(exact_div(v, c));
    return BiPoly(f.prime(), std::move(out));
}

BiPoly make_monic_mod(const BiPoly& f, const UniPoly& T) {
    BiPoly fr = reduce_mod(f, T);
    if (fr.is_zero()) throw DivisionByZero("monic form of a polynomial that vanishes mod T");
    if (fr.is_monic()) return fr;
    return scale_mod(fr, inverse_mod_or_throw(fr.lc(), T), T);
}

bool canonical_less(const BiPoly& f, const BiPoly& g) {
    if (f.deg_y() != g.deg_y()) return f.deg_y() < g.deg_y();
    for (int i = f.deg_y(); i >= 0; --i) {
        const UniPoly a = f.coeff(i), b = g.coeff(i);
        if (!(a == b)) return canonical_less(a, b);
    }
    return false;
}

}  // namespace lexgb
