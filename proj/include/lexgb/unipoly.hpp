#pragma once

#include <climits>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lexgb/prime.hpp"

namespace lexgb {

// Degree of the zero polynomial.  Never used in arithmetic.
inline constexpr int NEG_INF = INT_MIN;

// Dense polynomial in x over GF(p).  Index i holds the coefficient of x^i;
// the vector is empty for 0 and otherwise ends with a nonzero entry.
class UniPoly {
public:
    explicit UniPoly(Prime p) : p_(p) {}
    // Entries are reduced mod p and trailing zeros stripped.
    UniPoly(Prime p, std::vector<u64> coeffs);

    static UniPoly constant(Prime p, u64 c);
    static UniPoly monomial(Prime p, u64 c, int n);
    static UniPoly x(Prime p) { return monomial(p, 1, 1); }
    // Signed integer coefficients, lowest degree first.
    static UniPoly from_ints(Prime p, std::initializer_list<long long> coeffs);

    const Prime& prime() const { return p_; }
    const std::vector<u64>& coeffs() const { return c_; }
    int degree() const { return c_.empty() ? NEG_INF : static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    // True for 0 and for nonzero constants.
    bool is_constant() const { return c_.size() <= 1; }
    u64 coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0; }
    u64 lc() const { return c_.empty() ? 0 : c_.back(); }
    u64 eval(u64 x0) const;

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& g);
    UniPoly& operator-=(const UniPoly& g);
    UniPoly& operator*=(const UniPoly& g) { return *this = *this * g; }
    friend UniPoly operator+(UniPoly f, const UniPoly& g) { return f += g; }
    friend UniPoly operator-(UniPoly f, const UniPoly& g) { return f -= g; }
    friend UniPoly operator*(const UniPoly& f, const UniPoly& g);
    friend bool operator==(const UniPoly& f, const UniPoly& g) { return f.p_ == g.p_ && f.c_ == g.c_; }

    UniPoly scale(u64 s) const;
    // Multiplication by x^n.
    UniPoly shift(int n) const;

    std::string to_string(const char* var = "x") const;

private:
    void normalize();

    Prime p_;
    std::vector<u64> c_;
};

// Throws ContractViolation when the primes differ.
void check_same_field(const UniPoly& f, const UniPoly& g);

// f = q*g + r with deg r < deg g.  Throws DivisionByZero if g = 0.
std::pair<UniPoly, UniPoly> divrem(const UniPoly& f, const UniPoly& g);
UniPoly rem(const UniPoly& f, const UniPoly& g);
UniPoly quo(const UniPoly& f, const UniPoly& g);
// Quotient of an exact division; throws ContractViolation on nonzero remainder.
UniPoly exact_div(const UniPoly& f, const UniPoly& g);
bool divides(const UniPoly& d, const UniPoly& f);

UniPoly monic(const UniPoly& f);
UniPoly derivative(const UniPoly& f);
UniPoly mul_mod(const UniPoly& f, const UniPoly& g, const UniPoly& m);
UniPoly pow(const UniPoly& f, unsigned e);
UniPoly pow_mod(const UniPoly& f, u64 e, const UniPoly& m);

struct Xgcd {
    UniPoly g;  // monic gcd
    UniPoly s;
    UniPoly t;  // s*f + t*h = g
};
// Throws ContractViolation when both inputs are zero.
Xgcd xgcd(const UniPoly& f, const UniPoly& h);
// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& f, const UniPoly& h);
// Inverse of f modulo m, or nullopt when gcd(f, m) != 1.
std::optional<UniPoly> inverse_mod(const UniPoly& f, const UniPoly& m);
// Same, throwing DivisionByZero on a non-unit.
UniPoly inverse_mod_or_throw(const UniPoly& f, const UniPoly& m);
bool is_unit_mod(const UniPoly& f, const UniPoly& m);

// Squarefree part of a monic f with deg f < p.
UniPoly sqfp(const UniPoly& f);

struct SqfFactor {
    UniPoly r;
    int e;
};
// Yun decomposition of a monic f with deg f < p: f = prod r_i^e_i, e_i increasing.
std::vector<SqfFactor> sqf_decomposition(const UniPoly& f);

// r = f1 mod m1, r = f2 mod m2, deg r < deg(m1*m2).  Requires gcd(m1, m2) = 1.
UniPoly crt_pair(const UniPoly& f1, const UniPoly& m1, const UniPoly& f2, const UniPoly& m2);

// Total order: by degree, then coefficients from the top down.
bool canonical_less(const UniPoly& f, const UniPoly& g);

}  // namespace lexgb
