#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lexgb/unipoly.hpp"

namespace lexgb {

// Dense polynomial in y with coefficients in GF(p)[x].  Index i holds the
// coefficient of y^i; empty for 0, otherwise the last entry is nonzero.
class BiPoly {
public:
    explicit BiPoly(Prime p) : p_(p) {}
    BiPoly(Prime p, std::vector<UniPoly> ycoeffs);
    // Embeds a polynomial in x as a constant in y.
    explicit BiPoly(const UniPoly& c);

    static BiPoly constant(Prime p, u64 c) { return BiPoly(UniPoly::constant(p, c)); }
    static BiPoly y(Prime p);
    // rows[i][j] is the coefficient of y^i x^j, signed.
    static BiPoly from_rows(Prime p, const std::vector<std::vector<long long>>& rows);

    const Prime& prime() const { return p_; }
    const std::vector<UniPoly>& ycoeffs() const { return c_; }
    int deg_y() const { return c_.empty() ? NEG_INF : static_cast<int>(c_.size()) - 1; }
    // Maximum x-degree over all coefficients; NEG_INF for 0.
    int deg_x() const;
    // Total degree; NEG_INF for 0.
    int tdeg() const;
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    // True for 0 and for polynomials free of y.
    bool is_constant_y() const { return c_.size() <= 1; }
    UniPoly coeff(int i) const;
    // Leading coefficient in y; 0 for the zero polynomial.
    UniPoly lc() const { return c_.empty() ? UniPoly(p_) : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& g);
    BiPoly& operator-=(const BiPoly& g);
    friend BiPoly operator+(BiPoly f, const BiPoly& g) { return f += g; }
    friend BiPoly operator-(BiPoly f, const BiPoly& g) { return f -= g; }
    friend BiPoly operator*(const BiPoly& f, const BiPoly& g);
    friend bool operator==(const BiPoly& f, const BiPoly& g) { return f.p_ == g.p_ && f.c_ == g.c_; }

    // Multiplication of every coefficient by c.
    BiPoly scale(const UniPoly& c) const;
    // Multiplication by y^n.
    BiPoly shift_y(int n) const;
    // Evaluation at x = x0.
    UniPoly eval_x(u64 x0) const;

    std::string to_string() const;

private:
    void normalize();

    Prime p_;
    std::vector<UniPoly> c_;
};

// Coefficientwise reduction mod T; vanishing leading y-coefficients are stripped.
BiPoly reduce_mod(const BiPoly& f, const UniPoly& T);
// Product reduced mod T.
BiPoly mul_mod(const BiPoly& f, const BiPoly& g, const UniPoly& T);
// c * f reduced mod T.
BiPoly scale_mod(const BiPoly& f, const UniPoly& c, const UniPoly& T);

// True iff sqfp(T) divides every coefficient of f (so 0 is nilpotent).
bool is_nilpotent(const BiPoly& f, const UniPoly& T);

struct PremResult {
    BiPoly q;
    BiPoly r;
};
// lc(g)^(deg f - deg g + 1) * f = q*g + r with deg_y r < deg_y g.
// Requires g != 0 and deg_y f >= deg_y g.
PremResult prem_pquo(const BiPoly& f, const BiPoly& g);
// Same identity with every coefficient kept reduced mod T.
PremResult prem_pquo_mod(const BiPoly& f, const BiPoly& g, const UniPoly& T);

// Division by a y-monic h with coefficients reduced mod M: f = q*h + r, deg_y r < deg_y h.
PremResult divrem_monic_mod(const BiPoly& f, const BiPoly& h, const UniPoly& M);

// Monic gcd of all coefficients; 0 for the zero polynomial.
UniPoly content_x(const BiPoly& f);
// Divides every coefficient by c; throws ContractViolation if some division is inexact.
BiPoly exact_div(const BiPoly& f, const UniPoly& c);
// lc(f)^-1 * f mod T; throws DivisionByZero if lc(f) is not a unit mod T.
BiPoly make_monic_mod(const BiPoly& f, const UniPoly& T);

// Order by y-degree, then coefficients from the top down.
bool canonical_less(const BiPoly& f, const BiPoly& g);

}  // namespace lexgb
