#pragma once

// Shared fixtures for the unit and acceptance tests.

#include <optional>
#include <random>
#include <vector>

#include "lexgb/bipoly.hpp"
#include "lexgb/subres.hpp"
#include "lexgb/unipoly.hpp"
#include "lexgb/verify.hpp"

namespace lexgb::testing {

inline const Prime P7(7);
inline const Prime P101(101);
inline const Prime P16(65521);

// Coefficients of x^0, x^1, ... as signed integers.
inline UniPoly U(const Prime& P, std::initializer_list<long long> c) { return UniPoly::from_ints(P, c); }

// rows[i][j] = coefficient of y^i x^j.
inline BiPoly B(const Prime& P, const std::vector<std::vector<long long>>& rows) { return BiPoly::from_rows(P, rows); }

inline BiPoly lift(const UniPoly& f) { return BiPoly(f); }

// (x + s)^e.
inline UniPoly linear_power(const Prime& P, long long s, unsigned e) { return pow(U(P, {s, 1}), e); }

inline UniPoly random_uni(const Prime& P, std::mt19937_64& rng, int max_deg) {
    const int d = static_cast<int>(rng() % static_cast<u64>(max_deg + 1));
    std::vector<u64> c(static_cast<size_t>(d) + 1);
    for (u64& v : c) v = P.reduce(rng());
    return UniPoly(P, std::move(c));
}

inline BiPoly random_bi(const Prime& P, std::mt19937_64& rng, int deg_y, int max_deg_x) {
    std::vector<UniPoly> cs;
    for (int i = 0; i <= deg_y; ++i) cs.push_back(random_uni(P, rng, max_deg_x));
    if (cs.back().is_zero()) cs.back() = UniPoly::constant(P, 1);
    return BiPoly(P, std::move(cs));
}

inline BiPoly random_monic(const Prime& P, std::mt19937_64& rng, int deg_y, int max_deg_x) {
    std::vector<UniPoly> cs;
    for (int i = 0; i < deg_y; ++i) cs.push_back(random_uni(P, rng, max_deg_x));
    cs.push_back(UniPoly::constant(P, 1));
    return BiPoly(P, std::move(cs));
}

inline bool same_ideal(const std::vector<BiPoly>& A, const std::vector<BiPoly>& Bs) { return ideals_equal(A, Bs); }

inline std::vector<BiPoly> with_modulus(std::vector<BiPoly> gens, const UniPoly& T) {
    gens.push_back(BiPoly(T));
    return gens;
}

// Res_y(a, b) as the determinant of the Sylvester matrix, by fraction-free
// (Bareiss) elimination over GF(p)[x].
inline UniPoly sylvester_resultant(const BiPoly& a, const BiPoly& b) {
    const Prime P = a.prime();
    const int m = a.deg_y(), n = b.deg_y();
    const int N = m + n;
    if (N == 0) return UniPoly::constant(P, 1);
    std::vector<std::vector<UniPoly>> M(static_cast<size_t>(N), std::vector<UniPoly>(static_cast<size_t>(N), UniPoly(P)));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) M[r][r + k] = a.coeff(m - k);
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) M[n + r][r + k] = b.coeff(n - k);
    UniPoly prev = UniPoly::constant(P, 1);
    bool negate = false;
    for (int k = 0; k < N - 1; ++k) {
        if (M[k][k].is_zero()) {
            int s = k + 1;
            while (s < N && M[s][k].is_zero()) ++s;
            if (s == N) return UniPoly(P);
            std::swap(M[k], M[s]);
            negate = !negate;
        }
        for (int i = k + 1; i < N; ++i) {
            for (int j = k + 1; j < N; ++j) M[i][j] = exact_div(M[i][j] * M[k][k] - M[i][k] * M[k][j], prev);
            M[i][k] = UniPoly(P);
        }
        prev = M[k][k];
    }
    return negate ? -M[N - 1][N - 1] : M[N - 1][N - 1];
}

// Compares the reduced plain p.r.s. of (a, b) with the p.r.s. of the reduced
// pair.  With d = deg_y a - deg_y (a mod T), elements from F3 on must satisfy
// F_k mod T = (-1)^d lc(b)^d F'_k.  nullopt when some plain leading
// coefficient is not a unit mod T or the reduced pair is not admissible.
inline std::optional<bool> specialization_matches(const BiPoly& a, const BiPoly& b, const UniPoly& T) {
    const std::vector<PrsStep> plain = prs_plain(a, b);
    for (size_t i = 1; i < plain.size(); ++i)
        if (!is_unit_mod(plain[i].f.lc(), T)) return std::nullopt;
    const BiPoly fa = reduce_mod(a, T), fb = reduce_mod(b, T);
    if (fa.is_zero() || !is_unit_mod(fa.lc(), T) || fa.deg_y() < fb.deg_y()) return std::nullopt;
    const int d = a.deg_y() - fa.deg_y();
    UniPoly k = pow_mod(b.lc(), static_cast<u64>(d), T);
    if (d % 2) k = rem(-k, T);
    const PrsOutcome m = prs_mod(fa, fb, T);
    if (m.status != PrsStatus::Completed || m.last + 1 != plain.size()) return false;
    for (size_t i = 2; i < plain.size(); ++i)
        if (reduce_mod(plain[i].f, T) != scale_mod(m.steps[i].f, k, T)) return false;
    return true;
}

// Pair whose first polynomial loses 1 or 2 degrees modulo a random T of two
// primary factors: a = T c y^n1 + (monic of degree nu1 >= deg_y b).
struct DropInstance {
    BiPoly a;
    BiPoly b;
    UniPoly T;
};

inline DropInstance drop_instance(const Prime& P, std::mt19937_64& rng) {
    const long long r1 = static_cast<long long>(rng() % 50), r2 = 50 + static_cast<long long>(rng() % 40);
    const UniPoly T = linear_power(P, r1, 1 + static_cast<unsigned>(rng() % 3)) * linear_power(P, r2, 1 + static_cast<unsigned>(rng() % 2));
    const int n2 = 1 + static_cast<int>(rng() % 2);
    const int nu1 = n2 + static_cast<int>(rng() % 2);
    const int n1 = nu1 + 1 + static_cast<int>(rng() % 2);
    UniPoly c = random_uni(P, rng, 2);
    if (c.is_zero()) c = UniPoly::constant(P, 1);
    return {random_monic(P, rng, nu1, 2) + BiPoly(c * T).shift_y(n1), random_bi(P, rng, n2, 2), T};
}

}  // namespace lexgb::testing
