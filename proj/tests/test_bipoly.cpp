#include "doctest.h"
#include "helpers.hpp"
#include "lexgb/errors.hpp"

using namespace lexgb;
using namespace lexgb::testing;

namespace {

// y + c(x)
BiPoly ylin(const UniPoly& c) { return BiPoly(c.prime(), {c, UniPoly::constant(c.prime(), 1)}); }

}  // namespace

TEST_CASE("reduce_mod") {
    const UniPoly x2 = U(P16, {0, 0, 1});
    // x^2 y + y -> y
    CHECK(reduce_mod(B(P16, {{0}, {1, 0, 1}}), x2) == BiPoly::y(P16));
    const BiPoly small = B(P16, {{1, 2}, {3}});
    CHECK(reduce_mod(small, x2) == small);
    // (y + x)(y + 1 - x) = y^2 + y + x - x^2
    const BiPoly b = ylin(U(P16, {0, 1})) * ylin(U(P16, {1, -1}));
    CHECK(reduce_mod(b, x2) == B(P16, {{0, 1}, {1}, {1}}));
}

TEST_CASE("reduce_mod is a ring morphism") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        const UniPoly T = monic(random_uni(P101, rng, 4) + U(P101, {0, 0, 0, 0, 0, 1}));
        const BiPoly f = random_bi(P101, rng, 3, 7), g = random_bi(P101, rng, 3, 7);
        CHECK(reduce_mod(f + g, T) == reduce_mod(reduce_mod(f, T) + reduce_mod(g, T), T));
        CHECK(reduce_mod(f * g, T) == mul_mod(reduce_mod(f, T), reduce_mod(g, T), T));
    }
}

TEST_CASE("nilpotency") {
    const UniPoly x = U(P16, {0, 1}), x1 = U(P16, {1, 1});
    const UniPoly T = pow(x, 2) * pow(x1, 2);
    // x(x+1) y + 2x(x+1)(x-1)
    const BiPoly f = BiPoly(P16, {(x * x1 * U(P16, {-1, 1})).scale(2), x * x1});
    CHECK(is_nilpotent(f, T));
    CHECK(is_nilpotent(BiPoly(P16), T));
    CHECK(!is_nilpotent(BiPoly::y(P16), T));

    // Agreement of the three formulations.
    std::mt19937_64 rng(4);
    const UniPoly s = sqfp(T);
    for (int t = 0; t < 100; ++t) {
        BiPoly g = random_bi(P16, rng, 2, 3);
        if (rng() % 2) g = g.scale(s);
        bool each = true, by_sqfp = true;
        for (const UniPoly& c : g.ycoeffs()) {
            each = each && is_nilpotent(BiPoly(c), T);
            by_sqfp = by_sqfp && divides(s, c);
        }
        CHECK(is_nilpotent(g, T) == each);
        CHECK(is_nilpotent(g, T) == by_sqfp);
    }
}

TEST_CASE("pseudo-division") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 100; ++t) {
        const BiPoly f = random_bi(P16, rng, 5, 4), g = random_bi(P16, rng, 1 + rng() % 4, 4);
        const PremResult pr = prem_pquo(f, g);
        const UniPoly l = pow(g.lc(), static_cast<unsigned>(f.deg_y() - g.deg_y() + 1));
        CHECK(f.scale(l) == pr.q * g + pr.r);
        CHECK(pr.r.deg_y() < g.deg_y());
    }
    const BiPoly g = random_monic(P16, rng, 3, 3);
    CHECK(prem_pquo(g * random_monic(P16, rng, 2, 3), g).r.is_zero());

    // prem(y + p, y) = p for p = x + 1, over p^2.
    const UniPoly p = U(P16, {1, 1});
    CHECK(prem_pquo_mod(ylin(p), BiPoly::y(P16), pow(p, 2)).r == BiPoly(p));
    CHECK_THROWS(prem_pquo(BiPoly::y(P16), BiPoly(P16)));
}

TEST_CASE("content, leading coefficient and exact division") {
    // 3x^2 y^2 + (x^2 + 2x) y + x
    const BiPoly f = B(P16, {{0, 1}, {0, 2, 1}, {0, 0, 3}});
    CHECK(content_x(f) == U(P16, {0, 1}));
    CHECK(gcd(content_x(f), U(P16, {0, 0, 0, 1})) == U(P16, {0, 1}));
    CHECK(B(P16, {{}, {0, 1}, {1}}).lc().is_one());
    const BiPoly m4xy = B(P16, {{}, {0, -4}});
    CHECK(exact_div(m4xy, U(P16, {0, -4})) == BiPoly::y(P16));
    CHECK_THROWS_AS(exact_div(B(P16, {{1, 1}}), U(P16, {0, 1})), ContractViolation);
}

TEST_CASE("make_monic_mod") {
    const UniPoly T = pow(U(P16, {0, 1}), 2);
    const BiPoly f = B(P16, {{1}, {0, 1}, {2, 1}});
    const BiPoly m = make_monic_mod(f, T);
    CHECK(m.is_monic());
    CHECK(m.deg_y() == 2);
    CHECK_THROWS_AS(make_monic_mod(B(P16, {{1}, {0, 1}}), T), DivisionByZero);
}
