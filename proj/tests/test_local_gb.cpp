#include "doctest.h"
#include "helpers.hpp"
#include "lexgb/errors.hpp"
#include "lexgb/local_gb.hpp"

using namespace lexgb;
using namespace lexgb::testing;

namespace {

BiPoly ylin(const UniPoly& c) { return BiPoly(c.prime(), {c, UniPoly::constant(c.prime(), 1)}); }

const UniPoly X = U(P16, {0, 1});
const UniPoly X2 = U(P16, {0, 0, 1});

BiPoly intro_a() { return ylin(X) * BiPoly::y(P16) * ylin(U(P16, {1, 1})) * ylin(U(P16, {-1})); }
BiPoly intro_b() { return ylin(X) * ylin(U(P16, {1, -1})); }

}  // namespace

TEST_CASE("last non-nilpotent element of the intro system") {
    const LnnComponent c = last_non_nil(intro_a(), intro_b(), X2);
    CHECK(c.u == B(P16, {{0, 1}, {1}, {1}}));
    CHECK(c.v == BiPoly::y(P16));
    CHECK(c.multiplier == X);
    CHECK(c.cofactor == X);
    CHECK(!c.corner_i);
}

TEST_CASE("degree corner cases") {
    const UniPoly p = U(P16, {3, 1});
    const UniPoly p2 = pow(p, 2);
    // f1 = y + p, f2 = p y + p
    const LnnComponent c1 = last_non_nil(ylin(p), BiPoly(P16, {p, p}), p2);
    CHECK(c1.u == ylin(p));
    CHECK(c1.v == B(P16, {{1}, {1}}));
    CHECK(c1.multiplier == p);
    CHECK(c1.cofactor == p);
    CHECK(c1.corner_i);
    CHECK(c1.corner_ii);

    // f1 = y + p, f2 = y
    const LnnComponent c3 = last_non_nil(ylin(p), BiPoly::y(P16), p2);
    CHECK(c3.u == BiPoly::y(P16));
    CHECK(c3.v.is_one());
    CHECK(c3.multiplier == p);
    CHECK(c3.cofactor == p);
    CHECK(c3.corner_iii);
}

TEST_CASE("minimal lexGB of the intro system") {
    const LexGB G = subres_to_gb(intro_a(), intro_b(), X2);
    const std::vector<BiPoly> expect{lift(X2), B(P16, {{}, {0, 1}}), B(P16, {{0, 1}, {1, 3}, {1}})};
    CHECK(same_ideal(G.polys(), expect));
    CHECK(same_ideal(G.polys(), {B(P16, {{0, 1}, {1}, {1}}), B(P16, {{}, {0, 1}}), lift(X2)}));
    CHECK(G.elems.size() == 3);
    CHECK(G.dim() == 3);
    const LazardReport rep = lazard_check(G);
    CHECK(rep.ok);
    CHECK(rep.minimal);
    // Minimal but not reduced: the inter-reduced basis differs.
    const LexGB R = reduce_gb(G);
    CHECK(same_ideal(R.polys(), G.polys()));
}

TEST_CASE("lexGB when the p.r.s. completes") {
    const UniPoly T = linear_power(P16, 2, 3);
    const BiPoly g = B(P16, {{1, 1}, {2}, {1}});
    const BiPoly a = g * B(P16, {{5}, {1}});
    const LexGB G = subres_to_gb(a, g, T);
    REQUIRE(G.elems.size() == 2);
    CHECK(G.elems[0].h == T);
    CHECK(G.elems[1].g == reduce_mod(g, T));
}

TEST_CASE("unit ideal") {
    const UniPoly T = linear_power(P16, 2, 3);
    CHECK(subres_to_gb(B(P16, {{1}, {0, 1}, {1}}), BiPoly::constant(P16, 3), T).is_unit());
    CHECK(subres_to_gb(B(P16, {{1}, {1}}), B(P16, {{2}, {1}}), T).is_unit());
    CHECK(LexGB::unit(P16).dim() == 0);
    CHECK_THROWS_AS(subres_to_gb(B(P16, {{1}, {1}}), BiPoly(P16), T), ContractViolation);
}

TEST_CASE("random local instances") {
    std::mt19937_64 rng(51);
    int nontrivial = 0;
    for (int t = 0; t < 80; ++t) {
        const UniPoly pi = U(P101, {static_cast<long long>(rng() % 101), 1});
        const int e = 1 + static_cast<int>(rng() % 4);
        const UniPoly T = pow(pi, static_cast<unsigned>(e));
        // Shared root plus perturbation so the ideal is rarely the unit ideal.
        const BiPoly r = B(P101, {{static_cast<long long>(rng() % 101), static_cast<long long>(rng() % 101)}, {1}});
        const BiPoly a = reduce_mod(r * random_monic(P101, rng, 1 + rng() % 2, 3), T);
        BiPoly b = r * random_bi(P101, rng, rng() % 2, 3) + random_bi(P101, rng, 1, 2).scale(pow(pi, 1 + rng() % e));
        b = reduce_mod(b, T);
        if (b.is_zero() || is_nilpotent(b, T) || a.deg_y() < b.deg_y()) continue;

        const LnnComponent c = last_non_nil(a, b, T);
        CHECK(c.multiplier * c.cofactor == T);
        CHECK(same_ideal({c.u, c.v.scale(c.multiplier), lift(T)}, {a, b, lift(T)}));
        if (!c.v.is_zero() && !c.corner_i) CHECK(c.v.deg_y() < c.u.deg_y());
        if (!c.corner_ii && !c.corner_iii) CHECK(c.u.deg_y() <= a.deg_y());

        const LexGB G = subres_to_gb(a, b, T);
        CHECK(same_ideal(G.polys(), {a, b, lift(T)}));
        if (!G.is_unit()) {
            ++nontrivial;
            const LazardReport rep = lazard_check(G);
            CHECK(rep.ok);
            CHECK(rep.minimal);
            CHECK(G.dim() == staircase_dim(buchberger_lex({a, b, lift(T)})));
        }
    }
    CHECK(nontrivial > 20);
}
