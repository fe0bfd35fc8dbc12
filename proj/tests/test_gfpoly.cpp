#include "doctest.h"
#include "helpers.hpp"
#include "lexgb/errors.hpp"

using namespace lexgb;
using namespace lexgb::testing;

TEST_CASE("prime field construction and arithmetic") {
    CHECK_THROWS_AS(Prime(1), ContractViolation);
    CHECK_THROWS_AS(Prime(2), ContractViolation);
    CHECK_THROWS_AS(Prime(65535), ContractViolation);
    const Prime big(4611686018427388039ULL);
    CHECK(!big.small());
    const u64 a = big.value() - 2;
    CHECK(big.mul(a, big.inv(a)) == 1);
    CHECK(big.mul(a, a) == 4);
    CHECK(P7.from_int(-1) == 6);
    CHECK_THROWS_AS(P7.inv(0), DivisionByZero);
    CHECK(is_prime_u64(65521));
    CHECK(!is_prime_u64(65521ULL * 65537ULL));
}

TEST_CASE("canonical form and the zero degree sentinel") {
    const UniPoly z(P7, {0, 0, 0});
    CHECK(z.is_zero());
    CHECK(z.degree() == NEG_INF);
    CHECK((U(P7, {1, 2}) * UniPoly(P7)).is_zero());
    CHECK(U(P7, {3, 7, 14}).degree() == 0);
}

TEST_CASE("divrem") {
    auto [q, r] = divrem(U(P7, {-1, 0, 1}), U(P7, {-1, 1}));
    CHECK(q == U(P7, {1, 1}));
    CHECK(r.is_zero());
    const Prime P5(5);
    CHECK(rem(U(P5, {1, 2, 0, 1}), U(P5, {1, 0, 1})) == U(P5, {1, 1}));
    CHECK_THROWS_AS(divrem(U(P7, {1}), UniPoly(P7)), DivisionByZero);

    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        const UniPoly f = random_uni(P16, rng, 12), g = random_uni(P16, rng, 6);
        if (g.is_zero()) continue;
        auto [q2, r2] = divrem(f, g);
        CHECK(q2 * g + r2 == f);
        CHECK(r2.degree() < g.degree());
    }
}

TEST_CASE("xgcd") {
    const UniPoly x2 = U(P16, {0, 0, 1}), x3 = U(P16, {0, 0, 0, 1});
    const Xgcd r = xgcd(x2, x3);
    CHECK(r.g == x2);
    CHECK(r.s * x2 + r.t * x3 == r.g);

    const Prime P(65537);
    const UniPoly f = U(P, {0, 0, 0, 1}) * pow(U(P, {1, 1}), 2), g = U(P, {0, 0, 2, 1});
    CHECK(gcd(f, g) == U(P, {0, 0, 1}));

    const UniPoly T = U(P16, {0, 0, 0, 1}), c = U(P16, {3, 1});
    const Xgcd r2 = xgcd(T, c);
    CHECK(r2.g.is_one());
    CHECK(rem(r2.t * c, T).is_one());
    CHECK_THROWS_AS(xgcd(UniPoly(P16), UniPoly(P16)), ContractViolation);

    std::mt19937_64 rng(5);
    for (int t = 0; t < 100; ++t) {
        const UniPoly a = random_uni(P101, rng, 8), b = random_uni(P101, rng, 8);
        if (a.is_zero() && b.is_zero()) continue;
        const Xgcd x = xgcd(a, b);
        CHECK(x.s * a + x.t * b == x.g);
        CHECK(divides(x.g, a));
        CHECK(divides(x.g, b));
    }
}

TEST_CASE("squarefree part") {
    const UniPoly x = U(P16, {0, 1});
    CHECK(sqfp(pow(x, 3) * pow(U(P16, {1, 1}), 2)) == x * U(P16, {1, 1}));
    const UniPoly f = U(P16, {2, 3, 1});
    CHECK(sqfp(f) == f);
    const UniPoly big = pow(x, 5) * linear_power(P16, 5, 6) * linear_power(P16, 10, 7) * linear_power(P16, 15, 8);
    const UniPoly expect = x * U(P16, {5, 1}) * U(P16, {10, 1}) * U(P16, {15, 1});
    CHECK(sqfp(big) == expect);
    CHECK(sqfp(sqfp(big)) == sqfp(big));
    CHECK_THROWS_AS(sqfp(UniPoly(P16)), ContractViolation);
    // deg f >= p is outside the contract.
    CHECK_THROWS_AS(sqfp(U(P7, {0, 0, 0, 0, 0, 0, 0, 1})), ContractViolation);
}

TEST_CASE("squarefree decomposition") {
    const UniPoly x = U(P16, {0, 1}), x1 = U(P16, {1, 1});
    const auto d = sqf_decomposition(pow(x, 3) * pow(x1, 2));
    REQUIRE(d.size() == 2);
    CHECK(d[0].r == x1);
    CHECK(d[0].e == 2);
    CHECK(d[1].r == x);
    CHECK(d[1].e == 3);
    const auto one = sqf_decomposition(x * x1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].e == 1);

    std::mt19937_64 rng(9);
    for (int t = 0; t < 50; ++t) {
        UniPoly f = UniPoly::constant(P16, 1);
        for (int k = 0; k < 4; ++k) f = f * pow(monic(U(P16, {static_cast<long long>(rng() % 50), 1})), 1 + rng() % 4);
        const auto dec = sqf_decomposition(f);
        UniPoly prod = UniPoly::constant(P16, 1);
        for (size_t i = 0; i < dec.size(); ++i) {
            prod = prod * pow(dec[i].r, static_cast<unsigned>(dec[i].e));
            CHECK(gcd(dec[i].r, derivative(dec[i].r)).is_one());
            if (i > 0) CHECK(dec[i - 1].e < dec[i].e);
            for (size_t j = 0; j < i; ++j) CHECK(gcd(dec[i].r, dec[j].r).is_one());
        }
        CHECK(prod == f);
    }
}

TEST_CASE("CRT") {
    const UniPoly m1 = U(P7, {0, 1}), m2 = U(P7, {1, 1});
    const UniPoly r = crt_pair(U(P7, {1}), m1, UniPoly(P7), m2);
    CHECK(rem(r, m1).is_one());
    CHECK(rem(r, m2).is_zero());
    CHECK(r.degree() < 2);
    CHECK(crt_pair(U(P7, {3}), m1, U(P7, {3}), m2) == U(P7, {3}));
    CHECK_THROWS_AS(crt_pair(U(P7, {1}), m1, U(P7, {2}), m1 * m2), ContractViolation);
}

TEST_CASE("modular inverse and pow_mod") {
    const UniPoly T = pow(U(P16, {0, 1}), 3);
    CHECK(!is_unit_mod(U(P16, {0, 2}), T));
    const UniPoly c = U(P16, {2, 1, 5});
    const UniPoly ci = inverse_mod_or_throw(c, T);
    CHECK(rem(c * ci, T).is_one());
    CHECK_THROWS_AS(inverse_mod_or_throw(U(P16, {0, 1}), T), DivisionByZero);
    CHECK(pow_mod(U(P16, {0, 1}), 3, T).is_zero());
    CHECK(pow_mod(c, 5, T) == rem(pow(c, 5), T));
}
