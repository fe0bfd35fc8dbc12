#include "lexgb/prime.hpp"

#include <string>

#include "lexgb/errors.hpp"

namespace lexgb {

namespace {

u64 mulmod64(u64 a, u64 b, u64 m) { return static_cast<u64>((static_cast<u128>(a) * b) % m); }

u64 powmod64(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod64(r, a, m);
        a = mulmod64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Prime::Prime(u64 p) : p_(p), small_(p < (u64{1} << 32)) {
    if (p < 3 || !is_prime_u64(p)) {
        throw ContractViolation("not an odd prime: " + std::to_string(p));
    }
}

u64 Prime::pow(u64 a, u64 e) const {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

u64 Prime::inv(u64 a) const {
    if (a % p_ == 0) throw DivisionByZero("inverse of zero in GF(p)");
    return pow(a, p_ - 2);
}

u64 Prime::from_int(long long v) const {
    if (v >= 0) return static_cast<u64>(v) % p_;
    u64 m = static_cast<u64>(-(v + 1)) + 1;  // |v| without overflow
    return neg(m % p_);
}

}  // namespace lexgb
