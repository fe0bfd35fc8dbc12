#pragma once

#include <cstdint>

namespace lexgb {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// The field GF(p) for an odd prime 3 <= p < 2^64.  Elements are u64 in [0, p).
class Prime {
public:
    // Throws ContractViolation if p is not an odd prime.
    explicit Prime(u64 p);

    u64 value() const { return p_; }
    // True when products of two elements fit in 64 bits.
    bool small() const { return small_; }

    u64 reduce(u64 a) const { return a % p_; }
    u64 add(u64 a, u64 b) const {
        u64 s = a + b;
        return (s >= p_ || s < a) ? s - p_ : s;
    }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + (p_ - b); }
    u64 neg(u64 a) const { return a == 0 ? 0 : p_ - a; }
    u64 mul(u64 a, u64 b) const {
        if (small_) return (a * b) % p_;
        return static_cast<u64>((static_cast<u128>(a) * b) % p_);
    }
    u64 pow(u64 a, u64 e) const;
    // Throws DivisionByZero on 0.
    u64 inv(u64 a) const;
    // Maps a signed integer into [0, p).
    u64 from_int(long long v) const;

    friend bool operator==(const Prime& a, const Prime& b) { return a.p_ == b.p_; }

private:
    u64 p_;
    bool small_;
};

// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime_u64(u64 n);

}  // namespace lexgb
