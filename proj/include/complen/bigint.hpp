#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace complen {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt big_pow(const BigInt& base, std::uint64_t e) {
    BigInt r = 1, b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// Prime factorisation of a word-sized integer by trial division.
// Everything we factor is an orbit length (<= 2^20) or a tiny CLI argument,
// so this never sees hard inputs.
inline std::map<std::uint64_t, unsigned> factorize_u64(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize_u64: zero");
    std::map<std::uint64_t, unsigned> f;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            ++f[p];
            n /= p;
        }
    }
    if (n > 1) ++f[n];
    return f;
}

// Omega(n): number of prime divisors counted with multiplicity.
inline unsigned omega_u64(std::uint64_t n) {
    unsigned c = 0;
    for (auto& [p, e] : factorize_u64(n)) {
        (void)p;
        c += e;
    }
    return c;
}

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    auto f = factorize_u64(n);
    return f.size() == 1 && f.begin()->second == 1;
}

// Largest e with p^e | n, n word-sized.
inline unsigned valuation_u64(std::uint64_t n, std::uint64_t p) {
    unsigned v = 0;
    while (n % p == 0) {
        ++v;
        n /= p;
    }
    return v;
}

// If n = b^k with k maximal (n >= 2), returns {b, k} with b not a perfect power.
inline std::pair<BigInt, unsigned> perfect_power_split(const BigInt& n) {
    if (n < 2) throw std::invalid_argument("perfect_power_split: need n >= 2");
    for (unsigned k = 64; k >= 2; --k) {
        // integer k-th root by binary search
        BigInt lo = 1, hi = n;
        while (lo < hi) {
            BigInt mid = (lo + hi + 1) / 2;
            if (big_pow(mid, k) <= n)
                lo = mid;
            else
                hi = mid - 1;
        }
        if (big_pow(lo, k) == n && lo >= 2) return {lo, k};
    }
    return {n, 1};
}

}  // namespace complen
