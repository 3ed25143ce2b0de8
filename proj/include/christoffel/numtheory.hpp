#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace christoffel {

// Elementary number theory on machine integers. Everything here is
// desk-scale (trial division, linear-time orders); the arbitrary-precision
// side lives in ring.hpp.

inline std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("mod_inverse: zero modulus");
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(n), new_r = static_cast<std::int64_t>(a % n);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) throw std::invalid_argument("mod_inverse: arguments not coprime");
    if (t < 0) t += static_cast<std::int64_t>(n);
    return static_cast<std::uint64_t>(t);
}

inline bool is_prime_u64(std::uint64_t x) {
    if (x < 2) return false;
    if (x % 2 == 0) return x == 2;
    for (std::uint64_t d = 3; d * d <= x; d += 2)
        if (x % d == 0) return false;
    return true;
}

// (prime, exponent) pairs, primes ascending.
inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t x) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t d = 2; d * d <= x; d == 2 ? d = 3 : d += 2) {
        if (x % d != 0) continue;
        unsigned e = 0;
        while (x % d == 0) { x /= d; ++e; }
        out.emplace_back(d, e);
    }
    if (x > 1) out.emplace_back(x, 1);
    return out;
}

inline std::uint64_t totient(std::uint64_t n) {
    std::uint64_t phi = n;
    for (auto [p, e] : factorize(n)) phi -= phi / p;
    return phi;
}

// Least k >= 1 with m^k = 1 mod n. Caller guarantees gcd(m, n) = 1.
inline std::uint64_t multiplicative_order(std::uint64_t m, std::uint64_t n) {
    if (n == 1) return 1;
    std::uint64_t acc = m % n, k = 1;
    while (acc != 1) {
        acc = acc * m % n;
        ++k;
    }
    return k;
}

// Sign of the permutation j -> j*p mod n on {0, ..., n-1}, gcd(p, n) = 1.
// Computed from the cycle decomposition.
inline int multiplication_permutation_sign(std::uint64_t p, std::uint64_t n) {
    std::vector<bool> seen(n, false);
    std::uint64_t cycles = 0;
    for (std::uint64_t start = 0; start < n; ++start) {
        if (seen[start]) continue;
        ++cycles;
        std::uint64_t j = start;
        while (!seen[j]) {
            seen[j] = true;
            j = j * p % n;
        }
    }
    return (n - cycles) % 2 == 0 ? 1 : -1;
}

}  // namespace christoffel
