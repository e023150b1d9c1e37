#pragma once

// Machine-word modular arithmetic for odd primes p < 2^63.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <optional>

namespace inertia::detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t acc = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) acc = mul_mod(acc, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return acc;
}

// Extended Euclid. Requires gcd(a, m) = 1 and m < 2^63.
inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(m), nr = static_cast<std::int64_t>(a % m);
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    assert(r == 1 && "inv_mod: argument not invertible");
    if (t < 0) t += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(t);
}

// Deterministic Miller-Rabin; the base set is sufficient for all n < 2^64.
inline bool is_prime_u64(std::uint64_t n) {
    constexpr std::uint64_t bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    if (n < 2) return false;
    for (std::uint64_t b : bases) {
        if (n % b == 0) return n == b;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t b : bases) {
        std::uint64_t x = pow_mod(b, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Square root of a modulo an odd prime p, Tonelli-Shanks for p % 4 == 1.
// Returns the root with the smaller canonical representative, or nullopt
// for quadratic non-residues.
inline std::optional<std::uint64_t> sqrt_mod_prime(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) return 0;
    if (pow_mod(a, (p - 1) / 2, p) != 1) return std::nullopt;
    std::uint64_t r;
    if (p % 4 == 3) {
        r = pow_mod(a, (p + 1) / 4, p);
    } else {
        std::uint64_t q = p - 1;
        std::uint64_t s = 0;
        while ((q & 1) == 0) {
            q >>= 1;
            ++s;
        }
        std::uint64_t z = 2;
        while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
        std::uint64_t m = s;
        std::uint64_t c = pow_mod(z, q, p);
        std::uint64_t t = pow_mod(a, q, p);
        r = pow_mod(a, (q + 1) / 2, p);
        while (t != 1) {
            std::uint64_t i = 0, t2 = t;
            while (t2 != 1) {
                t2 = mul_mod(t2, t2, p);
                ++i;
            }
            std::uint64_t b = pow_mod(c, std::uint64_t{1} << (m - i - 1), p);
            r = mul_mod(r, b, p);
            c = mul_mod(b, b, p);
            t = mul_mod(t, c, p);
            m = i;
        }
    }
    return std::min(r, p - r);
}

} // namespace inertia::detail
