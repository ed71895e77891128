#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "isoclass/errors.hpp"

namespace isoclass {

using Integer = mpz_class;
using Rational = mpq_class;   // canonicalized after every arithmetic op by gmpxx

namespace arith {

inline bool is_prime(std::int64_t n)
{
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

inline bool is_odd_prime(std::int64_t p) { return p > 2 && is_prime(p); }

struct PrimePower {
    std::int64_t prime;
    int exponent;
    bool operator==(const PrimePower&) const = default;
};

/// Prime decomposition of |n| by trial division, primes strictly increasing.
/// Inputs stay well below 10^12 in this library.
using Factorization = std::vector<PrimePower>;

inline Factorization factorize(std::int64_t n)
{
    if (n == 0)
        throw argument_error("factorize: n must be nonzero");
    if (n < 0)
        n = -n;
    Factorization f;
    for (std::int64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d != 0)
            continue;
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        f.push_back({d, e});
    }
    if (n > 1)
        f.push_back({n, 1});
    return f;
}

inline int valuation(std::int64_t n, std::int64_t p)
{
    if (n == 0)
        throw argument_error("valuation: n must be nonzero");
    if (!is_prime(p))
        throw argument_error("valuation: p must be prime");
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

/// n with all factors of p removed (the k' in k = k' p^a).
inline std::int64_t prime_to_part(std::int64_t n, std::int64_t p)
{
    if (n == 0)
        throw argument_error("prime_to_part: n must be nonzero");
    while (n % p == 0)
        n /= p;
    return n;
}

inline std::int64_t mod(std::int64_t a, std::int64_t m)
{
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

inline std::int64_t powmod(std::int64_t base, std::int64_t e, std::int64_t m)
{
    __int128 result = 1;
    __int128 b = mod(base, m);
    while (e > 0) {
        if (e & 1)
            result = result * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return static_cast<std::int64_t>(result);
}

/// Legendre symbol (a/p) for an odd prime p, via Euler's criterion.
inline int legendre(std::int64_t a, std::int64_t p)
{
    if (!is_odd_prime(p))
        throw argument_error("legendre: p must be an odd prime, got " + std::to_string(p));
    std::int64_t r = mod(a, p);
    if (r == 0)
        return 0;
    return powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

/// (-1/p)^e
inline int minus_one_power_symbol(std::int64_t p, std::int64_t e)
{
    return (legendre(-1, p) == -1 && e % 2 != 0) ? -1 : 1;
}

inline int moebius(std::int64_t n)
{
    if (n < 1)
        throw argument_error("moebius: n must be positive");
    int mu = 1;
    for (const auto& [prime, e] : factorize(n)) {
        if (e > 1)
            return 0;
        mu = -mu;
    }
    return mu;
}

inline std::vector<std::int64_t> divisors(std::int64_t n)
{
    std::vector<std::int64_t> out;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n)
                out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Smallest primitive root modulo an odd prime.
inline std::int64_t primitive_root(std::int64_t p)
{
    if (!is_odd_prime(p))
        throw argument_error("primitive_root: p must be an odd prime");
    const auto phi_factors = factorize(p - 1);
    for (std::int64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (const auto& [q, e] : phi_factors) {
            if (powmod(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok)
            return g;
    }
    throw std::logic_error("primitive_root: none found");
}

/// Determinant of an integer matrix by fraction-free Gaussian elimination.
inline Integer determinant(std::vector<std::vector<Integer>> a)
{
    const std::size_t n = a.size();
    if (n == 0)
        return 1;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0)
                ++swap_row;
            if (swap_row == n)
                return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

} // namespace arith
} // namespace isoclass
