#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "isoclass/arith.hpp"
#include "isoclass/errors.hpp"

namespace isoclass {

struct RelativeClassNumber {
    std::int64_t p = 3;
    Integer value = 1;
};

namespace classnumber {

inline constexpr std::int64_t max_supported_prime = 200;

namespace detail {

/// prod over odd characters chi mod p of sum_{a=1}^{p-1} chi(a) a.
///
/// With g a primitive root and chi(g) = zeta^j (j odd), the sum is G(zeta^j)
/// for G(x) = sum_{t<h} (2 (g^t mod p) - p) x^t, h = (p-1)/2, reduced modulo
/// x^h + 1. The zeta^j with j odd are exactly the roots of x^h + 1, so the
/// product is the norm of G in Z[x]/(x^h + 1): the determinant of
/// multiplication by G.
inline Integer odd_character_sum_product(std::int64_t p)
{
    const std::int64_t g = arith::primitive_root(p);
    const std::size_t h = static_cast<std::size_t>((p - 1) / 2);
    std::vector<std::int64_t> coeff(h);
    std::int64_t power = 1;
    for (std::size_t t = 0; t < h; ++t) {
        coeff[t] = 2 * power - p;
        power = power * g % p;
    }
    // Column j holds x^j * G reduced by x^h = -1 (negacyclic shift).
    std::vector<std::vector<Integer>> m(h, std::vector<Integer>(h));
    for (std::size_t j = 0; j < h; ++j) {
        for (std::size_t t = 0; t < h; ++t) {
            const std::size_t row = t + j;
            if (row < h)
                m[row][j] = static_cast<long>(coeff[t]);
            else
                m[row - h][j] = -static_cast<long>(coeff[t]);
        }
    }
    return arith::determinant(std::move(m));
}

} // namespace detail

/// h^-(Q(zeta_p)) via h^- = 2p prod_{chi odd} (-B_{1,chi} / 2), B_{1,chi} = (1/p) sum chi(a) a.
inline Integer compute_relative_class_number(std::int64_t p)
{
    if (!arith::is_odd_prime(p))
        throw argument_error("relative_class_number: p must be an odd prime, got " + std::to_string(p));
    if (p > max_supported_prime)
        throw unsupported_error("relative_class_number: p = " + std::to_string(p) + " exceeds supported range p <= "
                                + std::to_string(max_supported_prime));
    const long h = static_cast<long>((p - 1) / 2);
    const Integer product = detail::odd_character_sum_product(p);
    Integer two_p_pow;
    mpz_ui_pow_ui(two_p_pow.get_mpz_t(), static_cast<unsigned long>(2 * p), static_cast<unsigned long>(h));
    Rational value(Integer(2 * p) * product * (h % 2 == 0 ? 1 : -1), two_p_pow);
    value.canonicalize();
    if (value.get_den() != 1 || value.get_num() < 1)
        throw std::logic_error("relative_class_number: non-integral or nonpositive result for p = " + std::to_string(p));
    return value.get_num();
}

/// Memoized relative_class_number; the cache is write-once per p.
inline Integer relative_class_number(std::int64_t p)
{
    static std::mutex mutex;
    static std::map<std::int64_t, Integer> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(p); it != cache.end())
            return it->second;
    }
    Integer value = compute_relative_class_number(p);
    std::lock_guard lock(mutex);
    return cache.emplace(p, value).first->second;
}

/// Number of conjugacy classes sharing signature collection count and invariant lattice genus.
inline Integer conjugacy_class_count(std::int64_t p, std::int64_t signature_count, std::int64_t invariant_classes)
{
    if (signature_count < 0 || invariant_classes < 1)
        throw argument_error("conjugacy_class_count: counts must be nonnegative / positive");
    return Integer(static_cast<long>(signature_count)) * Integer(static_cast<long>(invariant_classes))
           * relative_class_number(p);
}

/// Classes in the genus of the invariant lattice, for the unimodular genera
/// II_(3,3), II_(4,4), II_(5,5), II_(3,19), II_(4,20), II_(5,21) and
/// coinvariant signature (2, *). All are unique except (4,20), (p,n,m) = (23,1,0).
inline int invariant_genus_classes(int l_plus, int l_minus, std::int64_t p, int n, int m)
{
    static const std::pair<int, int> known[] = {{3, 3}, {4, 4}, {5, 5}, {3, 19}, {4, 20}, {5, 21}};
    bool listed = false;
    for (const auto& [lp, lm] : known)
        listed = listed || (lp == l_plus && lm == l_minus);
    if (!listed)
        throw unsupported_error("invariant_genus_classes: only II_(3,3), II_(4,4), II_(5,5), II_(3,19), "
                                "II_(4,20), II_(5,21) are tabulated");
    if (l_plus == 4 && l_minus == 20 && p == 23 && n == 1 && m == 0)
        return 2;
    return 1;
}

} // namespace classnumber
} // namespace isoclass
