#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "isoclass/arith.hpp"
#include "isoclass/discforms.hpp"

namespace isoclass {

/// Numerical data of an order-p isometry f of a unimodular lattice L:
/// L has signature (l+, l-), the coinvariant lattice L_f has signature
/// (s+, s-) and |det L_f| = p^n.
struct IsometryInvariants {
    std::int64_t p = 3;
    Parity parity = Parity::even;
    int l_plus = 0;
    int l_minus = 0;
    int s_plus = 0;
    int s_minus = 0;
    int n = 0;

    /// m with s+ + s- = (n + 2m)(p - 1), if it is a nonnegative integer.
    std::optional<int> m() const
    {
        if (p < 3)
            return std::nullopt;
        const std::int64_t s = s_plus + s_minus;
        if (s % (p - 1) != 0)
            return std::nullopt;
        const std::int64_t rest = s / (p - 1) - n;
        if (rest < 0 || rest % 2 != 0)
            return std::nullopt;
        return static_cast<int>(rest / 2);
    }

    /// Rank of the invariant lattice L^f.
    int invariant_rank() const { return l_plus + l_minus - s_plus - s_minus; }
};

/// Signatures (k_i^+, k_i^-) of f on the eigenspaces for zeta^i + zeta^-i, i = 1..(p-1)/2.
using SignatureCollection = std::vector<std::pair<int, int>>;

namespace unimodular {

/// Whether some unimodular lattice of the given parity and signature admits
/// an order-p isometry with these coinvariant data. Total: malformed input is false.
inline bool isometry_exists(const IsometryInvariants& inv)
{
    if (!arith::is_odd_prime(inv.p))
        return false;
    const int l = inv.l_plus + inv.l_minus;
    const int s = inv.s_plus + inv.s_minus;
    if (inv.l_plus < 0 || inv.l_minus < 0 || inv.s_plus < 0 || inv.s_minus < 0 || inv.n < 0)
        return false;

    if (inv.parity == Parity::odd) {
        if (l - s <= 0)
            return false;
    } else if (arith::mod(inv.l_plus - inv.l_minus, 8) != 0) {
        return false;
    }

    if (s == 0 || !inv.m())
        return false;
    if (inv.s_plus % 2 != 0 || inv.s_minus % 2 != 0)
        return false;
    if (inv.s_plus > inv.l_plus || inv.s_minus > inv.l_minus)
        return false;
    if (s + inv.n > l)
        return false;
    if ((inv.n == 0 || inv.n == l - s) && arith::mod(inv.s_plus - inv.s_minus, 8) != 0)
        return false;
    return true;
}

/// Existence of an even p-elementary lattice of signature (s+, s-) and
/// discriminant p^n carrying a fixed point free order-p isometry that acts
/// trivially on the discriminant group.
inline bool fixed_point_free_exists(std::int64_t p, int s_plus, int s_minus, int n, int m)
{
    if (!arith::is_odd_prime(p) || s_plus < 0 || s_minus < 0 || n < 0 || m < 0)
        return false;
    if (static_cast<std::int64_t>(s_plus) + s_minus != static_cast<std::int64_t>(n + 2 * m) * (p - 1))
        return false;
    if (s_plus % 2 != 0)
        return false;
    if (n == 0 && arith::mod(s_plus - s_minus, 8) != 0)
        return false;
    return true;
}

/// Non-symplectic order-p automorphism of a K3 surface with p-elementary
/// invariant lattice of rank r and discriminant p^a.
inline bool k3_exists(std::int64_t p, int r, int a)
{
    if (!arith::is_odd_prime(p) || r < 1 || a < 0)
        return false;
    if (p > 19 || (22 - r) % (p - 1) != 0)
        return false;
    const int quotient = static_cast<int>((22 - r) / (p - 1));
    if (a > std::min(r, quotient) || (quotient - a) % 2 != 0)
        return false;
    if ((a == 0 || a == r) && arith::mod(r - 2, 8) != 0)
        return false;
    return true;
}

/// The invariants k3_exists is derived from: II_(3,19), coinvariant (2, 20 - r), n = a.
inline IsometryInvariants k3_invariants(std::int64_t p, int r, int a)
{
    return IsometryInvariants{p, Parity::even, 3, 19, 2, 20 - r, a};
}

namespace detail {

inline void collect_collections(int slots, int per_slot, int remaining_plus, SignatureCollection& current,
                                std::vector<SignatureCollection>& out)
{
    if (static_cast<int>(current.size()) == slots) {
        if (remaining_plus == 0)
            out.push_back(current);
        return;
    }
    const int slots_left = slots - static_cast<int>(current.size());
    for (int kp = 0; kp <= per_slot && kp <= remaining_plus; kp += 2) {
        if (remaining_plus - kp > per_slot * (slots_left - 1))
            continue;
        current.emplace_back(kp, per_slot - kp);
        collect_collections(slots, per_slot, remaining_plus - kp, current, out);
        current.pop_back();
    }
}

} // namespace detail

/// All signature collections summing to (s+, s-), lexicographic on the flattened tuple.
inline std::vector<SignatureCollection> enumerate_signature_collections(std::int64_t p, int s_plus, int s_minus)
{
    if (!arith::is_odd_prime(p))
        throw argument_error("enumerate_signature_collections: p must be an odd prime");
    std::vector<SignatureCollection> out;
    if (s_plus < 0 || s_minus < 0 || s_plus % 2 != 0 || s_minus % 2 != 0)
        return out;
    const int slots = static_cast<int>((p - 1) / 2);
    const int total = s_plus + s_minus;
    if (total % slots != 0)
        return out;
    const int per_slot = total / slots;
    if (per_slot % 2 != 0)
        return out;
    SignatureCollection current;
    detail::collect_collections(slots, per_slot, s_plus, current, out);
    return out;
}

} // namespace unimodular
} // namespace isoclass
