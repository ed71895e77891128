#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>

#include "isoclass/arith.hpp"
#include "isoclass/discforms.hpp"
#include "isoclass/errors.hpp"

namespace isoclass {

/// Primitive x in a lattice of genus `genus` with x^2 = k and div(x) = div.
struct EmbeddingQuery {
    GenusSymbol genus;
    std::int64_t k = 2;
    std::int64_t div = 1;
};

enum class Existence { yes, no, necessary_only };

inline std::string to_string(Existence e)
{
    switch (e) {
    case Existence::yes: return "yes";
    case Existence::no: return "no";
    case Existence::necessary_only: return "necessary_only";
    }
    return "no";
}

struct OrbitReport {
    Existence exists = Existence::no;
    std::optional<int> orbit_count;   // nullopt = unknown
    bool special_case = false;
    std::set<std::int64_t> l1_set;
    std::set<std::int64_t> l0_set;
};

namespace embeddings {

namespace detail {

inline void validate(const EmbeddingQuery& q)
{
    if (q.k <= 0 || q.k % 2 != 0)
        throw argument_error("vector query: k must be positive and even, got " + std::to_string(q.k));
    if (q.div != 1 && q.div != q.genus.p)
        throw argument_error("vector query: divisibility must be 1 or p");
    if (q.genus.parity != Parity::even)
        throw argument_error("vector query: genus must be even");
    if (!discforms::genus_exists(q.genus))
        throw argument_error("vector query: genus " + q.genus.to_string() + " is empty");
}

// Conditions (I)-(IV) for the given divisibility.
inline bool local_conditions(const EmbeddingQuery& q)
{
    const auto& g = q.genus;
    const std::int64_t p = g.p;
    const int a = arith::valuation(q.k, p);
    const std::int64_t k_prime = arith::prime_to_part(q.k, p);
    const int rk = g.rank();
    const bool mod8 = arith::mod(g.sig_plus - g.sig_minus, 8) == 0;
    if (q.div == 1) {
        if (a == 0) {
            if (g.n < rk - 1)
                return true;
            return g.n == rk - 1
                   && arith::minus_one_power_symbol(p, g.sig_minus) * arith::legendre(k_prime, p) == g.eps;
        }
        if (g.n < rk - 2)
            return true;
        return g.n == rk - 2 && mod8;
    }
    if (a == 1)
        return g.n > 1 || (g.n == 1 && arith::legendre(k_prime, p) == g.eps);
    if (a > 1)
        return g.n > 2 || (g.n == 2 && mod8);
    return false;
}

} // namespace detail

/// Existence of a primitive vector of square k and divisibility div.
/// Outside l+ >= 2, l- >= 1, rank >= 3 a positive answer is only necessary.
inline Existence vector_exists(const EmbeddingQuery& q)
{
    detail::validate(q);
    if (q.genus.sig_plus == 0)
        return Existence::no;   // x^2 = k > 0 impossible in a negative definite lattice
    if (!detail::local_conditions(q))
        return Existence::no;
    if (q.genus.sig_plus == 1 || q.genus.sig_minus == 0 || q.genus.rank() < 3)
        return Existence::necessary_only;
    return Existence::yes;
}

/// The prime sets L1, L0 attached to j (p excluded).
inline std::pair<std::set<std::int64_t>, std::set<std::int64_t>> spinor_prime_sets(std::int64_t j, std::int64_t p)
{
    std::set<std::int64_t> l1, l0;
    for (const auto& [ell, e] : arith::factorize(j)) {
        if (ell == p)
            continue;
        const bool odd = e % 2 != 0;
        if (ell == 2)
            (odd ? l0 : l1).insert(2);
        else
            (odd ? l1 : l0).insert(ell);
    }
    return {l1, l0};
}

/// Number of O(L)-orbits of primitive vectors with x^2 = k and given divisibility.
/// Unknown outside l+ >= 2, l- >= 1, rank >= 4.
inline OrbitReport vector_orbits(const EmbeddingQuery& q)
{
    OrbitReport report;
    report.exists = vector_exists(q);
    const auto& g = q.genus;
    const std::int64_t p = g.p;
    std::tie(report.l1_set, report.l0_set) = spinor_prime_sets(q.k, p);

    if (report.exists == Existence::no) {
        report.orbit_count = 0;
        return report;
    }
    if (g.sig_plus < 2 || g.sig_minus < 1 || g.rank() < 4)
        return report;

    const int a = arith::valuation(q.k, p);
    const std::int64_t k_prime = arith::prime_to_part(q.k, p);
    // |det L| / div^2 = p  <=>  n - 2 v_p(div) = 1
    const int det_exponent = g.n - (q.div == 1 ? 0 : 2);
    bool special = g.rank() == 4 && a >= 2 && det_exponent == 1 && arith::legendre(-2 * k_prime, p) == 1;
    if (special && arith::mod(p, 4) == 3) {
        bool nonsquare = false;
        for (auto ell : report.l1_set)
            nonsquare = nonsquare || arith::legendre(ell, p) == -1;
        special = nonsquare;
    }
    report.special_case = special;
    report.orbit_count = special ? 2 : 1;
    return report;
}

/// Primitive embedding of A2(-1) into a lattice of genus II_(3,l-)p^{eps n}
/// with divisibility 1 or 3; unique up to O(L) when it exists.
inline bool a2_embeds(int l_minus, std::int64_t p, int eps, int n, std::int64_t div)
{
    if (l_minus <= 0 || l_minus % 2 == 0)
        throw argument_error("a2_embeds: l- must be positive and odd");
    if (!arith::is_odd_prime(p))
        throw argument_error("a2_embeds: p must be an odd prime");
    if (div != 1 && div != 3)
        throw argument_error("a2_embeds: divisibility must be 1 or 3");
    if (eps != 1 && eps != -1)
        throw argument_error("a2_embeds: eps must be +1 or -1");
    const int corank = 3 + l_minus - n;
    if (div == 1) {
        if (p != 3)
            return corank > 2 || (corank == 2 && eps == arith::legendre(-3, p));
        return corank > 3 || (corank == 3 && eps == -1);
    }
    if (p != 3)
        return false;
    if (n == 1)
        return eps == -1;
    if (n > 1)
        return corank > 1 || (corank == 1 && eps == 1);
    return false;
}

/// Whether the (unique) lattice in the genus splits off a hyperbolic plane U.
inline bool contains_U(const GenusSymbol& g)
{
    if (g.parity != Parity::even || !discforms::genus_exists(g))
        throw argument_error("contains_U: genus " + g.to_string() + " is not a nonempty even genus");
    if (g.sig_plus < 1 || g.sig_minus < 1 || g.n > g.rank() - 2)
        return false;
    return discforms::genus_exists(GenusSymbol{Parity::even, g.sig_plus - 1, g.sig_minus - 1, g.p, g.eps, g.n});
}

} // namespace embeddings
} // namespace isoclass
