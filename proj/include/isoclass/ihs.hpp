#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isoclass/arith.hpp"
#include "isoclass/classnumber.hpp"
#include "isoclass/discforms.hpp"
#include "isoclass/embeddings.hpp"
#include "isoclass/errors.hpp"
#include "isoclass/latgeom.hpp"
#include "isoclass/theta.hpp"
#include "isoclass/unimodular.hpp"

namespace isoclass {

enum class DeformationKind { K3, K3n, Kumn, OG6, OG10 };

/// Orthogonal complement V of H^2 in the unimodular lattice M.
enum class ExcessLattice { none, rank1_minus, rank1_plus, two_times_two, a2 };

struct DeformationType {
    DeformationKind kind = DeformationKind::K3;
    int m_plus = 3;   // signature of M
    int m_minus = 19;
    ExcessLattice excess = ExcessLattice::none;
    std::optional<GroupKind> group;

    std::string ambient() const { return "II_(" + std::to_string(m_plus) + "," + std::to_string(m_minus) + ")"; }

    /// Positive index of the invariant lattice M^g when M_g has signature (2, *).
    int invariant_sig_plus() const { return m_plus - 2; }
};

struct AmbiguityVerdict {
    bool lattice_orbit_ambiguous = false;
    Integer steinitz_factor = 1;
};

/// Orbit column of a classification row: absent (no manifold index given),
/// a count, or unknown.
struct OrbitInfo {
    enum class Kind { none, count, unknown };
    Kind kind = Kind::none;
    std::int64_t count = 0;
    std::optional<OrbitReport> report;   // indefinite rows only
};

struct ClassificationRow {
    DeformationKind type = DeformationKind::K3;
    std::int64_t p = 3;
    int r = 0;
    int a = 0;
    std::optional<std::int64_t> div;
    bool exists = false;
    OrbitInfo orbits;
    AmbiguityVerdict verdict;
    GenusSymbol invariant_genus;
    int m = 0;   // s+ + s- = (a + 2m)(p - 1)
};

namespace ihs {

inline std::string to_string(DeformationKind k)
{
    switch (k) {
    case DeformationKind::K3: return "K3";
    case DeformationKind::K3n: return "K3n";
    case DeformationKind::Kumn: return "Kumn";
    case DeformationKind::OG6: return "OG6";
    case DeformationKind::OG10: return "OG10";
    }
    return "K3";
}

inline DeformationKind parse_kind(const std::string& name)
{
    for (auto k : {DeformationKind::K3, DeformationKind::K3n, DeformationKind::Kumn, DeformationKind::OG6,
                   DeformationKind::OG10})
        if (to_string(k) == name)
            return k;
    throw argument_error("unknown deformation type '" + name + "' (expected K3, K3n, Kumn, OG6, OG10)");
}

inline const std::vector<DeformationType>& registry()
{
    static const std::vector<DeformationType> rows{
        {DeformationKind::K3, 3, 19, ExcessLattice::none, std::nullopt},
        {DeformationKind::K3n, 4, 20, ExcessLattice::rank1_minus, GroupKind::O},
        {DeformationKind::Kumn, 4, 4, ExcessLattice::rank1_plus, GroupKind::SO},
        {DeformationKind::OG6, 5, 5, ExcessLattice::two_times_two, GroupKind::O},
        {DeformationKind::OG10, 5, 21, ExcessLattice::a2, GroupKind::O},
    };
    return rows;
}

inline const DeformationType& lookup(DeformationKind kind)
{
    for (const auto& t : registry())
        if (t.kind == kind)
            return t;
    throw std::logic_error("ihs::lookup: registry incomplete");
}

/// Square of the generator of V for manifold index n.
inline std::int64_t excess_square(DeformationKind kind, std::int64_t n)
{
    if (n < 2)
        throw argument_error("manifold index n must be at least 2, got " + std::to_string(n));
    if (kind == DeformationKind::K3n)
        return 2 * n - 2;
    if (kind == DeformationKind::Kumn)
        return 2 * n + 2;
    throw argument_error("manifold index only applies to K3n and Kumn");
}

/// Invariants of an isometry of M with invariant lattice of rank r,
/// discriminant p^a and coinvariant signature (2, *).
inline IsometryInvariants invariants_for(const DeformationType& type, std::int64_t p, int r, int a)
{
    const int s_plus = 2;
    const int s_minus = type.m_plus + type.m_minus - s_plus - r;
    return IsometryInvariants{p, Parity::even, type.m_plus, type.m_minus, s_plus, s_minus, a};
}

/// Genus of M^g, provided the sign is forced.
inline std::optional<GenusSymbol> invariant_genus(const DeformationType& type, std::int64_t p, int r, int a)
{
    const int l_plus = type.invariant_sig_plus();
    const int l_minus = r - l_plus;
    if (l_minus < 0)
        return std::nullopt;
    const auto eps = discforms::unique_eps(Parity::even, l_plus, l_minus, p, a);
    if (!eps)
        return std::nullopt;
    return GenusSymbol{Parity::even, l_plus, l_minus, p, *eps, a};
}

inline bool triple_exists(const DeformationType& type, std::int64_t p, int r, int a)
{
    if (type.kind == DeformationKind::K3)
        return unimodular::k3_exists(p, r, a);
    return r >= type.invariant_sig_plus() && unimodular::isometry_exists(invariants_for(type, p, r, a))
           && invariant_genus(type, p, r, a).has_value();
}

/// All (r, a) with an isometry of M of order p, invariant rank r, discriminant p^a.
inline std::vector<std::pair<int, int>> triples(const DeformationType& type, std::int64_t p)
{
    std::vector<std::pair<int, int>> out;
    const int rank = type.m_plus + type.m_minus;
    for (int r = 1; r <= rank; ++r)
        for (int a = 0; a <= r; ++a)
            if (triple_exists(type, p, r, a))
                out.emplace_back(r, a);
    return out;
}

/// Representatives of the classes in a positive definite rank-2 invariant genus.
inline std::vector<DefiniteLatticeId> definite_classes(const GenusSymbol& g)
{
    if (g.sig_plus == 2 && g.sig_minus == 0 && g.n == 1) {
        if (g.p == 3)
            return {DefiniteLatticeId::A2neg};
        if (g.p == 7)
            return {DefiniteLatticeId::K7};
        if (g.p == 23)
            return {DefiniteLatticeId::F23a, DefiniteLatticeId::F23b};
    }
    throw unsupported_error("definite invariant genus " + g.to_string()
                            + " is not tabulated (supported: II_(2,0)3^-1, II_(2,0)7^+1, II_(2,0)23^+1)");
}

namespace detail {

// Orbit counts by divisibility, summed over the classes of a definite genus.
class DefiniteOrbitCounter {
public:
    DefiniteOrbitCounter(const GenusSymbol& genus, GroupKind group)
    {
        for (auto id : definite_classes(genus)) {
            GramLattice lattice = theta::gram_lattice(id);
            auto g = latgeom::group_of(lattice, group);
            classes_.push_back({std::move(lattice), std::move(g)});
        }
    }

    std::map<std::int64_t, std::int64_t> by_divisibility(std::int64_t norm) const
    {
        std::map<std::int64_t, std::int64_t> out;
        for (const auto& [lattice, group] : classes_)
            for (const auto& orbit : latgeom::orbit_decomposition(lattice, group, norm, true))
                ++out[orbit.divisibility];
        return out;
    }

private:
    std::vector<std::pair<GramLattice, std::vector<IntMatrix>>> classes_;
};

inline ClassificationRow base_row(const DeformationType& type, std::int64_t p, int r, int a)
{
    ClassificationRow row;
    row.type = type.kind;
    row.p = p;
    row.r = r;
    row.a = a;
    row.exists = true;
    row.verdict.steinitz_factor = classnumber::relative_class_number(p);
    if (type.kind == DeformationKind::K3) {
        const auto eps = discforms::unique_eps(Parity::even, 1, r - 1, p, a);
        row.invariant_genus = GenusSymbol{Parity::even, 1, r - 1, p, eps.value_or(1), a};
        row.m = *unimodular::k3_invariants(p, r, a).m();
    } else {
        row.invariant_genus = *invariant_genus(type, p, r, a);
        row.m = *invariants_for(type, p, r, a).m();
    }
    return row;
}

inline void require_prime(std::int64_t p)
{
    if (!arith::is_odd_prime(p))
        throw argument_error("p must be an odd prime, got " + std::to_string(p));
}

} // namespace detail

/// Rows (r, a, div) realized by non-symplectic order-p actions of the given type.
inline std::vector<ClassificationRow> classify(DeformationKind kind, std::int64_t p,
                                               std::optional<std::int64_t> n = std::nullopt)
{
    detail::require_prime(p);
    if (kind == DeformationKind::OG6)
        throw unsupported_error("OG6 classification is not supported");
    if (n && kind != DeformationKind::K3n && kind != DeformationKind::Kumn)
        throw argument_error("manifold index only applies to K3n and Kumn");
    const DeformationType& type = lookup(kind);
    std::vector<ClassificationRow> rows;

    if (kind == DeformationKind::K3 || (!n && kind != DeformationKind::OG10)) {
        for (auto [r, a] : triples(type, p))
            rows.push_back(detail::base_row(type, p, r, a));
        return rows;
    }

    if (kind == DeformationKind::OG10) {
        for (auto [r, a] : triples(type, p)) {
            const ClassificationRow base = detail::base_row(type, p, r, a);
            const GenusSymbol& g = base.invariant_genus;
            if (g.sig_minus <= 0 || g.sig_minus % 2 == 0)
                continue;
            for (std::int64_t div : {1, 3}) {
                if (!embeddings::a2_embeds(g.sig_minus, p, g.eps, g.n, div))
                    continue;
                ClassificationRow row = base;
                row.div = div;
                row.orbits.kind = OrbitInfo::Kind::count;
                row.orbits.count = 1;
                rows.push_back(row);
            }
        }
        return rows;
    }

    const std::int64_t k = excess_square(kind, *n);
    for (auto [r, a] : triples(type, p)) {
        const ClassificationRow base = detail::base_row(type, p, r, a);
        const GenusSymbol& g = base.invariant_genus;
        std::optional<std::map<std::int64_t, std::int64_t>> definite;
        if (g.is_definite())
            definite = detail::DefiniteOrbitCounter(g, *type.group).by_divisibility(k);
        for (std::int64_t div : {std::int64_t{1}, p}) {
            ClassificationRow row = base;
            row.div = div;
            if (definite) {
                const auto it = definite->find(div);
                const std::int64_t count = it == definite->end() ? 0 : it->second;
                if (count == 0)
                    continue;
                row.orbits.kind = OrbitInfo::Kind::count;
                row.orbits.count = count;
            } else {
                const OrbitReport report = embeddings::vector_orbits({g, k, div});
                if (report.exists == Existence::no)
                    continue;
                row.orbits.report = report;
                if (report.orbit_count) {
                    row.orbits.kind = OrbitInfo::Kind::count;
                    row.orbits.count = *report.orbit_count;
                } else {
                    row.orbits.kind = OrbitInfo::Kind::unknown;
                }
            }
            row.verdict.lattice_orbit_ambiguous =
                row.orbits.kind == OrbitInfo::Kind::count && row.orbits.count >= 2;
            rows.push_back(row);
        }
    }
    return rows;
}

inline std::vector<ClassificationRow> og10_rows(std::int64_t p) { return classify(DeformationKind::OG10, p); }

/// Manifold indices 2 <= n <= n_max for which the action with invariants
/// (p, r, a) and div(V) = div is not determined by these invariants.
/// Without div, n is flagged if any divisibility group has two or more orbits.
inline std::vector<std::int64_t> ambiguous_n(DeformationKind kind, std::int64_t p, int r, int a,
                                             std::optional<std::int64_t> div, std::int64_t n_max)
{
    detail::require_prime(p);
    if (kind != DeformationKind::K3n && kind != DeformationKind::Kumn)
        throw argument_error("ambiguous_n: type must be K3n or Kumn");
    const DeformationType& type = lookup(kind);
    if (!triple_exists(type, p, r, a))
        throw argument_error("ambiguous_n: (p, r, a) = (" + std::to_string(p) + ", " + std::to_string(r) + ", "
                             + std::to_string(a) + ") does not occur for " + to_string(kind));
    if (div && *div != 1 && *div != p)
        throw argument_error("ambiguous_n: divisibility must be 1 or p");
    const GenusSymbol g = *invariant_genus(type, p, r, a);
    if (!(r == 2 || r >= 4))
        throw unsupported_error("ambiguous_n: supported shapes are r = 2 (definite invariant lattice) and r >= 4");

    std::vector<std::int64_t> out;
    if (r == 2) {
        const detail::DefiniteOrbitCounter counter(g, *type.group);
        for (std::int64_t n = 2; n <= n_max; ++n) {
            const auto counts = counter.by_divisibility(excess_square(kind, n));
            bool flagged = false;
            for (const auto& [d, c] : counts)
                flagged = flagged || ((!div || d == *div) && c >= 2);
            if (flagged)
                out.push_back(n);
        }
        return out;
    }
    for (std::int64_t n = 2; n <= n_max; ++n) {
        const std::int64_t k = excess_square(kind, n);
        bool flagged = false;
        for (std::int64_t d : {std::int64_t{1}, p}) {
            if (div && d != *div)
                continue;
            const auto report = embeddings::vector_orbits({g, k, d});
            flagged = flagged || (report.orbit_count && *report.orbit_count >= 2);
        }
        if (flagged)
            out.push_back(n);
    }
    return out;
}

/// Whether the actions with invariants (p, r, a) are realized by induced automorphisms.
inline bool induced_realizable(DeformationKind kind, std::int64_t p, int r, int a)
{
    detail::require_prime(p);
    if (kind != DeformationKind::K3n && kind != DeformationKind::Kumn)
        throw argument_error("induced_realizable: type must be K3n or Kumn");
    const DeformationType& type = lookup(kind);
    if (!triple_exists(type, p, r, a))
        throw argument_error("induced_realizable: (p, r, a) = (" + std::to_string(p) + ", " + std::to_string(r)
                             + ", " + std::to_string(a) + ") does not occur for " + to_string(kind));
    return embeddings::contains_U(*invariant_genus(type, p, r, a));
}

} // namespace ihs
} // namespace isoclass
