#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "isoclass/arith.hpp"
#include "isoclass/errors.hpp"

namespace isoclass {

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;   // row-major

/// Integral lattice given by a symmetric nondegenerate Gram matrix.
class GramLattice {
public:
    explicit GramLattice(IntMatrix gram) : gram_(std::move(gram))
    {
        const std::size_t n = gram_.size();
        if (n == 0)
            throw argument_error("GramLattice: empty Gram matrix");
        for (const auto& row : gram_)
            if (row.size() != n)
                throw argument_error("GramLattice: Gram matrix must be square");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (gram_[i][j] != gram_[j][i])
                    throw argument_error("GramLattice: Gram matrix must be symmetric");
        if (determinant() == 0)
            throw argument_error("GramLattice: Gram matrix is degenerate");
    }

    std::size_t rank() const { return gram_.size(); }
    const IntMatrix& gram() const { return gram_; }

    Integer determinant() const
    {
        std::vector<std::vector<Integer>> m(rank(), std::vector<Integer>(rank()));
        for (std::size_t i = 0; i < rank(); ++i)
            for (std::size_t j = 0; j < rank(); ++j)
                m[i][j] = static_cast<long>(gram_[i][j]);
        return arith::determinant(std::move(m));
    }

    bool is_even() const
    {
        for (std::size_t i = 0; i < rank(); ++i)
            if (gram_[i][i] % 2 != 0)
                return false;
        return true;
    }

    /// Sylvester's criterion on leading principal minors.
    bool is_positive_definite() const
    {
        for (std::size_t k = 1; k <= rank(); ++k) {
            std::vector<std::vector<Integer>> m(k, std::vector<Integer>(k));
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    m[i][j] = static_cast<long>(gram_[i][j]);
            if (arith::determinant(std::move(m)) <= 0)
                return false;
        }
        return true;
    }

    IntVector apply(const IntVector& x) const
    {
        check_dim(x);
        IntVector y(rank(), 0);
        for (std::size_t i = 0; i < rank(); ++i)
            for (std::size_t j = 0; j < rank(); ++j)
                y[i] += gram_[i][j] * x[j];
        return y;
    }

    std::int64_t inner(const IntVector& x, const IntVector& y) const
    {
        const IntVector gy = apply(y);
        __int128 s = 0;
        for (std::size_t i = 0; i < rank(); ++i)
            s += static_cast<__int128>(x[i]) * gy[i];
        return static_cast<std::int64_t>(s);
    }

    std::int64_t norm(const IntVector& x) const { return inner(x, x); }

private:
    void check_dim(const IntVector& x) const
    {
        if (x.size() != rank())
            throw argument_error("GramLattice: vector has wrong dimension");
    }

    IntMatrix gram_;
};

/// Orbit of a vector under a finite group of isometries.
struct VectorOrbit {
    IntVector representative;   // lexicographically minimal member
    std::int64_t size = 0;
    std::int64_t norm = 0;
    std::int64_t divisibility = 0;

    bool operator==(const VectorOrbit&) const = default;
};

enum class GroupKind { O, SO };

inline std::string to_string(GroupKind g) { return g == GroupKind::O ? "O" : "SO"; }

namespace latgeom {

inline std::int64_t content(const IntVector& x)
{
    std::int64_t g = 0;
    for (auto c : x)
        g = std::gcd(g, c);
    return g;
}

inline bool is_primitive(const IntVector& x) { return content(x) == 1; }

/// Positive generator of b(x, L), i.e. the gcd of the entries of Gram * x.
inline std::int64_t vector_divisibility(const GramLattice& lattice, const IntVector& x)
{
    if (std::all_of(x.begin(), x.end(), [](auto c) { return c == 0; }))
        throw argument_error("vector_divisibility: x must be nonzero");
    return content(lattice.apply(x));
}

namespace detail {

// Q(x) = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2, all exact.
struct CompletedSquares {
    std::vector<Rational> d;
    std::vector<std::vector<Rational>> mu;
};

inline CompletedSquares complete_squares(const GramLattice& lattice)
{
    const std::size_t n = lattice.rank();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = static_cast<long>(lattice.gram()[i][j]);
    CompletedSquares cs{std::vector<Rational>(n), std::vector<std::vector<Rational>>(n, std::vector<Rational>(n))};
    for (std::size_t i = 0; i < n; ++i) {
        cs.d[i] = a[i][i];
        for (std::size_t j = i + 1; j < n; ++j)
            cs.mu[i][j] = a[i][j] / cs.d[i];
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t l = i + 1; l < n; ++l)
                a[j][l] -= cs.d[i] * cs.mu[i][j] * cs.mu[i][l];
    }
    return cs;
}

class Enumerator {
public:
    Enumerator(const GramLattice& lattice, std::int64_t bound, bool exact)
        : lattice_(lattice), squares_(complete_squares(lattice)), bound_(bound), exact_(exact), x_(lattice.rank(), 0)
    {
    }

    std::vector<IntVector> run()
    {
        recurse(static_cast<int>(lattice_.rank()) - 1, Rational(static_cast<long>(bound_)));
        std::sort(out_.begin(), out_.end());
        return out_;
    }

private:
    void recurse(int i, const Rational& budget)
    {
        const std::size_t n = lattice_.rank();
        Rational center = 0;
        for (std::size_t j = static_cast<std::size_t>(i) + 1; j < n; ++j)
            center += squares_.mu[i][j] * static_cast<long>(x_[j]);
        const double c = center.get_d();
        const double t = std::sqrt(std::max(0.0, Rational(budget / squares_.d[i]).get_d()));
        const auto lo = static_cast<std::int64_t>(std::floor(-c - t)) - 1;
        const auto hi = static_cast<std::int64_t>(std::ceil(-c + t)) + 1;
        for (std::int64_t v = lo; v <= hi; ++v) {
            x_[i] = v;
            if (i == 0) {
                const std::int64_t q = lattice_.norm(x_);
                if (exact_ ? q == bound_ : q <= bound_)
                    out_.push_back(x_);
                continue;
            }
            const Rational shifted = Rational(static_cast<long>(v)) + center;
            const Rational rest = budget - squares_.d[i] * shifted * shifted;
            if (rest >= 0)
                recurse(i - 1, rest);
        }
        x_[i] = 0;
    }

    const GramLattice& lattice_;
    CompletedSquares squares_;
    std::int64_t bound_;
    bool exact_;
    IntVector x_;
    std::vector<IntVector> out_;
};

inline void require_definite(const GramLattice& lattice, const char* what)
{
    if (!lattice.is_positive_definite())
        throw unsupported_error(std::string(what) + ": lattice must be positive definite");
}

} // namespace detail

/// All x with x^T G x == norm, sorted lexicographically.
inline std::vector<IntVector> enumerate_vectors(const GramLattice& lattice, std::int64_t norm)
{
    detail::require_definite(lattice, "enumerate_vectors");
    if (norm <= 0)
        throw argument_error("enumerate_vectors: norm must be positive");
    return detail::Enumerator(lattice, norm, true).run();
}

/// All x with x^T G x <= bound (including 0), sorted lexicographically.
inline std::vector<IntVector> enumerate_ball(const GramLattice& lattice, std::int64_t bound)
{
    detail::require_definite(lattice, "enumerate_ball");
    if (bound < 0)
        throw argument_error("enumerate_ball: bound must be nonnegative");
    return detail::Enumerator(lattice, bound, false).run();
}

// Matrices act on column vectors; column j of T is the image of e_j.
inline IntVector act(const IntMatrix& t, const IntVector& x)
{
    IntVector y(t.size(), 0);
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            y[i] += t[i][j] * x[j];
    return y;
}

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b)
{
    const std::size_t n = a.size();
    IntMatrix c(n, IntVector(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j)
                c[i][j] += a[i][k] * b[k][j];
    return c;
}

inline IntMatrix identity(std::size_t n)
{
    IntMatrix m(n, IntVector(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

inline std::int64_t determinant_small(const IntMatrix& t)
{
    if (t.size() == 1)
        return t[0][0];
    if (t.size() == 2)
        return t[0][0] * t[1][1] - t[0][1] * t[1][0];
    throw unsupported_error("determinant_small: rank > 2");
}

inline bool preserves_form(const GramLattice& lattice, const IntMatrix& t)
{
    const std::size_t n = lattice.rank();
    for (std::size_t i = 0; i < n; ++i) {
        IntVector ci(n), cj(n);
        for (std::size_t k = 0; k < n; ++k)
            ci[k] = t[k][i];
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k)
                cj[k] = t[k][j];
            if (lattice.inner(ci, cj) != lattice.gram()[i][j])
                return false;
        }
    }
    return true;
}

/// O(L) for L positive definite of rank <= 2, sorted.
inline std::vector<IntMatrix> isometry_group(const GramLattice& lattice)
{
    if (lattice.rank() > 2)
        throw unsupported_error("isometry_group: only rank <= 2 is supported");
    detail::require_definite(lattice, "isometry_group");
    const auto& g = lattice.gram();
    std::vector<IntMatrix> group;
    if (lattice.rank() == 1) {
        group = {IntMatrix{{-1}}, IntMatrix{{1}}};
        return group;
    }
    const auto first = enumerate_vectors(lattice, g[0][0]);
    const auto second = enumerate_vectors(lattice, g[1][1]);
    for (const auto& u : first) {
        for (const auto& v : second) {
            if (lattice.inner(u, v) != g[0][1])
                continue;
            IntMatrix t{{u[0], v[0]}, {u[1], v[1]}};
            if (determinant_small(t) != 0)
                group.push_back(std::move(t));
        }
    }
    std::sort(group.begin(), group.end());
    return group;
}

inline std::vector<IntMatrix> special_isometry_group(const GramLattice& lattice)
{
    auto group = isometry_group(lattice);
    std::erase_if(group, [](const IntMatrix& t) { return determinant_small(t) != 1; });
    return group;
}

inline std::vector<IntMatrix> group_of(const GramLattice& lattice, GroupKind kind)
{
    return kind == GroupKind::O ? isometry_group(lattice) : special_isometry_group(lattice);
}

/// Partition of the (primitive) vectors of the given norm into orbits of `group`.
/// Orbits are listed by increasing representative.
inline std::vector<VectorOrbit> orbit_decomposition(const GramLattice& lattice, const std::vector<IntMatrix>& group,
                                                    std::int64_t norm, bool primitive_only)
{
    if (group.empty())
        throw argument_error("orbit_decomposition: group must contain the identity");
    auto vectors = enumerate_vectors(lattice, norm);
    if (primitive_only)
        std::erase_if(vectors, [](const IntVector& x) { return !is_primitive(x); });
    std::set<IntVector> remaining(vectors.begin(), vectors.end());
    std::vector<VectorOrbit> orbits;
    while (!remaining.empty()) {
        const IntVector rep = *remaining.begin();
        std::set<IntVector> orbit;
        for (const auto& t : group)
            orbit.insert(act(t, rep));
        for (const auto& y : orbit)
            remaining.erase(y);
        orbits.push_back({*orbit.begin(), static_cast<std::int64_t>(orbit.size()), norm,
                          vector_divisibility(lattice, rep)});
    }
    return orbits;
}

/// S_G = { v^2/2 : Zv = ker(1 - g), g in G, g != 1 }, restricted to values <= bound.
inline std::set<std::int64_t> fixed_norm_set(const GramLattice& lattice, const std::vector<IntMatrix>& group,
                                            std::int64_t bound)
{
    if (lattice.rank() != 2)
        throw unsupported_error("fixed_norm_set: only rank 2 is supported");
    detail::require_definite(lattice, "fixed_norm_set");
    std::set<std::int64_t> out;
    const IntMatrix one = identity(2);
    for (const auto& g : group) {
        if (g == one)
            continue;
        const IntMatrix m{{1 - g[0][0], -g[0][1]}, {-g[1][0], 1 - g[1][1]}};
        if (determinant_small(m) != 0)
            continue;
        // kernel of a rank-one 2x2 matrix: orthogonal to a nonzero row
        const IntVector& row = (m[0][0] != 0 || m[0][1] != 0) ? m[0] : m[1];
        IntVector v{row[1], -row[0]};
        const std::int64_t c = content(v);
        v[0] /= c;
        v[1] /= c;
        const std::int64_t k = lattice.norm(v) / 2;
        if (k <= bound)
            out.insert(k);
    }
    return out;
}

} // namespace latgeom
} // namespace isoclass
