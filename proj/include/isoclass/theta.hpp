#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "isoclass/arith.hpp"
#include "isoclass/errors.hpp"
#include "isoclass/latgeom.hpp"

namespace isoclass {

/// Truncated q-series with exponents counted in 1/24 units.
///
/// Coefficients are exact for exponents below `precision()`; absent entries
/// below it are zero.
class QSeries {
public:
    static constexpr std::int64_t unit = 24;

    QSeries() = default;
    explicit QSeries(std::int64_t precision) : precision_(precision)
    {
        if (precision < 0)
            throw argument_error("QSeries: precision must be nonnegative");
    }

    std::int64_t precision() const { return precision_; }
    const std::map<std::int64_t, std::int64_t>& terms() const { return terms_; }

    std::int64_t coefficient(std::int64_t exponent) const
    {
        if (exponent < 0)
            return 0;
        if (exponent >= precision_)
            throw argument_error("QSeries: exponent " + std::to_string(exponent) + " beyond precision "
                                 + std::to_string(precision_));
        auto it = terms_.find(exponent);
        return it == terms_.end() ? 0 : it->second;
    }

    /// Coefficient of q^k for whole k.
    std::int64_t at_q(std::int64_t k) const { return coefficient(k * unit); }

    void add_term(std::int64_t exponent, std::int64_t value)
    {
        if (exponent < 0)
            throw argument_error("QSeries: negative exponent");
        if (exponent >= precision_ || value == 0)
            return;
        auto& c = terms_[exponent];
        if (__builtin_add_overflow(c, value, &c))
            throw std::overflow_error("QSeries: coefficient overflow");
        if (c == 0)
            terms_.erase(exponent);
    }

    /// Smallest exponent with nonzero coefficient, or precision() if none.
    std::int64_t valuation() const { return terms_.empty() ? precision_ : terms_.begin()->first; }

    QSeries truncated(std::int64_t precision) const
    {
        QSeries out(std::min(precision, precision_));
        for (const auto& [e, c] : terms_)
            out.add_term(e, c);
        return out;
    }

    QSeries operator+(const QSeries& other) const
    {
        QSeries out(std::min(precision_, other.precision_));
        for (const auto& [e, c] : terms_)
            out.add_term(e, c);
        for (const auto& [e, c] : other.terms_)
            out.add_term(e, c);
        return out;
    }

    QSeries operator*(std::int64_t scalar) const
    {
        QSeries out(precision_);
        for (const auto& [e, c] : terms_) {
            std::int64_t v;
            if (__builtin_mul_overflow(c, scalar, &v))
                throw std::overflow_error("QSeries: coefficient overflow");
            out.add_term(e, v);
        }
        return out;
    }

    QSeries operator-(const QSeries& other) const { return *this + other * -1; }

    /// Product by direct convolution; exact below min(P_a + v_b, P_b + v_a).
    QSeries operator*(const QSeries& other) const
    {
        const std::int64_t prec = std::min(precision_ + other.valuation(), other.precision_ + valuation());
        QSeries out(prec);
        for (const auto& [e1, c1] : terms_) {
            if (e1 >= prec)
                break;
            for (const auto& [e2, c2] : other.terms_) {
                if (e1 + e2 >= prec)
                    break;
                std::int64_t v;
                if (__builtin_mul_overflow(c1, c2, &v))
                    throw std::overflow_error("QSeries: coefficient overflow");
                out.add_term(e1 + e2, v);
            }
        }
        return out;
    }

    bool operator==(const QSeries&) const = default;

private:
    std::int64_t precision_ = 0;
    std::map<std::int64_t, std::int64_t> terms_;
};

enum class DefiniteLatticeId { A2neg, K7, F23a, F23b };

struct OrbitSeries {
    DefiniteLatticeId lattice = DefiniteLatticeId::A2neg;
    GroupKind group = GroupKind::O;
    std::vector<std::int64_t> counts;   // counts[k - 1] = b(k), k = 1..kmax

    std::int64_t at(std::int64_t k) const { return counts.at(static_cast<std::size_t>(k - 1)); }
};

namespace theta {

inline std::string to_string(DefiniteLatticeId id)
{
    switch (id) {
    case DefiniteLatticeId::A2neg: return "A2neg";
    case DefiniteLatticeId::K7: return "K7";
    case DefiniteLatticeId::F23a: return "F23a";
    case DefiniteLatticeId::F23b: return "F23b";
    }
    return "A2neg";
}

inline DefiniteLatticeId parse_lattice_id(const std::string& name)
{
    for (auto id : {DefiniteLatticeId::A2neg, DefiniteLatticeId::K7, DefiniteLatticeId::F23a, DefiniteLatticeId::F23b})
        if (to_string(id) == name)
            return id;
    throw argument_error("unknown lattice id '" + name + "' (expected A2neg, K7, F23a, F23b)");
}

/// The positive definite Gram matrices of the rank-2 invariant lattices.
inline GramLattice gram_lattice(DefiniteLatticeId id)
{
    switch (id) {
    case DefiniteLatticeId::A2neg: return GramLattice({{2, 1}, {1, 2}});
    case DefiniteLatticeId::K7: return GramLattice({{2, 1}, {1, 4}});
    case DefiniteLatticeId::F23a: return GramLattice({{2, 1}, {1, 12}});
    case DefiniteLatticeId::F23b: return GramLattice({{4, 1}, {1, 6}});
    }
    throw argument_error("gram_lattice: unknown id");
}

/// theta_3 = sum_m q^{m^2}, exponents < prec (in 24ths).
inline QSeries theta3(std::int64_t prec)
{
    if (prec <= 0)
        throw argument_error("theta3: precision must be positive");
    QSeries s(prec);
    for (std::int64_t m = 0; QSeries::unit * m * m < prec; ++m)
        s.add_term(QSeries::unit * m * m, m == 0 ? 1 : 2);
    return s;
}

/// theta_2 = sum_m q^{(m+1/2)^2}; the terms m and -m-1 coincide.
inline QSeries theta2(std::int64_t prec)
{
    if (prec <= 0)
        throw argument_error("theta2: precision must be positive");
    QSeries s(prec);
    for (std::int64_t m = 0; QSeries::unit * (m * m + m) + 6 < prec; ++m)
        s.add_term(QSeries::unit * (m * m + m) + 6, 2);
    return s;
}

/// eta = q^{1/24} prod_{n>=1} (1 - q^n), expanded factor by factor.
inline QSeries eta(std::int64_t prec)
{
    if (prec <= 0)
        throw argument_error("eta: precision must be positive");
    QSeries s(prec);
    if (prec <= 1)
        return s;
    const std::int64_t degree = (prec - 2) / QSeries::unit;   // largest d with 24 d + 1 < prec
    std::vector<std::int64_t> poly(static_cast<std::size_t>(degree + 1), 0);
    poly[0] = 1;
    for (std::int64_t n = 1; n <= degree; ++n)
        for (std::int64_t d = degree; d >= n; --d)
            poly[d] -= poly[d - n];
    for (std::int64_t d = 0; d <= degree; ++d)
        s.add_term(QSeries::unit * d + 1, poly[d]);
    return s;
}

/// Substitution q -> q^e.
inline QSeries rescale(const QSeries& s, std::int64_t e)
{
    if (e <= 0)
        throw argument_error("rescale: factor must be positive");
    QSeries out(s.precision() * e);
    for (const auto& [exp, c] : s.terms())
        out.add_term(exp * e, c);
    return out;
}

namespace detail {

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

// theta_3(z) theta_3(e z) + theta_2(z) theta_2(e z), exact below prec.
inline QSeries binary_theta(std::int64_t e, std::int64_t prec)
{
    const std::int64_t inner = ceil_div(prec, e);
    const QSeries even_part = theta3(prec) * rescale(theta3(inner), e);
    const QSeries odd_part = theta2(prec) * rescale(theta2(inner), e);
    return (even_part + odd_part).truncated(prec);
}

} // namespace detail

/// Theta series of a rank-2 invariant lattice, coefficients of q^0..q^prec.
inline QSeries theta_series(DefiniteLatticeId id, std::int64_t prec)
{
    if (prec < 1)
        throw argument_error("theta_series: precision must be at least 1");
    const std::int64_t p24 = (prec + 1) * QSeries::unit;
    QSeries s;
    switch (id) {
    case DefiniteLatticeId::A2neg: s = detail::binary_theta(3, p24); break;
    case DefiniteLatticeId::K7: s = detail::binary_theta(7, p24); break;
    case DefiniteLatticeId::F23a: s = detail::binary_theta(23, p24); break;
    case DefiniteLatticeId::F23b: {
        const QSeries cusp = eta(p24) * rescale(eta(detail::ceil_div(p24, 23)), 23);
        s = (detail::binary_theta(23, p24) - cusp * 2).truncated(p24);
        break;
    }
    }
    for (const auto& [e, c] : s.terms())
        if (e % QSeries::unit != 0)
            throw std::logic_error("theta_series: fractional exponent survived");
    return s;
}

/// a(0..prec) as a plain vector.
inline std::vector<std::int64_t> whole_coefficients(const QSeries& s, std::int64_t prec)
{
    std::vector<std::int64_t> a(static_cast<std::size_t>(prec + 1));
    for (std::int64_t k = 0; k <= prec; ++k)
        a[static_cast<std::size_t>(k)] = s.at_q(k);
    return a;
}

/// r(n) = sum_{d^2 | n} mu(d) a(n / d^2) for n >= 1; r(0) = 0.
inline std::vector<std::int64_t> primitive_counts(const std::vector<std::int64_t>& a)
{
    if (a.empty() || a[0] != 1)
        throw argument_error("primitive_counts: a(0) = 1 must be supplied");
    std::vector<std::int64_t> r(a.size(), 0);
    for (std::size_t n = 1; n < a.size(); ++n) {
        std::int64_t total = 0;
        for (std::size_t d = 1; d * d <= n; ++d)
            if (n % (d * d) == 0)
                total += arith::moebius(static_cast<std::int64_t>(d)) * a[n / (d * d)];
        r[n] = total;
    }
    return r;
}

/// b(k), k = 1..kmax, from explicit orbit enumeration; checked against
/// r(k) / |G| for k outside S_G.
inline OrbitSeries orbit_series(DefiniteLatticeId id, GroupKind group_kind, std::int64_t kmax)
{
    if (kmax < 1)
        throw argument_error("orbit_series: kmax must be at least 1");
    const GramLattice lattice = gram_lattice(id);
    const auto group = latgeom::group_of(lattice, group_kind);
    const auto exceptional = latgeom::fixed_norm_set(lattice, group, kmax);
    const auto r = primitive_counts(whole_coefficients(theta_series(id, kmax), kmax));

    OrbitSeries out{id, group_kind, {}};
    out.counts.reserve(static_cast<std::size_t>(kmax));
    const auto order = static_cast<std::int64_t>(group.size());
    for (std::int64_t k = 1; k <= kmax; ++k) {
        const auto orbits = latgeom::orbit_decomposition(lattice, group, 2 * k, true);
        const auto b = static_cast<std::int64_t>(orbits.size());
        if (!exceptional.contains(k) && b * order != r[static_cast<std::size_t>(k)])
            throw std::logic_error("orbit_series: orbit count disagrees with r(k)/|G| at k = " + std::to_string(k));
        out.counts.push_back(b);
    }
    return out;
}

} // namespace theta
} // namespace isoclass
