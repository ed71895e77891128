#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <regex>
#include <string>

#include "isoclass/arith.hpp"
#include "isoclass/errors.hpp"

namespace isoclass {

enum class Parity { even, odd };

/// p-elementary genus symbol II_(l+,l-)p^{eps n} (even) or I_(l+,l-)p^{eps n} (odd).
///
/// Text form is whitespace-free, e.g. `II_(2,2)5^-1` or `II_(4,20)23^+1`.
struct GenusSymbol {
    Parity parity = Parity::even;
    int sig_plus = 0;
    int sig_minus = 0;
    std::int64_t p = 3;
    int eps = 1;
    int n = 0;

    int rank() const { return sig_plus + sig_minus; }
    bool is_definite() const { return sig_plus == 0 || sig_minus == 0; }

    bool operator==(const GenusSymbol&) const = default;

    std::string to_string() const
    {
        std::string s = parity == Parity::even ? "II_(" : "I_(";
        s += std::to_string(sig_plus) + "," + std::to_string(sig_minus) + ")";
        s += std::to_string(p) + "^" + (eps > 0 ? "+" : "-") + std::to_string(n);
        return s;
    }

    static GenusSymbol parse(const std::string& text)
    {
        static const std::regex grammar(R"(^(II|I)_\((\d{1,6}),(\d{1,6})\)(\d{1,9})\^([+-])(\d{1,6})$)");
        std::smatch m;
        if (!std::regex_match(text, m, grammar))
            throw argument_error("malformed genus symbol '" + text + "'");
        GenusSymbol g;
        g.parity = m[1] == "II" ? Parity::even : Parity::odd;
        g.sig_plus = std::stoi(m[2]);
        g.sig_minus = std::stoi(m[3]);
        g.p = std::stoll(m[4]);
        g.eps = m[5] == "+" ? 1 : -1;
        g.n = std::stoi(m[6]);
        if (!arith::is_odd_prime(g.p))
            throw argument_error("genus symbol '" + text + "': " + std::to_string(g.p) + " is not an odd prime");
        if (g.n > g.rank())
            throw argument_error("genus symbol '" + text + "': length exceeds rank");
        if (g.n == 0 && g.eps != 1)
            throw argument_error("genus symbol '" + text + "': empty p-part must carry sign +");
        return g;
    }
};

inline std::ostream& operator<<(std::ostream& os, const GenusSymbol& g) { return os << g.to_string(); }

namespace discforms {

namespace detail {

inline bool well_formed(const GenusSymbol& g)
{
    return g.sig_plus >= 0 && g.sig_minus >= 0 && g.n >= 0 && g.n <= g.rank()
           && (g.eps == 1 || g.eps == -1) && (g.n > 0 || g.eps == 1) && arith::is_odd_prime(g.p);
}

// l+ - l- == 2 eps - 2 - (p-1) n  (mod 8)
inline bool sign_congruence(int l_plus, int l_minus, std::int64_t p, int eps, int n)
{
    const std::int64_t rhs = 2 * eps - 2 - (p - 1) * n;
    return arith::mod(l_plus - l_minus - rhs, 8) == 0;
}

} // namespace detail

/// Nonemptiness of a p-elementary genus.
inline bool genus_exists(const GenusSymbol& g)
{
    if (!detail::well_formed(g))
        return false;
    const bool full_length = g.rank() == g.n;
    if (full_length && g.eps != arith::minus_one_power_symbol(g.p, g.sig_minus))
        return false;
    if (g.parity == Parity::odd)
        return g.rank() > 0;
    // At full length L = M(p) with M even unimodular; the congruence then
    // reduces to l+ = l- (mod 8).
    return detail::sign_congruence(g.sig_plus, g.sig_minus, g.p, g.eps, g.n);
}

enum class EpsChoice { plus, minus, none, both };

inline std::string to_string(EpsChoice e)
{
    switch (e) {
    case EpsChoice::plus: return "+1";
    case EpsChoice::minus: return "-1";
    case EpsChoice::none: return "none";
    case EpsChoice::both: return "both";
    }
    return "none";
}

/// The sign(s) eps for which the genus with the remaining data is nonempty.
inline EpsChoice forced_eps(Parity parity, int l_plus, int l_minus, std::int64_t p, int n)
{
    const GenusSymbol plus{parity, l_plus, l_minus, p, 1, n};
    const GenusSymbol minus{parity, l_plus, l_minus, p, -1, n};
    const bool ok_plus = genus_exists(plus);
    const bool ok_minus = n > 0 && genus_exists(minus);
    if (ok_plus && ok_minus)
        return EpsChoice::both;
    if (ok_plus)
        return EpsChoice::plus;
    if (ok_minus)
        return EpsChoice::minus;
    return EpsChoice::none;
}

/// Sign as an int when it is uniquely determined.
inline std::optional<int> unique_eps(Parity parity, int l_plus, int l_minus, std::int64_t p, int n)
{
    switch (forced_eps(parity, l_plus, l_minus, p, n)) {
    case EpsChoice::plus: return 1;
    case EpsChoice::minus: return -1;
    default: return std::nullopt;
    }
}

/// Finite quadratic form on an abelian group whose p-primary part is a sum of
/// u_{p,k} and w^eps_{p,k}, and whose prime-to-p part is cyclic.
///
/// The p-part is stored canonically: per scale k, the length and the product
/// of the signs (u_{p,k} counts as length 2 with sign (-1/p)). Over odd p these
/// two numbers classify the form at each scale.
class TorsionForm {
public:
    struct Block {
        int length = 0;
        int character = 1;
        bool operator==(const Block&) const = default;
    };

    TorsionForm() = default;
    explicit TorsionForm(std::int64_t p, std::int64_t coprime_order = 1) : p_(p), coprime_order_(coprime_order)
    {
        if (!arith::is_odd_prime(p))
            throw argument_error("TorsionForm: p must be an odd prime");
        if (coprime_order < 1 || coprime_order % p == 0)
            throw argument_error("TorsionForm: prime-to-p order must be positive and coprime to p");
    }

    static TorsionForm w(std::int64_t p, int scale, int eps)
    {
        TorsionForm f(p);
        f.add_block(scale, 1, eps);
        return f;
    }

    static TorsionForm u(std::int64_t p, int scale)
    {
        TorsionForm f(p);
        f.add_block(scale, 2, arith::legendre(-1, p));
        return f;
    }

    /// Discriminant form of a p-elementary lattice: length n at scale 1.
    static TorsionForm elementary(std::int64_t p, int n, int eps)
    {
        TorsionForm f(p);
        if (n > 0)
            f.add_block(1, n, eps);
        return f;
    }

    /// Discriminant form of the rank-one lattice <k>: Z/kZ with x -> x^2/k.
    static TorsionForm rank_one(std::int64_t k, std::int64_t p)
    {
        if (k <= 0)
            throw argument_error("TorsionForm::rank_one: k must be positive");
        const int a = arith::valuation(k, p);
        const std::int64_t k_prime = arith::prime_to_part(k, p);
        TorsionForm f(p, k_prime);
        if (a > 0)
            f.add_block(a, 1, arith::legendre(k_prime, p));
        return f;
    }

    std::int64_t prime() const { return p_; }
    std::int64_t coprime_order() const { return coprime_order_; }
    const std::map<int, Block>& blocks() const { return blocks_; }

    /// Number of generators of the p-primary part.
    int p_length() const
    {
        int l = 0;
        for (const auto& [scale, b] : blocks_)
            l += b.length;
        return l;
    }

    Integer order() const
    {
        Integer o = coprime_order_;
        for (const auto& [scale, b] : blocks_) {
            Integer pk;
            mpz_pow_ui(pk.get_mpz_t(), Integer(static_cast<long>(p_)).get_mpz_t(), static_cast<unsigned long>(scale * b.length));
            o *= pk;
        }
        return o;
    }

    /// Product of all signs of the p-part (chi_p of the associated p-adic lattice).
    int character() const
    {
        int c = 1;
        for (const auto& [scale, b] : blocks_)
            c *= b.character;
        return c;
    }

    TorsionForm operator+(const TorsionForm& other) const
    {
        check_same_prime(other);
        TorsionForm f = *this;
        f.coprime_order_ *= other.coprime_order_;
        for (const auto& [scale, b] : other.blocks_)
            f.add_block(scale, b.length, b.character);
        return f;
    }

    /// The form with negated values: each w^eps becomes w^{eps (-1/p)}.
    TorsionForm negated() const
    {
        TorsionForm f = *this;
        for (auto& [scale, b] : f.blocks_)
            b.character *= arith::minus_one_power_symbol(p_, b.length);
        return f;
    }

    /// r with *this = r + part, if such r exists.
    std::optional<TorsionForm> strip(const TorsionForm& part) const
    {
        check_same_prime(part);
        if (coprime_order_ % part.coprime_order_ != 0)
            return std::nullopt;
        TorsionForm f = *this;
        f.coprime_order_ /= part.coprime_order_;
        for (const auto& [scale, b] : part.blocks_) {
            auto it = f.blocks_.find(scale);
            if (it == f.blocks_.end() || it->second.length < b.length)
                return std::nullopt;
            it->second.length -= b.length;
            it->second.character *= b.character;
            if (it->second.length == 0) {
                if (it->second.character != 1)
                    return std::nullopt;
                f.blocks_.erase(it);
            }
        }
        return f;
    }

    bool operator==(const TorsionForm&) const = default;

private:
    void add_block(int scale, int length, int character)
    {
        if (scale < 1 || length < 0)
            throw argument_error("TorsionForm: invalid block");
        if (length == 0)
            return;
        auto& b = blocks_[scale];
        b.length += length;
        b.character *= character;
    }

    void check_same_prime(const TorsionForm& other) const
    {
        if (p_ != other.p_)
            throw argument_error("TorsionForm: forms over different primes");
    }

    std::int64_t p_ = 3;
    std::int64_t coprime_order_ = 1;
    std::map<int, Block> blocks_;
};

enum class ComplementCase { div1, divp_a1, divp_a2plus };

inline std::string to_string(ComplementCase c)
{
    switch (c) {
    case ComplementCase::div1: return "div1";
    case ComplementCase::divp_a1: return "divp_a1";
    case ComplementCase::divp_a2plus: return "divp_a2plus";
    }
    return "div1";
}

/// q_C = -q + r for C the orthogonal complement of a primitive <k> in L.
struct ComplementDecomposition {
    TorsionForm q;   // the <k>-part
    TorsionForm r;   // the L-part
    ComplementCase case_tag = ComplementCase::div1;
};

/// Splits the discriminant form of the complement of a primitive vector of
/// square k and divisibility div in a lattice with q_L of length n and sign eps.
/// Returns nullopt when the required summand cannot be split off.
inline std::optional<ComplementDecomposition>
complement_disc_form(std::int64_t k, std::int64_t p, int n, int eps, std::int64_t div)
{
    if (k <= 0 || k % 2 != 0)
        throw argument_error("complement_disc_form: k must be positive and even");
    if (!arith::is_odd_prime(p))
        throw argument_error("complement_disc_form: p must be an odd prime");
    if (n < 0 || (eps != 1 && eps != -1))
        throw argument_error("complement_disc_form: bad discriminant data");
    if (div != 1 && div != p)
        throw argument_error("complement_disc_form: divisibility must be 1 or p");

    const TorsionForm q_k = TorsionForm::rank_one(k, p);
    const TorsionForm q_l = TorsionForm::elementary(p, n, n == 0 ? 1 : eps);
    if (div == 1)
        return ComplementDecomposition{q_k, q_l, ComplementCase::div1};

    const int a = arith::valuation(k, p);
    if (a == 0)
        return std::nullopt;
    if (a == 1) {
        const TorsionForm glue = TorsionForm::w(p, 1, arith::legendre(arith::prime_to_part(k, p), p));
        auto q = q_k.strip(glue);
        auto r = q_l.strip(glue);
        if (!q || !r)
            return std::nullopt;
        return ComplementDecomposition{*q, *r, ComplementCase::divp_a1};
    }
    auto r = q_l.strip(TorsionForm::u(p, 1));
    if (!r)
        return std::nullopt;
    return ComplementDecomposition{q_k, *r, ComplementCase::divp_a2plus};
}

} // namespace discforms
} // namespace isoclass
