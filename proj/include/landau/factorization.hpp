#pragma once

/// @file factorization.hpp
/// @brief Exact prime factorizations, the l(M) function and exact ordering.

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "landau/detail/parallel.hpp"
#include "landau/errors.hpp"
#include "landau/primes.hpp"

namespace landau {

using BigInt = boost::multiprecision::cpp_int;

struct PrimePower {
    std::uint64_t prime = 0;
    std::uint32_t exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// p^e, throwing on 64-bit overflow.
inline std::uint64_t checked_pow(std::uint64_t p, std::uint32_t e)
{
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        if (p != 0 && r > UINT64_MAX / p) throw domain_error("prime power overflows 64 bits");
        r *= p;
    }
    return r;
}

/// M = prod p^e as an ascending list of prime powers; the empty list is M = 1.
class Factorization {
public:
    Factorization() = default;

    /// Validates: primes strictly increasing and prime, exponents >= 1.
    explicit Factorization(std::vector<PrimePower> parts) : parts_(std::move(parts))
    {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i].exponent == 0) throw domain_error("factorization exponent must be >= 1");
            if (i > 0 && parts_[i].prime <= parts_[i - 1].prime)
                throw domain_error("factorization primes must be strictly increasing");
            if (!is_prime_trial(parts_[i].prime))
                throw domain_error("factorization base " + std::to_string(parts_[i].prime) + " is not prime");
        }
    }

    /// Skips validation; for parts produced by code that already guarantees the invariants.
    static Factorization from_sorted_primes(std::vector<PrimePower> parts)
    {
        Factorization f;
        f.parts_ = std::move(parts);
        return f;
    }

    /// Trial-division factorization of m >= 1.
    static Factorization of(std::uint64_t m)
    {
        if (m == 0) throw domain_error("cannot factor 0");
        std::vector<PrimePower> parts;
        for (std::uint64_t d = 2; d <= m / d; d += (d == 2 ? 1 : 2)) {
            std::uint32_t e = 0;
            while (m % d == 0) {
                m /= d;
                ++e;
            }
            if (e) parts.push_back({d, e});
        }
        if (m > 1) parts.push_back({m, 1});
        Factorization f;
        f.parts_ = std::move(parts);
        return f;
    }

    std::span<const PrimePower> parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    std::size_t size() const { return parts_.size(); }

    std::optional<std::uint64_t> largest_prime() const
    {
        if (parts_.empty()) return std::nullopt;
        return parts_.back().prime;
    }

    std::uint32_t exponent_of(std::uint64_t p) const
    {
        auto it = find(p);
        return it != parts_.end() && it->prime == p ? it->exponent : 0;
    }
    bool divisible_by(std::uint64_t p) const { return exponent_of(p) != 0; }

    /// Copy with the exponent of prime p set to e (0 removes it).
    Factorization with_exponent(std::uint64_t p, std::uint32_t e) const
    {
        if (!is_prime_trial(p)) throw domain_error(std::to_string(p) + " is not prime");
        Factorization r = *this;
        auto it = r.find(p);
        bool present = it != r.parts_.end() && it->prime == p;
        if (e == 0) {
            if (present) r.parts_.erase(it);
        } else if (present) {
            it->exponent = e;
        } else {
            r.parts_.insert(it, PrimePower{p, e});
        }
        return r;
    }

    BigInt value() const
    {
        BigInt v = 1;
        for (const auto& pp : parts_) {
            BigInt b = pp.prime;
            v *= boost::multiprecision::pow(b, pp.exponent);
        }
        return v;
    }

    /// log M in extended precision.
    long double log() const
    {
        detail::CompensatedSum<long double> sum;
        for (const auto& pp : parts_) sum.add(pp.exponent * std::log(static_cast<long double>(pp.prime)));
        return sum.value();
    }

    friend bool operator==(const Factorization&, const Factorization&) = default;

private:
    std::vector<PrimePower>::iterator find(std::uint64_t p)
    {
        return std::lower_bound(parts_.begin(), parts_.end(), p,
                                [](const PrimePower& pp, std::uint64_t v) { return pp.prime < v; });
    }
    std::vector<PrimePower>::const_iterator find(std::uint64_t p) const
    {
        return std::lower_bound(parts_.begin(), parts_.end(), p,
                                [](const PrimePower& pp, std::uint64_t v) { return pp.prime < v; });
    }

    std::vector<PrimePower> parts_;
};

/// l(M): the sum of the prime powers exactly dividing M. l(1) = 0.
inline std::uint64_t ell(const Factorization& f)
{
    std::uint64_t total = 0;
    for (const auto& pp : f.parts()) total += checked_pow(pp.prime, pp.exponent);
    return total;
}

/// Relative guard band on log comparisons below which ordering is decided exactly.
inline constexpr long double compare_guard_band = 1e-9L;

/// Exact ordering of the integers represented by two factorizations.
/// Compares logarithms first; near-ties fall back to big-integer products
/// after cancelling the common part.
inline std::strong_ordering compare(const Factorization& a, const Factorization& b)
{
    long double la = a.log();
    long double lb = b.log();
    long double band = compare_guard_band * std::max({std::fabs(la), std::fabs(lb), 1.0L});
    if (la - lb > band) return std::strong_ordering::greater;
    if (lb - la > band) return std::strong_ordering::less;

    BigInt ra = 1;
    BigInt rb = 1;
    auto ia = a.parts().begin();
    auto ib = b.parts().begin();
    auto mul = [](BigInt& acc, std::uint64_t p, std::uint32_t e) {
        BigInt base = p;
        acc *= boost::multiprecision::pow(base, e);
    };
    while (ia != a.parts().end() || ib != b.parts().end()) {
        if (ib == b.parts().end() || (ia != a.parts().end() && ia->prime < ib->prime)) {
            mul(ra, ia->prime, ia->exponent);
            ++ia;
        } else if (ia == a.parts().end() || ib->prime < ia->prime) {
            mul(rb, ib->prime, ib->exponent);
            ++ib;
        } else {
            if (ia->exponent > ib->exponent) mul(ra, ia->prime, ia->exponent - ib->exponent);
            if (ib->exponent > ia->exponent) mul(rb, ib->prime, ib->exponent - ia->exponent);
            ++ia;
            ++ib;
        }
    }
    if (ra < rb) return std::strong_ordering::less;
    if (ra > rb) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

/// "p^a*p^a*..." with ascending primes and exponent 1 omitted; "1" for M = 1.
inline std::string to_string(const Factorization& f)
{
    if (f.empty()) return "1";
    std::string out;
    for (const auto& pp : f.parts()) {
        if (!out.empty()) out += '*';
        out += std::to_string(pp.prime);
        if (pp.exponent != 1) {
            out += '^';
            out += std::to_string(pp.exponent);
        }
    }
    return out;
}

namespace detail {

inline std::uint64_t parse_u64(std::string_view s)
{
    if (s.empty() || s.size() > 19) throw format_error("bad integer '" + std::string(s) + "'");
    std::uint64_t v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw format_error("bad integer '" + std::string(s) + "'");
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return v;
}

} // namespace detail

/// Inverse of to_string.
inline Factorization parse_factorization(std::string_view text)
{
    if (text == "1") return {};
    std::vector<PrimePower> parts;
    while (!text.empty()) {
        auto star = text.find('*');
        std::string_view term = text.substr(0, star);
        auto caret = term.find('^');
        PrimePower pp;
        pp.prime = detail::parse_u64(term.substr(0, caret));
        pp.exponent = 1;
        if (caret != std::string_view::npos) {
            std::uint64_t e = detail::parse_u64(term.substr(caret + 1));
            if (e < 2 || e > UINT32_MAX) throw format_error("bad exponent in '" + std::string(term) + "'");
            pp.exponent = static_cast<std::uint32_t>(e);
        }
        parts.push_back(pp);
        if (star == std::string_view::npos) break;
        text.remove_prefix(star + 1);
        if (text.empty()) throw format_error("trailing '*' in factorization");
    }
    if (parts.empty()) throw format_error("empty factorization");
    try {
        return Factorization(std::move(parts));
    } catch (const domain_error& e) {
        throw format_error(e.what());
    }
}

} // namespace landau
