#pragma once

/// @file structure.hpp
/// @brief Checks on the prime structure of g(n): the exchange lemma, its
/// corollary, and the interval lemma, plus the exchange construction itself.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "landau/errors.hpp"
#include "landau/factorization.hpp"
#include "landau/intervals.hpp"
#include "landau/primes.hpp"
#include "landau/rational.hpp"
#include "landau/table.hpp"

namespace landau {

/// The replacement M = p^k p' M0 / q for a source M0 divisible by q but by
/// neither p nor p', with p < p' and q >= p + p'.
struct ExchangeWitness {
    std::uint64_t n = 0;
    std::uint64_t p = 0;
    std::uint64_t p_prime = 0;
    std::uint64_t q = 0;
    std::uint32_t k = 0;
    Factorization m_fact;
    std::uint64_t ell_m = 0;
    std::uint64_t ell_source = 0;
    bool exceeds = false;

    /// Terms of  p^k p' - q >= p^k p' - p^(k+1) - p' + 1 = p^k (p' - p) - p' + 1
    ///                      >= p (p' - p) - p' + 1 = (p - 1)(p' - p - 1) >= 0.
    struct Chain {
        __int128 surplus = 0;      // p^k p' - q
        __int128 bracket = 0;      // p^k p' - p^(k+1) - p' + 1
        __int128 at_k_equal_1 = 0; // p (p' - p) - p' + 1
        __int128 product = 0;      // (p - 1)(p' - p - 1)
    } chain;
};

/// Builds the exchange witness for an arbitrary source factorization. `n` is
/// the letter budget the source is meant to fit; it is carried for reporting.
inline ExchangeWitness construct_lemma1_witness(const Factorization& source, std::uint64_t n, std::uint64_t p,
                                                std::uint64_t p_prime, std::uint64_t q)
{
    if (!is_prime_trial(p) || !is_prime_trial(p_prime) || !is_prime_trial(q))
        throw domain_error("p, p' and q must be prime");
    if (!(p < p_prime)) throw domain_error("need p < p'");
    if (source.divisible_by(p) || source.divisible_by(p_prime))
        throw domain_error("p and p' must not divide the source");
    if (!source.divisible_by(q)) throw domain_error("q must divide the source");
    if (q < p + p_prime) throw domain_error("need q >= p + p'");

    // Smallest k >= 1 with p^(k+1) + p' - 1 >= q; then p^k + p' <= q holds too.
    std::uint32_t k = 1;
    while (checked_pow(p, k + 1) + p_prime - 1 < q) ++k;
    const std::uint64_t pk = checked_pow(p, k);
    const std::uint64_t pk1 = checked_pow(p, k + 1);
    if (!(pk + p_prime <= q && q <= pk1 + p_prime - 1))
        throw internal_error("no bracketing exponent k for q = " + std::to_string(q));

    ExchangeWitness w;
    w.n = n;
    w.p = p;
    w.p_prime = p_prime;
    w.q = q;
    w.k = k;
    w.m_fact = source.with_exponent(q, source.exponent_of(q) - 1).with_exponent(p, k).with_exponent(p_prime, 1);
    w.ell_m = ell(w.m_fact);
    w.ell_source = ell(source);
    w.exceeds = compare(w.m_fact, source) == std::strong_ordering::greater;

    const __int128 P = p, Pp = p_prime, Q = q, PK = pk, PK1 = pk1;
    w.chain.surplus = PK * Pp - Q;
    w.chain.bracket = PK * Pp - PK1 - Pp + 1;
    w.chain.at_k_equal_1 = P * (Pp - P) - Pp + 1;
    w.chain.product = (P - 1) * (Pp - P - 1);
    return w;
}

inline ExchangeWitness construct_lemma1_witness(const LandauRecord& rec, std::uint64_t p, std::uint64_t p_prime,
                                                std::uint64_t q)
{
    return construct_lemma1_witness(rec.g_fact, rec.n, p, p_prime, q);
}

/// Every inequality the exchange argument relies on, checked on one witness.
inline bool witness_inequalities_hold(const ExchangeWitness& w)
{
    const auto& c = w.chain;
    const __int128 pk = checked_pow(w.p, w.k);
    const __int128 p = w.p, pp = w.p_prime;
    return w.ell_m <= w.ell_source && w.exceeds && c.surplus >= c.bracket &&
           c.bracket == pk * (pp - p) - pp + 1 && c.bracket >= c.at_k_equal_1 && c.at_k_equal_1 == c.product &&
           c.product >= 0 && c.surplus > 0;
}

/// Primes p < p' not dividing g(n) with a prime q | g(n), q >= p + p'.
struct Lemma1Pattern {
    std::uint64_t p;
    std::uint64_t p_prime;
    std::uint64_t q;
};

/// Looks for the hypothesis of the exchange lemma in a factorization. The
/// pair with the smallest sum is the two smallest non-divisors, and the best
/// q is the largest prime factor, so one comparison decides existence.
inline std::optional<Lemma1Pattern> find_lemma1_pattern(const Factorization& g, const PrimeSet& ps)
{
    auto q = g.largest_prime();
    if (!q) return std::nullopt;
    ps.require_covered(*q);
    std::vector<std::uint64_t> missing;
    for (std::uint64_t p : ps) {
        if (p >= *q || missing.size() == 2) break;
        if (!g.divisible_by(p)) missing.push_back(p);
    }
    if (missing.size() < 2 || *q < missing[0] + missing[1]) return std::nullopt;
    return Lemma1Pattern{missing[0], missing[1], *q};
}

/// Number of primes below q/2 that do not divide g(n), q = P(g(n)).
inline std::uint64_t check_corollary(const LandauRecord& rec, const PrimeSet& ps)
{
    if (!rec.largest_prime) throw domain_error("corollary check needs g(n) > 1");
    const std::uint64_t q = *rec.largest_prime;
    ps.require_covered(q);
    std::uint64_t count = 0;
    for (std::uint64_t p : ps) {
        if (2 * p >= q) break;
        if (!rec.g_fact.divisible_by(p)) ++count;
    }
    return count;
}

/// If some prime in (alpha q, beta q) divides g(n), the number of primes in
/// (sqrt(beta) q, (1 + alpha) q / 2) that do not; otherwise empty.
inline std::optional<std::uint64_t> check_lemma2(const LandauRecord& rec, const Rational& alpha,
                                                 const Rational& beta, const PrimeSet& ps)
{
    if (!(Rational(0) < alpha && alpha < beta && beta < Rational(1)))
        throw domain_error("need 0 < alpha < beta < 1");
    if (!rec.largest_prime) throw domain_error("interval check needs g(n) > 1");
    const __int128 q = *rec.largest_prime;
    ps.require_covered(*rec.largest_prime);

    // All comparisons are done on integers: x in (a/d q, b/d q) <=> a q < d x < b q.
    const __int128 ad = alpha.den(), an = alpha.num(), bd = beta.den(), bn = beta.num();
    bool hypothesis = false;
    for (const auto& pp : rec.g_fact.parts()) {
        const __int128 x = pp.prime;
        if (an * q < ad * x && bd * x < bn * q) {
            hypothesis = true;
            break;
        }
    }
    if (!hypothesis) return std::nullopt;

    // p > sqrt(beta) q  <=>  bd p^2 > bn q^2;   p < (1 + alpha) q / 2  <=>  2 ad p < (ad + an) q.
    std::uint64_t count = 0;
    for (std::uint64_t p : ps) {
        const __int128 x = p;
        if (2 * ad * x >= (ad + an) * q) break;
        if (bd * x * x > bn * q * q && !rec.g_fact.divisible_by(p)) ++count;
    }
    return count;
}

struct LemmaViolation {
    std::uint64_t n;
    std::string check;
    std::string detail;
};

/// Runs the exchange-lemma, corollary and interval-lemma checks on g(n) for
/// n_lo <= n <= n_hi. An empty result means every check passed.
inline std::vector<LemmaViolation> scan_lemmas(const LandauTable& table, std::uint64_t n_lo, std::uint64_t n_hi,
                                               const PrimeSet& ps, const IntervalSpec& spec, unsigned threads = 1)
{
    if (n_hi > table.max_n()) throw domain_error("lemma scan past the end of the table");
    n_lo = std::max<std::uint64_t>(n_lo, 2);
    if (n_hi < n_lo) return {};
    const std::size_t count = static_cast<std::size_t>(n_hi - n_lo + 1);
    std::vector<std::vector<LemmaViolation>> found(std::max(1u, threads));
    detail::parallel_blocks(count, threads, [&](std::size_t b, std::size_t e, std::size_t block) {
        auto& out = found[block];
        for (std::size_t i = b; i < e; ++i) {
            const LandauRecord rec = table.record(n_lo + i);
            if (auto pat = find_lemma1_pattern(rec.g_fact, ps))
                out.push_back({rec.n, "lemma1",
                               "p=" + std::to_string(pat->p) + " p'=" + std::to_string(pat->p_prime) +
                                   " q=" + std::to_string(pat->q)});
            if (auto c = check_corollary(rec, ps); c > 1)
                out.push_back({rec.n, "corollary", std::to_string(c) + " primes below q/2 missing"});
            for (std::size_t k = 0; k < spec.size(); ++k) {
                auto c = check_lemma2(rec, spec.alpha(k), spec.beta(k), ps);
                if (c && *c > 1)
                    out.push_back({rec.n, "lemma2",
                                   "interval " + std::to_string(k + 1) + ": " + std::to_string(*c) + " missing"});
            }
        }
    });
    std::vector<LemmaViolation> all;
    for (auto& part : found) all.insert(all.end(), part.begin(), part.end());
    return all;
}

} // namespace landau
