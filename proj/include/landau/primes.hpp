#pragma once

/// @file primes.hpp
/// @brief Segmented sieve, interval prime counts and the Chebyshev theta function.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "landau/detail/parallel.hpp"
#include "landau/errors.hpp"
#include "landau/rational.hpp"

namespace landau {

/// Deterministic primality by trial division; meant for validation of small inputs.
inline bool is_prime_trial(std::uint64_t n)
{
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t d = 5; d <= n / d; d += 6)
        if (n % d == 0 || n % (d + 2) == 0) return false;
    return true;
}

struct SieveOptions {
    /// Largest limit accepted by sieve().
    std::uint64_t ceiling = 100'000'000;
    unsigned threads = 1;
    /// Numbers covered by one segment. Must be even.
    std::uint64_t segment_span = std::uint64_t{1} << 20;
};

/// The primes up to an inclusive limit, ascending. Immutable once built.
class PrimeSet {
public:
    PrimeSet() = default;

    /// Takes ownership of an ascending prime list. Callers outside the sieve
    /// and the cache loader should prefer sieve().
    PrimeSet(std::uint64_t limit, std::vector<std::uint64_t> primes)
        : limit_(limit), primes_(std::move(primes))
    {
    }

    std::uint64_t limit() const { return limit_; }
    std::span<const std::uint64_t> primes() const { return primes_; }
    std::size_t size() const { return primes_.size(); }
    bool empty() const { return primes_.empty(); }
    auto begin() const { return primes_.begin(); }
    auto end() const { return primes_.end(); }
    std::uint64_t operator[](std::size_t i) const { return primes_[i]; }

    bool contains(std::uint64_t n) const
    {
        require_covered(n);
        return std::binary_search(primes_.begin(), primes_.end(), n);
    }

    /// Number of primes <= x, i.e. pi(x).
    std::size_t count_up_to(std::uint64_t x) const
    {
        require_covered(x);
        return static_cast<std::size_t>(std::upper_bound(primes_.begin(), primes_.end(), x) - primes_.begin());
    }

    /// Number of primes p with lo <= p <= hi (inclusive integers).
    std::size_t count_closed(std::int64_t lo, std::int64_t hi) const
    {
        if (hi < 2 || hi < lo) return 0;
        std::size_t upper = count_up_to(static_cast<std::uint64_t>(hi));
        std::size_t lower = lo <= 2 ? 0 : count_up_to(static_cast<std::uint64_t>(lo - 1));
        return upper - lower;
    }

    void require_covered(std::uint64_t x) const
    {
        if (x > limit_)
            throw insufficient_sieve_error("query at " + std::to_string(x) + " exceeds sieve limit " +
                                           std::to_string(limit_));
    }

private:
    std::uint64_t limit_ = 0;
    std::vector<std::uint64_t> primes_;
};

namespace detail {

inline std::vector<std::uint64_t> simple_sieve(std::uint64_t limit)
{
    std::vector<std::uint64_t> out;
    if (limit < 2) return out;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
}

/// Odd primes in [lo, hi), lo odd, using base primes up to sqrt(hi).
inline void sieve_odd_segment(std::uint64_t lo, std::uint64_t hi, std::span<const std::uint64_t> base,
                              std::vector<unsigned char>& scratch, std::vector<std::uint64_t>& out)
{
    std::size_t odds = static_cast<std::size_t>((hi - lo + 1) / 2);
    scratch.assign(odds, 1);
    for (std::uint64_t p : base) {
        if (p == 2) continue;
        if (p * p >= hi) break;
        std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
        if (start % 2 == 0) start += p;
        for (std::uint64_t m = start; m < hi; m += 2 * p) scratch[(m - lo) / 2] = 0;
    }
    for (std::size_t i = 0; i < odds; ++i)
        if (scratch[i]) out.push_back(lo + 2 * i);
}

} // namespace detail

/// Primes <= limit by a segmented, odd-only sieve of Eratosthenes.
/// Memory is O(sqrt(limit) + segment) beyond the output itself.
inline PrimeSet sieve(std::uint64_t limit, const SieveOptions& options = {})
{
    if (limit < 2) throw domain_error("sieve limit must be at least 2, got " + std::to_string(limit));
    if (limit > options.ceiling)
        throw resource_error("sieve limit " + std::to_string(limit) + " exceeds ceiling " +
                             std::to_string(options.ceiling));
    if (options.segment_span < 2 || options.segment_span % 2 != 0)
        throw domain_error("segment span must be a positive even number");

    auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit)));
    while (root * root > limit) --root;
    while ((root + 1) * (root + 1) <= limit) ++root;
    const std::vector<std::uint64_t> base = detail::simple_sieve(root);

    // Odd numbers from 3 up to limit, split into fixed segments [lo, lo + span).
    const std::uint64_t first = 3;
    const std::uint64_t stop = limit + 1;
    const std::uint64_t span = options.segment_span;
    const std::size_t segments = stop > first ? static_cast<std::size_t>((stop - first + span - 1) / span) : 0;

    std::vector<std::vector<std::uint64_t>> parts(segments);
    detail::parallel_blocks(segments, options.threads, [&](std::size_t b, std::size_t e, std::size_t) {
        std::vector<unsigned char> scratch;
        for (std::size_t s = b; s < e; ++s) {
            std::uint64_t lo = first + s * span;
            std::uint64_t hi = std::min(stop, lo + span);
            detail::sieve_odd_segment(lo, hi, base, scratch, parts[s]);
        }
    });

    std::vector<std::uint64_t> primes{2};
    std::size_t total = 1;
    for (const auto& part : parts) total += part.size();
    primes.reserve(total);
    for (const auto& part : parts) primes.insert(primes.end(), part.begin(), part.end());
    return PrimeSet(limit, std::move(primes));
}

/// Number of primes in the open interval (lo, hi).
inline std::size_t count_primes_in(double lo, double hi, const PrimeSet& ps)
{
    if (!(hi <= static_cast<double>(ps.limit())))
        throw insufficient_sieve_error("interval end " + std::to_string(hi) + " exceeds sieve limit " +
                                       std::to_string(ps.limit()));
    if (!(lo < hi) || hi <= 2.0) return 0;
    // p > lo  <=>  p >= floor(lo) + 1;   p < hi  <=>  p <= ceil(hi) - 1.
    auto first = static_cast<std::int64_t>(std::floor(lo)) + 1;
    auto last = static_cast<std::int64_t>(std::ceil(hi)) - 1;
    return ps.count_closed(first, last);
}

/// Number of primes in the open interval (lo, hi) with exact rational endpoints.
inline std::size_t count_primes_in(const Rational& lo, const Rational& hi, const PrimeSet& ps)
{
    if (hi > Rational(static_cast<std::int64_t>(ps.limit())))
        throw insufficient_sieve_error("interval end exceeds sieve limit " + std::to_string(ps.limit()));
    if (lo >= hi) return 0;
    return ps.count_closed(lo.floor() + 1, hi.ceil() - 1);
}

/// theta(x) together with a bound on its floating-point error.
struct ThetaAccumulator {
    double x = 0;
    double value = 0;
    double error_budget = 0;
};

/// Error bound for a compensated sum of `terms` logarithms totalling `value`:
/// one rounding per log, plus the compensated summation bound.
inline double theta_error_budget(std::size_t terms, double value)
{
    constexpr double u = std::numeric_limits<double>::epsilon() / 2;
    return (3 * u + static_cast<double>(terms) * u * u) * value;
}

/// Chebyshev theta(x) = sum of log p over primes p <= x, natural logs,
/// accumulated in ascending order with compensated summation.
inline ThetaAccumulator theta_sum(double x, const PrimeSet& ps)
{
    if (!(x <= static_cast<double>(ps.limit())))
        throw insufficient_sieve_error("theta argument " + std::to_string(x) + " exceeds sieve limit " +
                                       std::to_string(ps.limit()));
    ThetaAccumulator acc;
    acc.x = x;
    if (x < 2) return acc;
    auto top = static_cast<std::uint64_t>(std::floor(x));
    detail::CompensatedSum<double> sum;
    std::size_t terms = 0;
    for (std::uint64_t p : ps) {
        if (p > top) break;
        sum.add(std::log(static_cast<double>(p)));
        ++terms;
    }
    acc.value = sum.value();
    acc.error_budget = theta_error_budget(terms, acc.value);
    return acc;
}

inline double theta(double x, const PrimeSet& ps) { return theta_sum(x, ps).value; }

/// Prefix sums of log p over a PrimeSet, for repeated theta queries.
class ThetaTable {
public:
    explicit ThetaTable(const PrimeSet& ps) : ps_(&ps), prefix_(ps.size())
    {
        detail::CompensatedSum<double> sum;
        for (std::size_t i = 0; i < ps.size(); ++i) {
            sum.add(std::log(static_cast<double>(ps[i])));
            prefix_[i] = sum.value();
        }
    }

    /// theta(x) for integer x.
    double at(std::uint64_t x) const
    {
        std::size_t k = ps_->count_up_to(x);
        return k == 0 ? 0.0 : prefix_[k - 1];
    }
    double operator()(double x) const
    {
        if (x < 2) return 0.0;
        return at(static_cast<std::uint64_t>(std::floor(x)));
    }

    const PrimeSet& primes() const { return *ps_; }

private:
    const PrimeSet* ps_;
    std::vector<double> prefix_;
};

/// Explicit lower bounds theta(x) >= (1 - epsilon) x valid for x >= threshold.
class AnalyticThetaBound {
public:
    struct Entry {
        std::uint64_t threshold;
        double epsilon;
    };

    explicit AnalyticThetaBound(std::vector<Entry> entries) : entries_(std::move(entries))
    {
        if (entries_.empty()) throw domain_error("analytic theta bound table is empty");
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (!(entries_[i].epsilon > 0 && entries_[i].epsilon < 1))
                throw domain_error("theta bound epsilon must lie in (0, 1)");
            if (i > 0 && !(entries_[i].threshold > entries_[i - 1].threshold &&
                           entries_[i].epsilon < entries_[i - 1].epsilon))
                throw domain_error("theta bound thresholds must increase and epsilons decrease");
        }
    }

    /// Entries derived from published explicit estimates, each epsilon rounded up.
    ///
    /// From Rosser and Schoenfeld (Illinois J. Math. 6, 1962), theta(x) > x (1 - 1/(2 log x))
    /// for x >= 563; since 1/(2 log x) decreases, epsilon = 1/(2 log x0) holds for x >= x0.
    /// From Schoenfeld (Math. Comp. 30, 1976), theta(x) > 0.998684 x for x >= 1319007.
    static AnalyticThetaBound standard()
    {
        return AnalyticThetaBound({
            {563, 0.0790},       // 1/(2 log 563)     = 0.078946...
            {10'000, 0.0543},    // 1/(2 log 10^4)    = 0.054286...
            {100'000, 0.0435},   // 1/(2 log 10^5)    = 0.043429...
            {1'000'000, 0.0362}, // 1/(2 log 10^6)    = 0.036191...
            {1'319'007, 0.001316},
        });
    }

    std::span<const Entry> entries() const { return entries_; }
    std::uint64_t smallest_threshold() const { return entries_.front().threshold; }

    /// The entry with the largest threshold <= x.
    const Entry& applicable(double x) const
    {
        if (!(x >= static_cast<double>(entries_.front().threshold)))
            throw no_bound_error("no analytic theta bound available at x = " + std::to_string(x));
        auto it = std::upper_bound(entries_.begin(), entries_.end(), x,
                                   [](double v, const Entry& e) { return v < static_cast<double>(e.threshold); });
        return *(it - 1);
    }

private:
    std::vector<Entry> entries_;
};

/// (1 - epsilon) x from the largest applicable threshold of the table.
inline double theta_lower_bound(double x, const AnalyticThetaBound& tbl)
{
    return (1.0 - tbl.applicable(x).epsilon) * x;
}

} // namespace landau
