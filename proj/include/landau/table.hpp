#pragma once

/// @file table.hpp
/// @brief Exact g(n) for all n <= N by a group-knapsack over prime powers.
///
/// For primes p_1 < ... < p_k up to a cutoff, the builder maintains
///
///     B_j(m) = max { M : M uses only p_1..p_j, l(M) <= m }
///     B_j(m) = max( B_{j-1}(m),  max_{a >= 1, p_j^a <= m} p_j^a * B_{j-1}(m - p_j^a) )
///
/// and g(n) = B_k(n). Cells store log B_j(m) in extended precision; for each
/// prime a packed column keeps the chosen exponent per budget, from which any
/// factorization B_j(m) is rebuilt by walking the columns downwards. Candidates
/// whose logarithms are within the guard band are ordered exactly.

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "landau/constants.hpp"
#include "landau/detail/parallel.hpp"
#include "landau/errors.hpp"
#include "landau/factorization.hpp"
#include "landau/primes.hpp"

namespace landau {

enum class CutoffMode {
    /// Primes up to the cutoff implied by P(g(n)) <= 2.86 sqrt(n log n).
    safe,
    /// Every prime up to max_n.
    exhaustive,
};

/// Largest table size accepted without BuildOptions::long_run.
inline constexpr std::uint64_t table_soft_ceiling = constants::computed_n_max;
inline constexpr std::uint64_t table_default_max_n = 100'000;

struct BuildOptions {
    CutoffMode cutoff = CutoffMode::safe;
    unsigned threads = 1;
    bool long_run = false;
    std::uint64_t memory_ceiling_bytes = std::uint64_t{6} << 30;
};

/// min(N, ceil(2.86 sqrt(N ln N)) + 10).
inline std::uint64_t safe_prime_cutoff(std::uint64_t max_n)
{
    const double n = static_cast<double>(max_n);
    const double bound = constants::prior_bound().to_double() * std::sqrt(n * std::log(n));
    return std::min<std::uint64_t>(max_n, static_cast<std::uint64_t>(std::ceil(bound)) + 10);
}

struct LandauRecord {
    std::uint64_t n = 0;
    Factorization g_fact;
    std::uint64_t ell = 0;
    double log_g = 0;
    std::optional<std::uint64_t> largest_prime;
};

namespace detail {

/// Exponents chosen for one prime, packed at a fixed bit width, for budgets m >= p.
class ChoiceColumn {
public:
    ChoiceColumn(std::uint64_t prime, std::uint32_t max_exponent, std::span<const std::uint8_t> choices)
        : prime_(prime), bits_(static_cast<unsigned>(std::bit_width(max_exponent)))
    {
        const std::uint64_t count = choices.size() > prime ? choices.size() - prime : 0;
        words_.assign((count * bits_ + 63) / 64, 0);
        for (std::uint64_t i = 0; i < count; ++i) {
            std::uint64_t v = choices[prime + i];
            if (v == 0) continue;
            std::uint64_t bit = i * bits_;
            words_[bit / 64] |= v << (bit % 64);
            if (bit % 64 + bits_ > 64) words_[bit / 64 + 1] |= v >> (64 - bit % 64);
        }
    }

    std::uint64_t prime() const { return prime_; }

    std::uint32_t get(std::uint64_t m) const
    {
        if (m < prime_) return 0;
        std::uint64_t bit = (m - prime_) * bits_;
        std::uint64_t v = words_[bit / 64] >> (bit % 64);
        if (bit % 64 + bits_ > 64) v |= words_[bit / 64 + 1] << (64 - bit % 64);
        return static_cast<std::uint32_t>(v & ((std::uint64_t{1} << bits_) - 1));
    }

    std::size_t bytes() const { return words_.size() * sizeof(std::uint64_t); }

private:
    std::uint64_t prime_;
    unsigned bits_;
    std::vector<std::uint64_t> words_;
};

} // namespace detail

class LandauTable;
LandauTable build_table(std::uint64_t max_n, const BuildOptions& options);

/// g(n) for every 1 <= n <= max_n. Immutable; safe for concurrent reads.
class LandauTable {
public:
    std::uint64_t max_n() const { return max_n_; }
    std::uint64_t prime_cutoff() const { return prime_cutoff_; }
    CutoffMode cutoff_mode() const { return mode_; }
    std::span<const std::uint64_t> primes() const { return primes_; }
    /// Cells whose ordering was decided by exact integer arithmetic.
    std::uint64_t escalations() const { return escalations_; }

    Factorization factorization(std::uint64_t n) const
    {
        check(n);
        return rebuild(columns_.size(), n);
    }

    std::uint64_t ell_at(std::uint64_t n) const { return summary(n).ell; }
    double log_g_at(std::uint64_t n) const { return summary(n).log_g; }
    std::optional<std::uint64_t> largest_prime_at(std::uint64_t n) const
    {
        auto p = summary(n).largest_prime;
        return p == 0 ? std::nullopt : std::optional<std::uint64_t>(p);
    }

    LandauRecord record(std::uint64_t n) const
    {
        const auto& s = summary(n);
        LandauRecord r;
        r.n = n;
        r.g_fact = rebuild(columns_.size(), n);
        r.ell = s.ell;
        r.log_g = s.log_g;
        if (s.largest_prime != 0) r.largest_prime = s.largest_prime;
        return r;
    }

private:
    friend LandauTable build_table(std::uint64_t, const BuildOptions&);

    struct Summary {
        std::uint64_t ell = 0;
        double log_g = 0;
        std::uint64_t largest_prime = 0;
    };

    void check(std::uint64_t n) const
    {
        if (n < 1 || n > max_n_)
            throw domain_error("n = " + std::to_string(n) + " outside table range [1, " + std::to_string(max_n_) +
                               "]");
    }
    const Summary& summary(std::uint64_t n) const
    {
        check(n);
        return summary_[n];
    }

    /// B_j(m) using the first `prime_count` columns.
    Factorization rebuild(std::size_t prime_count, std::uint64_t m) const
    {
        std::vector<PrimePower> parts;
        for (std::size_t j = prime_count; j-- > 0;) {
            std::uint32_t a = columns_[j].get(m);
            if (a == 0) continue;
            parts.push_back({columns_[j].prime(), a});
            m -= checked_pow(columns_[j].prime(), a);
        }
        std::reverse(parts.begin(), parts.end());
        return Factorization::from_sorted_primes(std::move(parts));
    }

    std::uint64_t max_n_ = 0;
    std::uint64_t prime_cutoff_ = 0;
    CutoffMode mode_ = CutoffMode::safe;
    std::uint64_t escalations_ = 0;
    std::vector<std::uint64_t> primes_;
    std::vector<detail::ChoiceColumn> columns_;
    std::vector<Summary> summary_;
};

/// Builds the table of g(n), 1 <= n <= max_n. Output is identical for any thread count.
inline LandauTable build_table(std::uint64_t max_n, const BuildOptions& options = {})
{
    if (max_n < 1) throw domain_error("max_n must be at least 1");
    if (max_n > table_soft_ceiling && !options.long_run)
        throw resource_error("max_n = " + std::to_string(max_n) + " exceeds " + std::to_string(table_soft_ceiling) +
                             " without the long-run flag");

    LandauTable table;
    table.max_n_ = max_n;
    table.mode_ = options.cutoff;
    table.prime_cutoff_ = options.cutoff == CutoffMode::safe ? safe_prime_cutoff(max_n) : max_n;
    if (table.prime_cutoff_ >= 2) {
        const PrimeSet ps = sieve(table.prime_cutoff_);
        table.primes_.assign(ps.begin(), ps.end());
    }

    const std::size_t cells = static_cast<std::size_t>(max_n) + 1;
    {
        std::uint64_t bytes = cells * (2 * sizeof(long double) + 1 + sizeof(LandauTable::Summary));
        for (std::uint64_t p : table.primes_) {
            std::uint32_t e = 0;
            for (std::uint64_t pw = p; pw <= max_n; pw *= p) ++e;
            bytes += ((max_n - p + 1) * std::bit_width(e) + 63) / 64 * 8;
        }
        if (bytes > options.memory_ceiling_bytes)
            throw resource_error("table would need about " + std::to_string(bytes >> 20) + " MiB");
    }

    std::vector<long double> prev(cells, 0.0L);
    std::vector<long double> cur(cells, 0.0L);
    std::vector<std::uint8_t> choice(cells, 0);
    std::atomic<std::uint64_t> escalations{0};
    table.columns_.reserve(table.primes_.size());

    for (std::size_t j = 0; j < table.primes_.size(); ++j) {
        const std::uint64_t p = table.primes_[j];
        std::vector<std::uint64_t> powers{1};
        std::vector<long double> logs{0.0L};
        const long double log_p = std::log(static_cast<long double>(p));
        while (powers.back() <= max_n / p) {
            powers.push_back(powers.back() * p);
            logs.push_back(static_cast<long double>(logs.size()) * log_p);
        }
        const auto max_exponent = static_cast<std::uint32_t>(powers.size() - 1);

        // B_{j-1}(budget) * p^a as an exact factorization.
        auto candidate = [&](std::uint64_t budget, std::uint32_t a) {
            Factorization f = table.rebuild(j, budget);
            if (a == 0) return f;
            std::vector<PrimePower> parts(f.parts().begin(), f.parts().end());
            parts.push_back({p, a});
            return Factorization::from_sorted_primes(std::move(parts));
        };

        detail::parallel_blocks(cells, options.threads, [&](std::size_t begin, std::size_t end, std::size_t) {
            std::uint64_t local_escalations = 0;
            for (std::size_t m = begin; m < end; ++m) {
                long double best = prev[m];
                std::uint32_t best_a = 0;
                for (std::uint32_t a = 1; a <= max_exponent && powers[a] <= m; ++a) {
                    const long double cand = prev[m - powers[a]] + logs[a];
                    const long double band =
                        compare_guard_band * std::max({std::fabs(cand), std::fabs(best), 1.0L});
                    bool take = cand - best > band;
                    if (!take && !(best - cand > band)) {
                        ++local_escalations;
                        const std::uint64_t best_budget = best_a == 0 ? m : m - powers[best_a];
                        take = compare(candidate(m - powers[a], a), candidate(best_budget, best_a)) ==
                               std::strong_ordering::greater;
                    }
                    if (take) {
                        best = cand;
                        best_a = a;
                    }
                }
                cur[m] = best;
                choice[m] = static_cast<std::uint8_t>(best_a);
            }
            escalations += local_escalations;
        });

        table.columns_.emplace_back(p, max_exponent, choice);
        prev.swap(cur);
    }
    table.escalations_ = escalations.load();

    table.summary_.assign(cells, {});
    detail::parallel_blocks(cells, options.threads, [&](std::size_t begin, std::size_t end, std::size_t) {
        for (std::size_t n = std::max<std::size_t>(begin, 1); n < end; ++n) {
            Factorization f = table.rebuild(table.columns_.size(), n);
            auto& s = table.summary_[n];
            s.ell = ell(f);
            s.log_g = static_cast<double>(f.log());
            s.largest_prime = f.largest_prime().value_or(0);
        }
    });
    return table;
}

inline LandauRecord g_of(const LandauTable& table, std::uint64_t n) { return table.record(n); }

/// P(g(n)) / sqrt(n ln n); empty when g(n) = 1.
inline std::optional<double> ratio(const LandauRecord& rec)
{
    if (rec.n < 2) throw domain_error("ratio needs n >= 2");
    if (!rec.largest_prime) return std::nullopt;
    const double n = static_cast<double>(rec.n);
    return static_cast<double>(*rec.largest_prime) / std::sqrt(n * std::log(n));
}

/// ratio() from the table summaries without rebuilding the factorization.
inline std::optional<double> ratio_at(const LandauTable& table, std::uint64_t n)
{
    LandauRecord r;
    r.n = n;
    r.largest_prime = table.largest_prime_at(n);
    return ratio(r);
}

} // namespace landau
