#pragma once

/// @file oracle.hpp
/// @brief Brute-force g(n) for small n, sharing no code with the table builder.

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "landau/errors.hpp"

namespace landau::oracle {

inline constexpr std::uint64_t partitions_max_n = 30;
inline constexpr std::uint64_t subsets_max_n = 60;

namespace detail {

// Parts are non-increasing: the next part is at most `cap`.
inline void max_lcm(std::uint64_t remaining, std::uint64_t cap, std::uint64_t current, std::uint64_t& best)
{
    if (current > best) best = current;
    for (std::uint64_t part = std::min(cap, remaining); part >= 2; --part)
        max_lcm(remaining - part, part, std::lcm(current, part), best);
}

inline bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline void max_product(const std::vector<std::uint64_t>& primes, std::size_t index, std::uint64_t budget,
                        const boost::multiprecision::cpp_int& current, boost::multiprecision::cpp_int& best)
{
    if (current > best) best = current;
    for (std::size_t i = index; i < primes.size() && primes[i] <= budget; ++i) {
        for (std::uint64_t power = primes[i]; power <= budget; power *= primes[i])
            max_product(primes, i + 1, budget - power, current * power, best);
    }
}

} // namespace detail

/// max lcm(parts) over all integer partitions of n. Parts equal to 1 are the
/// fixed points of the permutation and never change the lcm, so they are left implicit.
inline std::uint64_t g_by_partitions(std::uint64_t n)
{
    if (n < 1 || n > partitions_max_n)
        throw domain_error("g_by_partitions: n must lie in [1, " + std::to_string(partitions_max_n) + "]");
    std::uint64_t best = 1;
    detail::max_lcm(n, n, 1, best);
    return best;
}

/// max prod p_i^a_i over prime powers with distinct primes and sum p_i^a_i <= n.
inline boost::multiprecision::cpp_int g_by_prime_power_subsets(std::uint64_t n)
{
    if (n < 1 || n > subsets_max_n)
        throw domain_error("g_by_prime_power_subsets: n must lie in [1, " + std::to_string(subsets_max_n) + "]");
    std::vector<std::uint64_t> primes;
    for (std::uint64_t k = 2; k <= n; ++k)
        if (detail::is_prime(k)) primes.push_back(k);
    boost::multiprecision::cpp_int best = 1;
    detail::max_product(primes, 0, n, 1, best);
    return best;
}

/// Both oracles agree for every 1 <= n <= n_max.
inline bool verify_reduction(std::uint64_t n_max)
{
    if (n_max > partitions_max_n)
        throw domain_error("verify_reduction: n_max must be at most " + std::to_string(partitions_max_n));
    for (std::uint64_t n = 1; n <= n_max; ++n)
        if (g_by_partitions(n) != g_by_prime_power_subsets(n)) return false;
    return true;
}

} // namespace landau::oracle
