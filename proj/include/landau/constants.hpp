#pragma once

// Numeric constants of the P(g(n)) bound chain, kept as exact decimal
// rationals. Conversions to floating point happen at the point of use.

#include <array>

#include "landau/rational.hpp"

namespace landau::constants {

/// Left endpoints alpha_i of the nine prime-rich intervals (alpha_i q, beta_i q).
inline const std::array<Rational, 9>& interval_alphas()
{
    static const std::array<Rational, 9> values{
        Rational::from_decimal(".2426"), Rational::from_decimal(".3746"),
        Rational::from_decimal(".4632"), Rational::from_decimal(".5248"),
        Rational::from_decimal(".57"),   Rational::from_decimal(".6044"),
        Rational::from_decimal(".6312"), Rational::from_decimal(".6534"),
        Rational::from_decimal(".6714"),
    };
    return values;
}

/// Right endpoints beta_i, paired index-wise with interval_alphas().
inline const std::array<Rational, 9>& interval_betas()
{
    static const std::array<Rational, 9> values{
        Rational::from_decimal(".25"),   Rational::from_decimal(".386"),
        Rational::from_decimal(".4723"), Rational::from_decimal(".5352"),
        Rational::from_decimal(".5812"), Rational::from_decimal(".6162"),
        Rational::from_decimal(".6435"), Rational::from_decimal(".6652"),
        Rational::from_decimal(".6834"),
    };
    return values;
}

/// Lower end of the covered range (.5q, .8357q).
inline Rational coverage_start() { return Rational::from_decimal(".5"); }
/// Upper end of the covered range; equals (1 + alpha_9) / 2.
inline Rational coverage_end() { return Rational::from_decimal(".8357"); }

/// Slope c with S(q) < c q for the subtracted logarithms.
inline Rational residual_slope() { return Rational::from_decimal(".01338"); }

/// Lower bound log g(n) >= c q once theta(.8357 q) is bounded below.
inline Rational log_g_lower_slope() { return Rational::from_decimal(".79307"); }

/// log g(n) <= c sqrt(n log n) for n >= 1 (Massias, 1984).
inline Rational massias_upper() { return Rational::from_decimal("1.05314"); }

/// The improved bound P(g(n)) <= c sqrt(n log n) for n >= 5.
inline Rational theorem_constant() { return Rational::from_decimal("1.328"); }

/// Earlier bound P(g(n)) <= 2.86 sqrt(n log n), n >= 2 (Massias, Nicolas, Robin, 1989).
/// Used to size the prime cutoff of the table builder.
inline Rational prior_bound() { return Rational::from_decimal("2.86"); }

/// Floor for q in the large-n argument: 1.3 sqrt(500000 log 500000) > 3329.
inline constexpr std::uint64_t q_floor = 3329;

/// Range of n covered by the original exact computation.
inline constexpr std::uint64_t computed_n_max = 500000;

/// The n >= 5 hypothesis of the bound.
inline constexpr std::uint64_t theorem_n_min = 5;

} // namespace landau::constants
