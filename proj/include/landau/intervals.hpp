#pragma once

#include <array>
#include <cstddef>

#include "landau/constants.hpp"
#include "landau/errors.hpp"
#include "landau/rational.hpp"

namespace landau {

/// Nine intervals (alpha_i q, beta_i q) with exact rational endpoints.
class IntervalSpec {
public:
    static constexpr std::size_t count = 9;

    IntervalSpec(const std::array<Rational, count>& alphas, const std::array<Rational, count>& betas)
        : alphas_(alphas), betas_(betas)
    {
        for (std::size_t i = 0; i < count; ++i) {
            if (!(Rational(0) < alphas_[i] && alphas_[i] < betas_[i] && betas_[i] < Rational(1)))
                throw domain_error("interval " + std::to_string(i + 1) + " violates 0 < alpha < beta < 1");
            if (i > 0 && !(alphas_[i - 1] < alphas_[i])) throw domain_error("alphas must increase");
        }
    }

    /// The table used for the 1.328 bound.
    static IntervalSpec standard() { return {constants::interval_alphas(), constants::interval_betas()}; }

    std::size_t size() const { return count; }
    const Rational& alpha(std::size_t i) const { return alphas_.at(i); }
    const Rational& beta(std::size_t i) const { return betas_.at(i); }

private:
    std::array<Rational, count> alphas_;
    std::array<Rational, count> betas_;
};

} // namespace landau
