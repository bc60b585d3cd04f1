#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "landau/errors.hpp"

namespace landau {

/// Exact rational number with 64-bit numerator and denominator.
///
/// Intended for the short decimal constants of the bound chain and the
/// comparisons built from them. Intermediate products use 128-bit integers;
/// a result that does not fit back into 64 bits throws std::overflow_error.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t value) : num_(value) {} // NOLINT(implicit)
    Rational(std::int64_t num, std::int64_t den) { assign(num, den); }

    /// Parses a plain decimal literal such as "0.2426", ".25", "-1.3" or "3329".
    static Rational from_decimal(std::string_view text)
    {
        if (text.empty()) throw domain_error("empty decimal literal");
        bool negative = false;
        std::size_t pos = 0;
        if (text[0] == '-' || text[0] == '+') {
            negative = text[0] == '-';
            pos = 1;
        }
        __int128 num = 0;
        __int128 den = 1;
        bool seen_point = false;
        bool seen_digit = false;
        for (; pos < text.size(); ++pos) {
            char c = text[pos];
            if (c == '.') {
                if (seen_point) throw domain_error("bad decimal literal: " + std::string(text));
                seen_point = true;
                continue;
            }
            if (c < '0' || c > '9') throw domain_error("bad decimal literal: " + std::string(text));
            seen_digit = true;
            num = num * 10 + (c - '0');
            if (seen_point) den *= 10;
            if (num > INT64_MAX || den > INT64_MAX)
                throw std::overflow_error("decimal literal too long: " + std::string(text));
        }
        if (!seen_digit) throw domain_error("bad decimal literal: " + std::string(text));
        return Rational(negative ? -static_cast<std::int64_t>(num) : static_cast<std::int64_t>(num),
                        static_cast<std::int64_t>(den));
    }

    constexpr std::int64_t num() const { return num_; }
    constexpr std::int64_t den() const { return den_; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    long double to_long_double() const
    {
        return static_cast<long double>(num_) / static_cast<long double>(den_);
    }

    /// Largest integer not above the value.
    std::int64_t floor() const
    {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }
    /// Smallest integer not below the value.
    std::int64_t ceil() const
    {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ > 0) ++q;
        return q;
    }
    bool is_integer() const { return den_ == 1; }

    friend Rational operator+(const Rational& a, const Rational& b)
    {
        return make(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                    static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b)
    {
        return make(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                    static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b)
    {
        return make(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b)
    {
        if (b.num_ == 0) throw domain_error("division by zero");
        return make(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
    }
    Rational operator-() const { return Rational(-num_, den_); }

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
        __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r)
    {
        os << r.num_;
        if (r.den_ != 1) os << '/' << r.den_;
        return os;
    }

private:
    static __int128 gcd128(__int128 a, __int128 b)
    {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static Rational make(__int128 num, __int128 den)
    {
        if (den == 0) throw domain_error("zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        __int128 g = gcd128(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num > INT64_MAX || num < INT64_MIN || den > INT64_MAX)
            throw std::overflow_error("rational overflow");
        Rational r;
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = static_cast<std::int64_t>(den);
        return r;
    }

    void assign(std::int64_t num, std::int64_t den) { *this = make(num, den); }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace landau
