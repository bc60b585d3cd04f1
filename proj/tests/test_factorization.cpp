#include <random>

#include <gtest/gtest.h>

#include "landau/factorization.hpp"

using namespace landau;

namespace {

Factorization F(std::initializer_list<PrimePower> parts) { return Factorization(std::vector<PrimePower>(parts)); }

} // namespace

TEST(Ell, Definition)
{
    EXPECT_EQ(ell(Factorization{}), 0u);
    EXPECT_EQ(ell(F({{2, 2}, {3, 1}})), 7u);
    EXPECT_EQ(ell(F({{2, 1}, {3, 1}, {5, 1}})), 10u);
    EXPECT_EQ(ell(F({{2, 10}})), 1024u);
}

TEST(FactorizationType, Validation)
{
    EXPECT_THROW(F({{3, 1}, {2, 1}}), domain_error);
    EXPECT_THROW(F({{2, 1}, {2, 2}}), domain_error);
    EXPECT_THROW(F({{4, 1}}), domain_error);
    EXPECT_THROW(F({{2, 0}}), domain_error);
    EXPECT_NO_THROW(F({{2, 3}, {7, 1}, {101, 2}}));
}

TEST(FactorizationType, OfAndValue)
{
    EXPECT_EQ(Factorization::of(1), Factorization{});
    EXPECT_EQ(Factorization::of(360), F({{2, 3}, {3, 2}, {5, 1}}));
    EXPECT_EQ(Factorization::of(1'000'000'007), F({{1'000'000'007, 1}}));
    EXPECT_EQ(F({{2, 3}, {3, 2}, {5, 1}}).value(), 360);
    EXPECT_EQ(F({{2, 3}, {3, 2}, {5, 1}}).largest_prime(), 5u);
    EXPECT_FALSE(Factorization{}.largest_prime());
}

TEST(FactorizationType, WithExponent)
{
    const auto f = F({{2, 2}, {5, 1}});
    EXPECT_EQ(f.with_exponent(3, 1), F({{2, 2}, {3, 1}, {5, 1}}));
    EXPECT_EQ(f.with_exponent(5, 0), F({{2, 2}}));
    EXPECT_EQ(f.with_exponent(2, 4), F({{2, 4}, {5, 1}}));
    EXPECT_EQ(f.with_exponent(7, 0), f);
    EXPECT_THROW(f.with_exponent(9, 1), domain_error);
}

TEST(Compare, Examples)
{
    EXPECT_EQ(compare(F({{2, 2}, {3, 1}}), F({{2, 2}, {3, 1}})), std::strong_ordering::equal);
    EXPECT_EQ(compare(F({{2, 10}}), F({{3, 1}, {5, 1}, {67, 1}})), std::strong_ordering::greater);
    EXPECT_EQ(compare(F({{3, 1}, {5, 1}, {67, 1}}), F({{2, 10}})), std::strong_ordering::less);
    EXPECT_EQ(compare(Factorization{}, F({{2, 1}})), std::strong_ordering::less);
}

TEST(Compare, NearTiesMatchExactProducts)
{
    // Consecutive integers around 10^12 differ in log by about 1e-12, far
    // inside the guard band, so every comparison takes the exact path.
    std::mt19937_64 rng(42);
    int checked = 0;
    for (int i = 0; i < 300; ++i) {
        const std::uint64_t a = 1'000'000'000'000ull + rng() % 1'000'000'000'000ull;
        const auto fa = Factorization::of(a);
        const auto fb = Factorization::of(a + 1);
        ASSERT_LT(std::fabs(static_cast<double>(fa.log() - fb.log())), 1e-9);
        EXPECT_EQ(compare(fa, fb), std::strong_ordering::less);
        EXPECT_EQ(compare(fb, fa), std::strong_ordering::greater);
        ++checked;
    }
    EXPECT_EQ(checked, 300);
}

TEST(Compare, RandomPairsAgreeWithBigIntegers)
{
    std::mt19937_64 rng(5);
    const std::uint64_t small_primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
    auto random_factorization = [&] {
        Factorization f;
        for (auto p : small_primes)
            if (rng() % 2) f = f.with_exponent(p, 1 + static_cast<std::uint32_t>(rng() % 6));
        return f;
    };
    for (int i = 0; i < 2000; ++i) {
        const auto a = random_factorization();
        const auto b = random_factorization();
        const auto va = a.value();
        const auto vb = b.value();
        const auto expected = va < vb   ? std::strong_ordering::less
                              : va > vb ? std::strong_ordering::greater
                                        : std::strong_ordering::equal;
        EXPECT_EQ(compare(a, b), expected);
    }
}

TEST(TextForm, RenderAndParse)
{
    EXPECT_EQ(to_string(Factorization{}), "1");
    EXPECT_EQ(to_string(F({{2, 2}, {3, 1}, {5, 1}})), "2^2*3*5");
    EXPECT_EQ(parse_factorization("2^2*3*5"), F({{2, 2}, {3, 1}, {5, 1}}));
    EXPECT_EQ(parse_factorization("1"), Factorization{});
    for (const char* bad : {"", "2*", "*3", "2^1", "2^", "3*2", "4", "2^x", "2**3"})
        EXPECT_THROW(parse_factorization(bad), format_error) << bad;
}

TEST(TextForm, RoundTripProperty)
{
    std::mt19937_64 rng(9);
    const std::uint64_t primes[] = {2, 3, 5, 7, 11, 13, 101, 7919, 104729};
    for (int i = 0; i < 500; ++i) {
        Factorization f;
        for (auto p : primes)
            if (rng() % 3 == 0) f = f.with_exponent(p, 1 + static_cast<std::uint32_t>(rng() % 4));
        EXPECT_EQ(parse_factorization(to_string(f)), f);
    }
}
