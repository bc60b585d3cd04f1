#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "landau/structure.hpp"
#include "support/oracles.hpp"

using namespace landau;

namespace {

const LandauTable& table_10000()
{
    static const LandauTable t = build_table(10'000);
    return t;
}

const PrimeSet& primes_10000()
{
    static const PrimeSet ps = sieve(10'000);
    return ps;
}

LandauRecord synthetic(std::uint64_t n, Factorization f)
{
    LandauRecord r;
    r.n = n;
    r.ell = ell(f);
    r.largest_prime = f.largest_prime();
    r.log_g = static_cast<double>(f.log());
    r.g_fact = std::move(f);
    return r;
}

} // namespace

TEST(ExchangeWitness, SmallestCase)
{
    const auto w = construct_lemma1_witness(Factorization({{5, 1}}), 5, 2, 3, 5);
    EXPECT_EQ(w.k, 1u);
    EXPECT_EQ(w.m_fact.value(), 6);
    EXPECT_EQ(w.ell_m, 5u);
    EXPECT_TRUE(w.exceeds);
    EXPECT_TRUE(witness_inequalities_hold(w));
}

TEST(ExchangeWitness, SecondCase)
{
    const auto w = construct_lemma1_witness(Factorization({{11, 1}}), 11, 3, 5, 11);
    EXPECT_EQ(w.k, 1u);
    EXPECT_EQ(w.m_fact.value(), 15);
    EXPECT_EQ(w.ell_m, 8u);
    EXPECT_TRUE(w.exceeds);
    EXPECT_EQ(w.chain.surplus, 4);
    EXPECT_EQ(w.chain.product, 2);
    EXPECT_TRUE(witness_inequalities_hold(w));
}

TEST(ExchangeWitness, LargerExponent)
{
    // q = 13 >= 2 + 3 with 2^3 + 3 <= 13 <= 2^4 + 3 - 1, so k = 3.
    const auto w = construct_lemma1_witness(Factorization({{5, 1}, {13, 1}}), 18, 2, 3, 13);
    EXPECT_EQ(w.k, 3u);
    EXPECT_EQ(w.m_fact, Factorization({{2, 3}, {3, 1}, {5, 1}}));
    EXPECT_TRUE(witness_inequalities_hold(w));
}

TEST(ExchangeWitness, PreconditionsAreEnforced)
{
    const Factorization src({{2, 1}, {11, 1}});
    EXPECT_THROW(construct_lemma1_witness(src, 13, 5, 3, 11), domain_error);  // p > p'
    EXPECT_THROW(construct_lemma1_witness(src, 13, 2, 3, 11), domain_error);  // p divides
    EXPECT_THROW(construct_lemma1_witness(src, 13, 3, 5, 7), domain_error);   // q does not divide
    EXPECT_THROW(construct_lemma1_witness(src, 13, 5, 7, 11), domain_error);  // q < p + p'
    EXPECT_THROW(construct_lemma1_witness(src, 13, 3, 9, 11), domain_error);  // 9 not prime
}

TEST(ExchangeWitness, RandomSyntheticSources)
{
    std::mt19937_64 rng(2024);
    const auto& ps = primes_10000();
    int built = 0;
    while (built < 1000) {
        // random source from primes below 2000
        Factorization src;
        for (int i = 0; i < 1 + static_cast<int>(rng() % 6); ++i) {
            const std::uint64_t p = ps[rng() % 300];
            src = src.with_exponent(p, 1 + static_cast<std::uint32_t>(rng() % 2));
        }
        const std::uint64_t q = *src.largest_prime();
        std::vector<std::uint64_t> absent;
        for (std::uint64_t p : ps) {
            if (p >= q) break;
            if (!src.divisible_by(p)) absent.push_back(p);
        }
        if (absent.size() < 2) continue;
        const std::uint64_t a = absent[rng() % absent.size()];
        const std::uint64_t b = absent[rng() % absent.size()];
        if (a == b || a + b > q) continue;
        const auto w = construct_lemma1_witness(src, ell(src), std::min(a, b), std::max(a, b), q);
        ASSERT_LE(w.ell_m, ell(src));
        ASSERT_GT(w.m_fact.value(), src.value());
        ASSERT_TRUE(witness_inequalities_hold(w));
        ++built;
    }
}

TEST(ExchangePattern, SyntheticSourceHasPattern)
{
    const auto pat = find_lemma1_pattern(Factorization({{5, 1}}), primes_10000());
    ASSERT_TRUE(pat);
    EXPECT_EQ(pat->p, 2u);
    EXPECT_EQ(pat->p_prime, 3u);
    EXPECT_EQ(pat->q, 5u);
}

TEST(ExchangePattern, NeverOnComputedTable)
{
    const auto& t = table_10000();
    const auto& ps = primes_10000();
    for (std::uint64_t n = 2; n <= t.max_n(); ++n) ASSERT_FALSE(find_lemma1_pattern(t.factorization(n), ps)) << n;
}

TEST(ExchangePattern, ExhaustiveTripleScanAgrees)
{
    // Every prime triple p < p' < q below P(g(n)) with q | g(n) and neither p nor p' dividing.
    const auto& t = table_10000();
    for (std::uint64_t n = 2; n <= 1500; ++n) {
        const auto g = t.factorization(n);
        const std::uint64_t top = *g.largest_prime();
        bool found = false;
        for (std::uint64_t q = 2; q <= top && !found; ++q) {
            if (!g.divisible_by(q)) continue;
            for (std::uint64_t p = 2; p < q && !found; ++p) {
                if (!landau::testing::trial_prime(p) || g.divisible_by(p)) continue;
                for (std::uint64_t pp = p + 1; p + pp <= q; ++pp)
                    if (landau::testing::trial_prime(pp) && !g.divisible_by(pp)) {
                        found = true;
                        break;
                    }
            }
        }
        ASSERT_FALSE(found) << n;
    }
}

TEST(SmallNonDivisors, Values)
{
    const auto& t = table_10000();
    const auto& ps = primes_10000();
    EXPECT_EQ(check_corollary(g_of(t, 5), ps), 0u);
    EXPECT_LE(check_corollary(g_of(t, 215), ps), 1u);
    EXPECT_THROW(check_corollary(g_of(t, 1), ps), domain_error);
    for (std::uint64_t n = 5; n <= t.max_n(); ++n) ASSERT_LE(check_corollary(g_of(t, n), ps), 1u) << n;
}

TEST(SmallNonDivisors, CountsMissingSmallPrimes)
{
    // q = 13; primes below 6.5 are 2, 3, 5; only 2 divides.
    const auto r = synthetic(20, Factorization({{2, 1}, {13, 1}}));
    EXPECT_EQ(check_corollary(r, primes_10000()), 2u);
}

TEST(IntervalCount, HypothesisUnmet)
{
    // q = 43; (.2426q, .25q) = (10.43, 10.75) holds no prime at all.
    const auto r = synthetic(100, Factorization({{2, 1}, {43, 1}}));
    EXPECT_FALSE(check_lemma2(r, Rational::from_decimal(".2426"), Rational::from_decimal(".25"), primes_10000()));
}

TEST(IntervalCount, HypothesisMet)
{
    // q = 97: (.3746q, .386q) = (36.3, 37.4) contains 37.
    // (sqrt(.386) q, 1.3746 q / 2) = (60.26.., 66.66..) contains 61; 61 does not divide.
    const auto r = synthetic(200, Factorization({{37, 1}, {97, 1}}));
    const auto c = check_lemma2(r, Rational::from_decimal(".3746"), Rational::from_decimal(".386"), primes_10000());
    ASSERT_TRUE(c);
    EXPECT_EQ(*c, 1u);
}

TEST(IntervalCount, ParameterOrdering)
{
    const auto r = g_of(table_10000(), 215);
    const auto& ps = primes_10000();
    EXPECT_THROW(check_lemma2(r, Rational(1, 2), Rational(1, 4), ps), domain_error);
    EXPECT_THROW(check_lemma2(r, Rational(0), Rational(1, 4), ps), domain_error);
    EXPECT_THROW(check_lemma2(r, Rational(1, 4), Rational(1), ps), domain_error);
}

TEST(IntervalCount, At215)
{
    const auto r = g_of(table_10000(), 215);
    ASSERT_EQ(r.largest_prime, 43u);
    const auto c = check_lemma2(r, Rational::from_decimal(".2426"), Rational::from_decimal(".25"), primes_10000());
    if (c) EXPECT_LE(*c, 1u);
}

TEST(IntervalCount, MatchesFloatingPointCount)
{
    // Same counts computed with doubles; no endpoint lands near an integer for these q.
    const auto& t = table_10000();
    const auto& ps = primes_10000();
    const auto spec = IntervalSpec::standard();
    for (std::uint64_t n = 5; n <= 3000; n += 7) {
        const auto r = g_of(t, n);
        const double q = static_cast<double>(*r.largest_prime);
        for (std::size_t i = 0; i < spec.size(); ++i) {
            const double a = spec.alpha(i).to_double(), b = spec.beta(i).to_double();
            bool hyp = false;
            for (const auto& pp : r.g_fact.parts())
                if (pp.prime > a * q && pp.prime < b * q) hyp = true;
            std::uint64_t missing = 0;
            for (std::uint64_t p : ps)
                if (p > std::sqrt(b) * q && p < (1 + a) * q / 2 && !r.g_fact.divisible_by(p)) ++missing;
            const auto c = check_lemma2(r, spec.alpha(i), spec.beta(i), ps);
            ASSERT_EQ(c.has_value(), hyp) << n << ' ' << i;
            if (c) ASSERT_EQ(*c, missing) << n << ' ' << i;
        }
    }
}

TEST(StructureScan, NoViolationsUpTo10000)
{
    const auto v = scan_lemmas(table_10000(), 5, 10'000, primes_10000(), IntervalSpec::standard());
    EXPECT_TRUE(v.empty()) << v.front().check << " n=" << v.front().n;
}

TEST(StructureScan, SyntheticCounterexampleIsDetected)
{
    const auto r = synthetic(5, Factorization({{5, 1}}));
    EXPECT_TRUE(find_lemma1_pattern(r.g_fact, primes_10000()));
    EXPECT_EQ(check_corollary(r, primes_10000()), 1u); // 2 < 2.5 missing
}
