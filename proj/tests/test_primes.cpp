#include <gtest/gtest.h>

#include <random>

#include "rings/primes.hpp"

using namespace rings;

namespace {

bool trial_division_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<Integer, unsigned>> trial_factor(std::uint64_t n) {
    std::vector<std::pair<Integer, unsigned>> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        unsigned e = 0;
        while (n % d == 0) { n /= d; ++e; }
        if (e) out.emplace_back(from_u64(d), e);
    }
    if (n > 1) out.emplace_back(from_u64(n), 1);
    return out;
}

}  // namespace

TEST(Primes, KnownValues) {
    EXPECT_TRUE(is_prime(std::uint64_t(1000003)));
    EXPECT_TRUE(is_prime(std::uint64_t(2147483647)));
    EXPECT_FALSE(is_prime(std::uint64_t(0)));
    EXPECT_FALSE(is_prime(std::uint64_t(1)));
    EXPECT_TRUE(is_prime(std::uint64_t(2)));
    EXPECT_TRUE(is_prime(Integer(1000003)));
    EXPECT_FALSE(is_prime(std::uint64_t(3215031751ull)));  // strong pseudoprime to bases 2,3,5,7
    EXPECT_TRUE(is_prime(std::uint64_t(18446744073709551557ull)));
    EXPECT_TRUE(is_prime(Integer("170141183460469231731687303715884105727")));
    EXPECT_FALSE(is_prime(Integer("170141183460469231731687303715884105729")));
}

TEST(Primes, AgreesWithTrialDivisionBelowMillion) {
    auto sieve = primes_up_to(1000000);
    EXPECT_EQ(sieve.size(), 78498u);
    std::size_t idx = 0;
    std::size_t count = 0;
    for (std::uint64_t n = 0; n < 1000000; ++n) {
        bool p = is_prime(n);
        bool in_sieve = idx < sieve.size() && sieve[idx] == n;
        ASSERT_EQ(p, in_sieve) << n;
        if (in_sieve) ++idx;
        if (p) ++count;
    }
    EXPECT_EQ(count, 78498u);
}

TEST(Primes, TrialDivisionCountBelowMillion) {
    std::size_t count = 0;
    for (std::uint64_t n = 0; n < 1000000; ++n) count += trial_division_prime(n);
    EXPECT_EQ(count, primes_up_to(1000000).size());
}

TEST(Primes, SieveSmall) {
    EXPECT_EQ(primes_up_to(10), (std::vector<std::uint64_t>{2, 3, 5, 7}));
    EXPECT_EQ(primes_up_to(2), (std::vector<std::uint64_t>{2}));
}

TEST(Primes, NextPrime) {
    EXPECT_EQ(next_prime(std::uint64_t(524280)), 524287u);
    EXPECT_EQ(next_prime(std::uint64_t(2)), 3u);
    EXPECT_EQ(next_prime(Integer(524280)), 524287);
    auto sieve = primes_up_to(1000100);
    for (std::size_t i = 0; i + 1 < sieve.size() && sieve[i] < 1000000; ++i)
        ASSERT_EQ(next_prime(sieve[i]), sieve[i + 1]);
    for (auto p : sieve) {
        if (p >= 100000) break;
        ASSERT_EQ(next_prime(p - 1), p);
    }
    Integer big = Integer(1) << 80;
    Integer q = next_prime(big);
    EXPECT_TRUE(is_prime(q));
    for (Integer c = big + 1; c < q; ++c) EXPECT_FALSE(is_prime(c));
}

TEST(Primes, FactorInteger) {
    auto f = factor_integer(2341352);
    std::vector<std::pair<Integer, unsigned>> expect = {{2, 3}, {13, 1}, {47, 1}, {479, 1}};
    EXPECT_EQ(f, expect);
    EXPECT_EQ(factor_integer(1024), (std::vector<std::pair<Integer, unsigned>>{{2, 10}}));
    EXPECT_THROW(factor_integer(1), std::invalid_argument);
}

TEST(Primes, FactorRandom48Bit) {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 100; ++i) {
        std::uint64_t n = (rng() >> 16) | 2;
        auto f = factor_integer(from_u64(n));
        EXPECT_EQ(f, trial_factor(n)) << n;
    }
}

TEST(Primes, FactorLargeSemiprimes) {
    Integer p = next_prime(Integer(1) << 40), q = next_prime(Integer(3) << 41);
    auto f = factor_integer(p * q * q);
    ASSERT_EQ(f.size(), 2u);
    EXPECT_EQ(f[0], std::make_pair(p, 1u));
    EXPECT_EQ(f[1], std::make_pair(q, 2u));
    Integer r = next_prime(Integer(1) << 70), s = next_prime(Integer(1) << 33);
    auto g = factor_integer(r * s);
    Integer prod = 1;
    for (auto& [pr, e] : g) {
        EXPECT_TRUE(is_prime(pr));
        prod *= pow_ui(pr, e);
    }
    EXPECT_EQ(prod, r * s);
}
