#include <gtest/gtest.h>

#include <thread>

#include "bernbound/primes.hpp"

using namespace bernbound;

TEST(Primes, FirstOddPrimes) {
  const PrimeList p = odd_primes(10);
  EXPECT_FALSE(p.include_two);
  EXPECT_EQ(p.primes, (std::vector<std::uint64_t>{3, 5, 7, 11, 13, 17, 19, 23, 29, 31}));
  EXPECT_TRUE(odd_primes(0).primes.empty());
}

TEST(Primes, AllPrimesStartWithTwo) {
  const PrimeList p = all_primes(5);
  EXPECT_TRUE(p.include_two);
  EXPECT_EQ(p.primes, (std::vector<std::uint64_t>{2, 3, 5, 7, 11}));
}

TEST(Primes, OneBasedOddIndex) {
  EXPECT_EQ(odd_prime(1), 3u);
  EXPECT_EQ(odd_prime(2), 5u);
  EXPECT_EQ(odd_prime(50), 233u);
  EXPECT_EQ(PrimeSieve::instance().nth(0), 2u);
}

TEST(Primes, SieveAgreesWithTrialDivision) {
  // 20000 primes forces several doublings past the initial range.
  const auto primes = PrimeSieve::instance().first(20000);
  EXPECT_EQ(primes.back(), 224737u);
  std::size_t idx = 0;
  for (std::uint64_t n = 2; n <= primes.back(); ++n) {
    if (!is_prime_trial(n)) continue;
    ASSERT_EQ(primes[idx], n);
    ++idx;
  }
  EXPECT_EQ(idx, primes.size());
  EXPECT_GE(PrimeSieve::instance().sieved_limit(), primes.back());
}

TEST(Primes, TrialDivisionEdgeCases) {
  static_assert(!is_prime_trial(0) && !is_prime_trial(1) && is_prime_trial(2) && !is_prime_trial(9));
  EXPECT_TRUE(is_prime_trial(1000003));
  EXPECT_FALSE(is_prime_trial(1000001));
}

TEST(Primes, ConcurrentGrowth) {
  std::vector<std::thread> pool;
  std::vector<std::uint64_t> got(6);
  for (int t = 0; t < 6; ++t) pool.emplace_back([t, &got] { got[t] = odd_prime(30000 + 1000 * t); });
  for (auto& th : pool) th.join();
  for (int t = 0; t < 6; ++t) EXPECT_EQ(got[t], odd_prime(30000 + 1000 * t));
  EXPECT_TRUE(is_prime_trial(got[5]));
}
