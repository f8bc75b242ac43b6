#include <gtest/gtest.h>

#include "bernbound/asymptotic.hpp"
#include "oracles.hpp"

using namespace bernbound;

namespace {

bool overlaps(const RealEnclosure& e, const oracle::Bracket& b) { return e.lower() <= b.hi && b.lo <= e.upper(); }

bool inside(const RealEnclosure& e, const char* lo, const char* hi) {
  return e.lower() > BigRational(lo) && e.upper() < BigRational(hi);
}

}  // namespace

TEST(Zeta, OddIntegersAgainstPlainEtaSeries) {
  for (long s : {3, 5, 7}) {
    const RealEnclosure z = zeta_real(BigRational(s), 128);
    EXPECT_TRUE(overlaps(z, oracle::zeta_plain(s, 3000))) << s;
    EXPECT_LT(z.width_upper(), 1e-30) << s;
  }
}

TEST(Zeta, NumericRouteMatchesExactEvenValues) {
  for (long k = 1; k <= 6; ++k) {
    const RealEnclosure numeric = zeta_real(RealEnclosure(2 * k, 192), 192);
    const RealEnclosure exact = zeta_even_exact(k).evaluate(192);
    EXPECT_EQ(compare(numeric, exact), Ordering::Overlapping) << k;
    EXPECT_LT(numeric.width_upper(), 1e-45) << k;
  }
}

TEST(Zeta, NonIntegerArguments) {
  // zeta(5/2) = 1.34148725725091717975...
  EXPECT_TRUE(inside(zeta_real(BigRational(5, 2), 128), "134148725725091717975/100000000000000000000",
                     "134148725725091717976/100000000000000000000"));
  // zeta(7/3) = 1.41515560944598302461...
  EXPECT_TRUE(inside(zeta_real(BigRational(7, 3), 256), "141515560944598302461/100000000000000000000",
                     "141515560944598302462/100000000000000000000"));
}

TEST(Zeta, RejectsArgumentsBelowTwo) {
  EXPECT_THROW(zeta_real(BigRational(3, 2), 128), DomainError);
  EXPECT_THROW(critical_constant(BigRational(1), 128), DomainError);
}

TEST(CriticalConstant, StartsAtBetaAndPrimeVariants) {
  EXPECT_TRUE(critical_constant_exact(1, 1).equals(PiRational(beta_exact())));
  for (std::size_t m = 1; m <= 6; ++m) EXPECT_TRUE(critical_constant_exact(m, 1).equals(PiRational(beta_prime_exact(m)))) << m;
}

TEST(CriticalConstant, KnownValues) {
  // c(5/2) = 1.47287073564592892668..., c(3) = 1.32971536036674096634...
  EXPECT_TRUE(inside(critical_constant(BigRational(5, 2), 128), "147287073564592892668/100000000000000000000",
                     "147287073564592892669/100000000000000000000"));
  EXPECT_TRUE(inside(critical_constant(BigRational(3), 128), "132971536036674096634/100000000000000000000",
                     "132971536036674096635/100000000000000000000"));
  // Approaches 1 from above: c(40) - 1 = 1.3367e-9.
  const RealEnclosure far = critical_constant(BigRational(40), 256);
  EXPECT_TRUE(inside(far, "10000000013367/10000000000000", "10000000013368/10000000000000"));
}

TEST(CriticalConstant, ExactAndNumericRoutesAgree) {
  for (long k = 1; k <= 5; ++k) {
    for (std::size_t m = 1; m <= 3; ++m) {
      const RealEnclosure numeric = critical_constant_general(m, RealEnclosure(2 * k, 256), 256);
      const RealEnclosure exact = critical_constant_exact(m, k).evaluate(256);
      EXPECT_EQ(compare(numeric, exact), Ordering::Overlapping) << m << "," << k;
    }
  }
}

TEST(Constants, BestConstantValues) {
  const Constants c = compute_constants(256);
  EXPECT_EQ(c.alpha, 1);
  EXPECT_EQ(c.theta, 0);
  EXPECT_TRUE(inside(c.beta, "1704874777751/1000000000000", "1704874777752/1000000000000"));
  EXPECT_TRUE(inside(c.delta, "649193824799/1000000000000", "649193824800/1000000000000"));
  EXPECT_TRUE(c.beta_over_two_pow_delta_minus_one.contains(BigRational(3)));
  EXPECT_LT(c.beta_over_two_pow_delta_minus_one.width_upper(), 1e-60);
  EXPECT_TRUE(c.ratio_exactly_three);
  EXPECT_EQ(compare(c.two_pow_delta, two_pow_delta_exact().evaluate(pi_enclosure(256))), Ordering::Overlapping);
  EXPECT_TRUE(inside(c.beta_prime.at(2), "2202733680474/1000000000000", "2202733680475/1000000000000"));
  EXPECT_EQ(c.beta_prime.size(), 4u);
  EXPECT_THROW(compute_constants(32), std::invalid_argument);
}

TEST(Constants, BetaPrimeExceedsOne) {
  // Not monotone in m (beta'_7 < beta'_6), but always above alpha' = 1.
  const RealEnclosure pi = pi_enclosure(128);
  for (std::size_t m = 1; m <= 30; ++m) EXPECT_GT(beta_prime_exact(m).evaluate(pi).lower(), 1) << m;
  EXPECT_EQ(compare(beta_prime_exact(7).evaluate(pi), beta_prime_exact(6).evaluate(pi)), Ordering::Less);
}

TEST(Monotonicity, GridCertificate) {
  const auto grid = make_grid(2, 40, BigRational(1, 4));
  EXPECT_EQ(grid.size(), 153u);
  const auto small = make_grid(2, 6, BigRational(1, 2));
  const auto cert = monotonicity_certificate(small, PrecisionPolicy{});
  EXPECT_EQ(cert.status, MonotonicityStatus::CertifiedDecreasing);
  EXPECT_EQ(cert.pairs_certified, small.size() - 1);
  const std::vector<BigRational> descending{BigRational(3), BigRational(2)};
  EXPECT_THROW(monotonicity_certificate(descending, PrecisionPolicy{}), std::invalid_argument);
}

TEST(Monotonicity, RepeatedPointIsUndecided) {
  const std::vector<BigRational> grid{BigRational(5, 2), BigRational(5, 2)};
  const auto cert = monotonicity_certificate(grid, PrecisionPolicy{64, 256, 2});
  EXPECT_EQ(cert.status, MonotonicityStatus::Undecided);
  ASSERT_TRUE(cert.offending_pair);
  EXPECT_EQ(cert.offending_pair->first, BigRational(5, 2));
}

TEST(Termwise, NegativeForLeadingPrimes) {
  for (const BigRational& x : {BigRational(2), BigRational(3), BigRational(7, 2)}) {
    const auto flags = termwise_negativity_check(x, 20);
    ASSERT_EQ(flags.size(), 20u);
    for (bool f : flags) EXPECT_TRUE(f);
  }
}

TEST(OddPrimeResidual, PrimesAloneDoNotExhaustLambda) {
  // lambda(x) - 1 - sum over the first M odd primes = odd composites below
  // p_M plus the odd tail beyond p_M, which is strictly positive.
  for (const BigRational& x : {BigRational(2), BigRational(3), BigRational(5, 2)}) {
    const auto r = odd_prime_sum_residual(x, 50, 192);
    EXPECT_EQ(compare(r.residual, r.odd_composite_sum), Ordering::Greater);
    EXPECT_NE(compare(r.residual, r.odd_composite_sum + r.odd_tail_bound), Ordering::Greater);
    EXPECT_TRUE(r.residual.is_positive());
  }
}
