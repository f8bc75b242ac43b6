#include <gtest/gtest.h>

#include "bernbound/pi_forms.hpp"

using namespace bernbound;

TEST(PiLaurent, ArithmeticCancelsExactly) {
  const PiLaurent a = PiLaurent::constant(9) - PiLaurent::monomial(72, -2);
  const PiLaurent b = PiLaurent::monomial(72, -2);
  EXPECT_EQ(a + b, PiLaurent::constant(9));
  EXPECT_TRUE((a - a).is_zero());
  const PiLaurent sq = a * a;
  EXPECT_EQ(sq.terms().size(), 3u);
  EXPECT_EQ(sq.terms().at(-4), BigRational(5184));
  EXPECT_EQ(sq.terms().at(-2), BigRational(-1296));
  EXPECT_EQ(sq.terms().at(0), BigRational(81));
}

TEST(PiLaurent, MonomialDetection) {
  EXPECT_TRUE(PiLaurent::monomial(3, 4).as_monomial().has_value());
  EXPECT_FALSE((PiLaurent::constant(1) + PiLaurent::monomial(1, 1)).as_monomial().has_value());
  EXPECT_TRUE(PiLaurent::monomial(0, 7).is_zero());
}

TEST(PiLaurent, EvaluateContainsReference) {
  // 9 - 72/pi^2 = 1.70487477775...
  const PiLaurent beta = PiLaurent::constant(9) - PiLaurent::monomial(72, -2);
  const RealEnclosure v = beta.evaluate(pi_enclosure(128));
  EXPECT_GT(v.lower(), BigRational("17048747777/10000000000"));
  EXPECT_LT(v.upper(), BigRational("17048747778/10000000000"));
}

TEST(PiRational, NormalizesMonomialQuotient) {
  const PiRational q(PiLaurent::monomial(6, 4), PiLaurent::monomial(3, 1));
  auto m = q.as_monomial();
  ASSERT_TRUE(m);
  EXPECT_EQ(m->first, 2);
  EXPECT_EQ(m->second, 3);
  EXPECT_EQ(q.denominator(), PiLaurent::constant(1));
}

TEST(PiRational, EqualityByCrossMultiplication) {
  // (pi^2 - 1) / (pi - 1) == pi + 1
  const PiRational lhs(PiLaurent::monomial(1, 2) - PiLaurent::constant(1), PiLaurent::monomial(1, 1) - PiLaurent::constant(1));
  const PiRational rhs(PiLaurent::monomial(1, 1) + PiLaurent::constant(1));
  EXPECT_TRUE(lhs.equals(rhs));
  EXPECT_FALSE(lhs.equals(PiRational(PiLaurent::monomial(1, 1))));
}

TEST(PiRational, ArithmeticRoundTrip) {
  const PiRational a(PiLaurent::constant(2) + PiLaurent::monomial(1, -2));
  const PiRational b = PiRational::monomial(BigRational(3, 5), 2);
  EXPECT_TRUE(((a * b) / b).equals(a));
  EXPECT_TRUE(((a + b) - b).equals(a));
  EXPECT_THROW(a / PiRational(BigRational(0)), DomainError);
  EXPECT_THROW(PiRational(PiLaurent::constant(1), PiLaurent{}), DomainError);
}

TEST(PiRational, EvaluateMatchesParts) {
  const PiRational r(PiLaurent::constant(4) - PiLaurent::monomial(24, -2), PiLaurent::monomial(1, 1));
  const RealEnclosure pi = pi_enclosure(200);
  const RealEnclosure direct = (RealEnclosure(4L, 200) - BigRational(24) / (pi * pi)) / pi;
  const RealEnclosure viaform = r.evaluate(pi);
  EXPECT_NE(compare(direct, viaform), Ordering::Less);
  EXPECT_NE(compare(direct, viaform), Ordering::Greater);
  EXPECT_LT(viaform.width_upper(), 1e-55);
}

TEST(ExactCompare, DecidesWithoutNumerics) {
  const PiRational a = PiRational::monomial(BigRational(1, 3), 4);
  const PiRational b = PiRational::monomial(BigRational(1, 2), 4);
  EXPECT_EQ(exact_compare(a, b), std::strong_ordering::less);
  EXPECT_EQ(exact_compare(b, a), std::strong_ordering::greater);
  EXPECT_EQ(exact_compare(a, a), std::strong_ordering::equal);
  EXPECT_EQ(exact_compare(PiRational::monomial(-1, 2), PiRational::monomial(1, -6)), std::strong_ordering::less);
  // Different powers of pi with equal signs need numerics.
  EXPECT_FALSE(exact_compare(PiRational::monomial(1, 2), PiRational::monomial(10, 0)).has_value());
}

TEST(PiLaurent, ToString) {
  EXPECT_EQ((PiLaurent::constant(9) - PiLaurent::monomial(72, -2)).to_string(), "(9) + (-72)*pi^-2");
  EXPECT_EQ(PiLaurent{}.to_string(), "0");
}
