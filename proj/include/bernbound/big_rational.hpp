#pragma once

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bernbound {

// GMP keeps mpq_class canonical (reduced, positive denominator) after every
// arithmetic operation; constructors from num/den pairs need canonicalize().
using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

inline BigInt pow_int(const BigInt& base, unsigned long exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

/// base^exponent; negative exponents invert (base must then be non-zero).
inline BigRational pow_int(const BigRational& base, long exponent) {
  const unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                       : static_cast<unsigned long>(exponent);
  BigInt num = pow_int(BigInt(base.get_num()), e);
  BigInt den = pow_int(BigInt(base.get_den()), e);
  if (exponent < 0) std::swap(num, den);
  return make_rational(num, den);
}

inline BigRational pow2(long exponent) { return pow_int(BigRational(2), exponent); }

inline std::string to_string(const BigRational& q) { return q.get_str(); }
inline std::string to_string(const BigInt& z) { return z.get_str(); }

/// Parses "p", "p/q", or a plain decimal such as "-3.25" into an exact rational.
inline BigRational parse_rational(std::string_view text) {
  auto fail = [&] { throw std::invalid_argument("not a rational number: '" + std::string(text) + "'"); };
  if (text.empty()) fail();
  auto all_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  bool negative = false;
  std::string_view body = text;
  if (body.front() == '-' || body.front() == '+') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  BigRational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash), den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) fail();
    BigInt d{std::string(den)};
    if (d == 0) fail();
    value = make_rational(BigInt{std::string(num)}, d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot), frac = body.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)))
      fail();
    std::string digits = std::string(whole) + std::string(frac);
    value = make_rational(BigInt{digits}, pow_int(BigInt(10), frac.size()));
  } else {
    if (!all_digits(body)) fail();
    value = BigRational(BigInt{std::string(body)});
  }
  return negative ? BigRational(-value) : value;
}

}  // namespace bernbound
