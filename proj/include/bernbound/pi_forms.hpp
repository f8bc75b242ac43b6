#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "bernbound/big_rational.hpp"
#include "bernbound/enclosure.hpp"
#include "bernbound/errors.hpp"

namespace bernbound {

/// Finite sum  sum_e c_e * pi^e  with rational coefficients and integer
/// (possibly negative) exponents. Because pi is transcendental, two such
/// sums denote the same real number iff their coefficient maps agree.
class PiLaurent {
 public:
  PiLaurent() = default;

  static PiLaurent constant(const BigRational& c) { return monomial(c, 0); }
  static PiLaurent monomial(const BigRational& c, int exponent) {
    PiLaurent p;
    if (c != 0) p.terms_.emplace(exponent, c);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, BigRational>& terms() const { return terms_; }

  /// (c, e) when this is a single term c * pi^e (zero gives (0, 0)).
  std::optional<std::pair<BigRational, int>> as_monomial() const {
    if (terms_.empty()) return std::pair{BigRational(0), 0};
    if (terms_.size() != 1) return std::nullopt;
    return std::pair{terms_.begin()->second, terms_.begin()->first};
  }

  PiLaurent& operator+=(const PiLaurent& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
  }
  PiLaurent& operator-=(const PiLaurent& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, BigRational(-c));
    return *this;
  }
  friend PiLaurent operator+(PiLaurent a, const PiLaurent& b) { return a += b; }
  friend PiLaurent operator-(PiLaurent a, const PiLaurent& b) { return a -= b; }
  friend PiLaurent operator*(const PiLaurent& a, const PiLaurent& b) {
    PiLaurent r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, BigRational(ca * cb));
    return r;
  }
  friend PiLaurent operator*(const BigRational& s, const PiLaurent& a) { return constant(s) * a; }
  friend PiLaurent operator*(const PiLaurent& a, const BigRational& s) { return constant(s) * a; }

  bool operator==(const PiLaurent& other) const { return terms_ == other.terms_; }

  RealEnclosure evaluate(const RealEnclosure& pi) const {
    RealEnclosure sum(0L, pi.precision());
    for (const auto& [e, c] : terms_) sum = sum + c * pow_int(pi, e);
    return sum;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!s.empty()) s += " + ";
      s += "(" + it->second.get_str() + ")";
      if (it->first != 0) s += "*pi^" + std::to_string(it->first);
    }
    return s;
  }

 private:
  void add_term(int exponent, const BigRational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<int, BigRational> terms_;
};

/// Quotient of two PiLaurent sums. Exact form of every bound whose only
/// transcendental ingredient is pi.
class PiRational {
 public:
  PiRational(PiLaurent numerator = {}, PiLaurent denominator = PiLaurent::constant(1))
      : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw DomainError("PiRational with zero denominator");
    normalize();
  }
  PiRational(const BigRational& q) : PiRational(PiLaurent::constant(q)) {}

  static PiRational monomial(const BigRational& c, int exponent) { return PiRational(PiLaurent::monomial(c, exponent)); }

  const PiLaurent& numerator() const { return num_; }
  const PiLaurent& denominator() const { return den_; }

  friend PiRational operator*(const PiRational& a, const PiRational& b) {
    return PiRational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend PiRational operator/(const PiRational& a, const PiRational& b) {
    if (b.num_.is_zero()) throw DomainError("PiRational division by zero");
    return PiRational(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend PiRational operator+(const PiRational& a, const PiRational& b) {
    if (a.den_ == b.den_) return PiRational(a.num_ + b.num_, a.den_);
    return PiRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend PiRational operator-(const PiRational& a, const PiRational& b) {
    if (a.den_ == b.den_) return PiRational(a.num_ - b.num_, a.den_);
    return PiRational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }

  /// Exact equality: a.num * b.den - b.num * a.den vanishes identically.
  bool equals(const PiRational& other) const { return (num_ * other.den_ - other.num_ * den_).is_zero(); }

  /// (c, e) when numerator and denominator are both single terms.
  std::optional<std::pair<BigRational, int>> as_monomial() const {
    auto n = num_.as_monomial();
    auto d = den_.as_monomial();
    if (!n || !d) return std::nullopt;
    return std::pair{BigRational(n->first / d->first), n->second - d->second};
  }

  RealEnclosure evaluate(const RealEnclosure& pi) const { return num_.evaluate(pi) / den_.evaluate(pi); }
  RealEnclosure evaluate(Precision bits) const { return evaluate(pi_enclosure(bits)); }

  std::string to_string() const {
    if (den_ == PiLaurent::constant(1)) return num_.to_string();
    return "[" + num_.to_string() + "] / [" + den_.to_string() + "]";
  }

 private:
  // Folds monomial/monomial into a single monomial over 1.
  void normalize() {
    if (auto m = as_monomial()) {
      num_ = PiLaurent::monomial(m->first, m->second);
      den_ = PiLaurent::constant(1);
    }
  }

  PiLaurent num_;
  PiLaurent den_;
};

/// Orders a and b without numerics when possible: exact equality, or two
/// monomials with the same power of pi. Empty when only numerics can tell.
inline std::optional<std::strong_ordering> exact_compare(const PiRational& a, const PiRational& b) {
  if (a.equals(b)) return std::strong_ordering::equal;
  auto ma = a.as_monomial();
  auto mb = b.as_monomial();
  if (ma && mb && ma->second == mb->second) {
    const int c = cmp(ma->first, mb->first);
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (ma && mb && sgn(ma->first) != sgn(mb->first)) {
    // pi^e > 0, so differing coefficient signs decide.
    return sgn(ma->first) < sgn(mb->first) ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::nullopt;
}

}  // namespace bernbound
