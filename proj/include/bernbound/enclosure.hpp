#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>

#include "bernbound/big_rational.hpp"
#include "bernbound/errors.hpp"

namespace bernbound {

using Precision = mpfr_prec_t;

/// Adaptive precision schedule: start at initial_bits, multiply by growth
/// until a decision is reached or max_bits would be exceeded.
struct PrecisionPolicy {
  Precision initial_bits = 128;
  Precision max_bits = 16384;
  int growth = 2;

  void validate() const {
    if (initial_bits < MPFR_PREC_MIN || initial_bits > max_bits)
      throw std::invalid_argument("precision policy requires MPFR_PREC_MIN <= initial_bits <= max_bits");
    if (growth < 2) throw std::invalid_argument("precision policy growth must be >= 2");
  }
};

namespace detail {

// Owning wrapper around mpfr_t. Copies are exact (same precision).
class Mpfr {
 public:
  explicit Mpfr(Precision bits) {
    mpfr_init2(value_, bits);
    mpfr_set_zero(value_, 1);
  }
  Mpfr(const Mpfr& other) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  Mpfr(Mpfr&& other) noexcept {
    mpfr_init2(value_, MPFR_PREC_MIN);
    mpfr_swap(value_, other.value_);
  }
  Mpfr& operator=(const Mpfr& other) {
    if (this != &other) {
      mpfr_set_prec(value_, mpfr_get_prec(other.value_));
      mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
  }
  Mpfr& operator=(Mpfr&& other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
  }
  ~Mpfr() { mpfr_clear(value_); }

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  Precision precision() const { return mpfr_get_prec(value_); }

  /// Exact rational value of a finite number.
  BigRational to_rational() const {
    if (!mpfr_number_p(value_)) throw DomainError("non-finite enclosure endpoint");
    if (mpfr_zero_p(value_)) return BigRational(0);
    BigInt mantissa;
    const mpfr_exp_t exponent = mpfr_get_z_2exp(mantissa.get_mpz_t(), value_);
    BigRational q(mantissa);
    q *= pow2(exponent);
    return q;
  }

  int compare(const BigRational& q) const { return mpfr_cmp_q(value_, q.get_mpq_t()); }

 private:
  mpfr_t value_;
};

template <class Fn>
Mpfr rounded(Precision bits, mpfr_rnd_t rnd, Fn&& fn) {
  Mpfr r(bits);
  fn(r.get(), rnd);
  return r;
}

inline const Mpfr& min_of(const Mpfr& a, const Mpfr& b) { return mpfr_lessequal_p(a.get(), b.get()) ? a : b; }
inline const Mpfr& max_of(const Mpfr& a, const Mpfr& b) { return mpfr_greaterequal_p(a.get(), b.get()) ? a : b; }

inline std::string format_endpoint(const Mpfr& x, bool round_up, int digits) {
  char* buffer = nullptr;
  mpfr_asprintf(&buffer, round_up ? "%.*RUg" : "%.*RDg", digits, x.get());
  std::string s = buffer ? buffer : "";
  mpfr_free_str(buffer);
  return s;
}

}  // namespace detail

/// Closed interval [lo, hi] with dyadic endpoints guaranteed to contain an
/// exact real value. lo is always rounded toward -inf and hi toward +inf.
class RealEnclosure {
 public:
  RealEnclosure(const BigRational& value, Precision bits) : lo_(bits), hi_(bits) {
    mpfr_set_q(lo_.get(), value.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_.get(), value.get_mpq_t(), MPFR_RNDU);
  }

  RealEnclosure(long value, Precision bits) : RealEnclosure(BigRational(value), bits) {}

  static RealEnclosure from_bounds(detail::Mpfr lo, detail::Mpfr hi) {
    if (!mpfr_number_p(lo.get()) || !mpfr_number_p(hi.get()))
      throw DomainError("enclosure endpoint is not finite");
    if (mpfr_greater_p(lo.get(), hi.get())) throw std::logic_error("enclosure with lo > hi");
    return RealEnclosure(std::move(lo), std::move(hi));
  }

  const detail::Mpfr& lo() const { return lo_; }
  const detail::Mpfr& hi() const { return hi_; }
  Precision precision() const { return std::max(lo_.precision(), hi_.precision()); }

  BigRational lower() const { return lo_.to_rational(); }
  BigRational upper() const { return hi_.to_rational(); }
  BigRational width() const { return BigRational(upper() - lower()); }

  /// Upper bound on the width as a double; for diagnostics and thresholds.
  double width_upper() const {
    detail::Mpfr w(precision());
    mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
    return mpfr_get_d(w.get(), MPFR_RNDU);
  }

  double midpoint_double() const {
    return 0.5 * (mpfr_get_d(lo_.get(), MPFR_RNDN) + mpfr_get_d(hi_.get(), MPFR_RNDN));
  }

  bool contains(const BigRational& q) const { return lo_.compare(q) <= 0 && hi_.compare(q) >= 0; }
  bool contains(const RealEnclosure& other) const {
    return mpfr_lessequal_p(lo_.get(), other.lo_.get()) && mpfr_greaterequal_p(hi_.get(), other.hi_.get());
  }
  bool contains_zero() const { return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0; }
  bool is_positive() const { return mpfr_sgn(lo_.get()) > 0; }
  bool is_negative() const { return mpfr_sgn(hi_.get()) < 0; }
  bool is_point() const { return mpfr_equal_p(lo_.get(), hi_.get()); }

  std::string to_string(int digits = 20) const {
    return "[" + detail::format_endpoint(lo_, false, digits) + ", " + detail::format_endpoint(hi_, true, digits) + "]";
  }

 private:
  RealEnclosure(detail::Mpfr lo, detail::Mpfr hi) : lo_(std::move(lo)), hi_(std::move(hi)) {}

  detail::Mpfr lo_;
  detail::Mpfr hi_;
};

inline std::ostream& operator<<(std::ostream& os, const RealEnclosure& x) { return os << x.to_string(); }

namespace detail {

inline Precision joint_precision(const RealEnclosure& a, const RealEnclosure& b) {
  return std::max(a.precision(), b.precision());
}

// Applies a monotone-increasing unary MPFR function endpoint-wise.
template <class Fn>
RealEnclosure monotone_increasing(const RealEnclosure& x, Fn fn) {
  const Precision bits = x.precision();
  return RealEnclosure::from_bounds(rounded(bits, MPFR_RNDD, [&](mpfr_ptr r, mpfr_rnd_t m) { fn(r, x.lo().get(), m); }),
                                    rounded(bits, MPFR_RNDU, [&](mpfr_ptr r, mpfr_rnd_t m) { fn(r, x.hi().get(), m); }));
}

// Hull of fn(a_i, b_j) over the four endpoint combinations.
template <class Fn>
RealEnclosure corner_hull(const RealEnclosure& a, const RealEnclosure& b, Fn fn) {
  const Precision bits = joint_precision(a, b);
  const Mpfr* as[] = {&a.lo(), &a.hi()};
  const Mpfr* bs[] = {&b.lo(), &b.hi()};
  std::optional<Mpfr> lo, hi;
  for (const Mpfr* x : as) {
    for (const Mpfr* y : bs) {
      Mpfr down = rounded(bits, MPFR_RNDD, [&](mpfr_ptr r, mpfr_rnd_t m) { fn(r, x->get(), y->get(), m); });
      Mpfr up = rounded(bits, MPFR_RNDU, [&](mpfr_ptr r, mpfr_rnd_t m) { fn(r, x->get(), y->get(), m); });
      if (!lo || mpfr_less_p(down.get(), lo->get())) lo = std::move(down);
      if (!hi || mpfr_greater_p(up.get(), hi->get())) hi = std::move(up);
    }
  }
  return RealEnclosure::from_bounds(std::move(*lo), std::move(*hi));
}

}  // namespace detail

inline RealEnclosure operator+(const RealEnclosure& a, const RealEnclosure& b) {
  const Precision bits = detail::joint_precision(a, b);
  return RealEnclosure::from_bounds(
      detail::rounded(bits, MPFR_RNDD, [&](mpfr_ptr r, mpfr_rnd_t m) { mpfr_add(r, a.lo().get(), b.lo().get(), m); }),
      detail::rounded(bits, MPFR_RNDU, [&](mpfr_ptr r, mpfr_rnd_t m) { mpfr_add(r, a.hi().get(), b.hi().get(), m); }));
}

inline RealEnclosure operator-(const RealEnclosure& a, const RealEnclosure& b) {
  const Precision bits = detail::joint_precision(a, b);
  return RealEnclosure::from_bounds(
      detail::rounded(bits, MPFR_RNDD, [&](mpfr_ptr r, mpfr_rnd_t m) { mpfr_sub(r, a.lo().get(), b.hi().get(), m); }),
      detail::rounded(bits, MPFR_RNDU, [&](mpfr_ptr r, mpfr_rnd_t m) { mpfr_sub(r, a.hi().get(), b.lo().get(), m); }));
}

inline RealEnclosure operator-(const RealEnclosure& a) {
  const Precision bits = a.precision();
  return RealEnclosure::from_bounds(
      detail::rounded(bits, MPFR_RNDD, [&](mpfr_ptr r, mpfr_rnd_t m) { mpfr_neg(r, a.hi().get(), m); }),
      detail::rounded(bits, MPFR_RNDU, [&](mpfr_ptr r, mpfr_rnd_t m) { mpfr_neg(r, a.lo().get(), m); }));
}

inline RealEnclosure operator*(const RealEnclosure& a, const RealEnclosure& b) {
  return detail::corner_hull(a, b, [](mpfr_ptr r, mpfr_srcptr x, mpfr_srcptr y, mpfr_rnd_t m) { mpfr_mul(r, x, y, m); });
}

inline RealEnclosure operator/(const RealEnclosure& a, const RealEnclosure& b) {
  if (b.contains_zero()) throw DomainError("division by an enclosure containing zero");
  return detail::corner_hull(a, b, [](mpfr_ptr r, mpfr_srcptr x, mpfr_srcptr y, mpfr_rnd_t m) { mpfr_div(r, x, y, m); });
}

inline RealEnclosure operator+(const RealEnclosure& a, const BigRational& q) { return a + RealEnclosure(q, a.precision()); }
inline RealEnclosure operator+(const BigRational& q, const RealEnclosure& a) { return RealEnclosure(q, a.precision()) + a; }
inline RealEnclosure operator-(const RealEnclosure& a, const BigRational& q) { return a - RealEnclosure(q, a.precision()); }
inline RealEnclosure operator-(const BigRational& q, const RealEnclosure& a) { return RealEnclosure(q, a.precision()) - a; }
inline RealEnclosure operator*(const RealEnclosure& a, const BigRational& q) { return a * RealEnclosure(q, a.precision()); }
inline RealEnclosure operator*(const BigRational& q, const RealEnclosure& a) { return RealEnclosure(q, a.precision()) * a; }
inline RealEnclosure operator/(const RealEnclosure& a, const BigRational& q) { return a / RealEnclosure(q, a.precision()); }
inline RealEnclosure operator/(const BigRational& q, const RealEnclosure& a) { return RealEnclosure(q, a.precision()) / a; }

/// Integer power; negative exponents go through the reciprocal.
inline RealEnclosure pow_int(const RealEnclosure& x, long n) {
  const Precision bits = x.precision();
  if (n == 0) return RealEnclosure(1L, bits);
  if (n < 0) return RealEnclosure(1L, bits) / pow_int(x, -n);
  const auto e = static_cast<unsigned long>(n);
  auto down = [&](const detail::Mpfr& v) {
    return detail::rounded(bits, MPFR_RNDD, [&](mpfr_ptr r, mpfr_rnd_t m) { mpfr_pow_ui(r, v.get(), e, m); });
  };
  auto up = [&](const detail::Mpfr& v) {
    return detail::rounded(bits, MPFR_RNDU, [&](mpfr_ptr r, mpfr_rnd_t m) { mpfr_pow_ui(r, v.get(), e, m); });
  };
  const bool odd = (e % 2) == 1;
  if (odd || mpfr_sgn(x.lo().get()) >= 0) return RealEnclosure::from_bounds(down(x.lo()), up(x.hi()));
  if (mpfr_sgn(x.hi().get()) <= 0) return RealEnclosure::from_bounds(down(x.hi()), up(x.lo()));
  // Even power of an interval straddling zero.
  detail::Mpfr top = up(x.lo());
  detail::Mpfr other = up(x.hi());
  return RealEnclosure::from_bounds(detail::Mpfr(bits), detail::max_of(top, other));
}

inline RealEnclosure sqrt(const RealEnclosure& x) {
  if (mpfr_sgn(x.lo().get()) < 0) throw DomainError("square root of an enclosure with negative part");
  return detail::monotone_increasing(x, [](mpfr_ptr r, mpfr_srcptr v, mpfr_rnd_t m) { mpfr_sqrt(r, v, m); });
}

inline RealEnclosure exp(const RealEnclosure& x) {
  return detail::monotone_increasing(x, [](mpfr_ptr r, mpfr_srcptr v, mpfr_rnd_t m) { mpfr_exp(r, v, m); });
}

inline RealEnclosure log(const RealEnclosure& x) {
  if (mpfr_sgn(x.lo().get()) <= 0) throw DomainError("logarithm of an enclosure touching <= 0");
  return detail::monotone_increasing(x, [](mpfr_ptr r, mpfr_srcptr v, mpfr_rnd_t m) { mpfr_log(r, v, m); });
}

/// base^exponent for a positive base, as exp(exponent * log(base)).
inline RealEnclosure pow(const RealEnclosure& base, const RealEnclosure& exponent) {
  return exp(exponent * log(base));
}

inline RealEnclosure hull(const RealEnclosure& a, const RealEnclosure& b) {
  return RealEnclosure::from_bounds(detail::min_of(a.lo(), b.lo()), detail::max_of(a.hi(), b.hi()));
}

/// Widens x by radius r on both sides.
inline RealEnclosure widen(const RealEnclosure& x, const BigRational& radius) {
  return x + RealEnclosure::from_bounds(RealEnclosure(BigRational(-radius), x.precision()).lo(),
                                        RealEnclosure(radius, x.precision()).hi());
}

inline RealEnclosure pi_enclosure(Precision bits) {
  if (bits < 16) throw std::invalid_argument("pi_enclosure requires at least 16 bits");
  return RealEnclosure::from_bounds(
      detail::rounded(bits, MPFR_RNDD, [](mpfr_ptr r, mpfr_rnd_t m) { mpfr_const_pi(r, m); }),
      detail::rounded(bits, MPFR_RNDU, [](mpfr_ptr r, mpfr_rnd_t m) { mpfr_const_pi(r, m); }));
}

enum class Ordering { Less, Greater, Overlapping };

inline Ordering compare(const RealEnclosure& a, const RealEnclosure& b) {
  if (mpfr_less_p(a.hi().get(), b.lo().get())) return Ordering::Less;
  if (mpfr_greater_p(a.lo().get(), b.hi().get())) return Ordering::Greater;
  return Ordering::Overlapping;
}

inline const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::Less: return "Less";
    case Ordering::Greater: return "Greater";
    case Ordering::Overlapping: return "Overlapping";
  }
  return "?";
}

/// Outcome of refine_until. `decision` is empty when max_bits was reached
/// without a verdict; `bits` is the last precision tried and `enclosure`
/// the last value produced.
template <class T, class E>
struct Refinement {
  std::optional<T> decision;
  Precision bits;
  E enclosure;

  bool decided() const { return decision.has_value(); }
};

/// Re-evaluates `compute(bits)` at growing precision until `decide` returns
/// a value. `decide` maps the computed enclosure to std::optional<T>.
template <class Compute, class Decide>
auto refine_until(Compute&& compute, Decide&& decide, const PrecisionPolicy& policy) {
  using E = std::decay_t<std::invoke_result_t<Compute&, Precision>>;
  using T = typename std::decay_t<std::invoke_result_t<Decide&, const E&>>::value_type;
  policy.validate();
  Precision bits = policy.initial_bits;
  for (;;) {
    E value = compute(bits);
    if (auto d = decide(static_cast<const E&>(value))) return Refinement<T, E>{std::move(d), bits, std::move(value)};
    if (bits > policy.max_bits / policy.growth) return Refinement<T, E>{std::nullopt, bits, std::move(value)};
    bits *= policy.growth;
  }
}

}  // namespace bernbound
