#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bernbound/big_rational.hpp"
#include "bernbound/enclosure.hpp"
#include "bernbound/errors.hpp"
#include "bernbound/exact_core.hpp"
#include "bernbound/pi_forms.hpp"
#include "bernbound/primes.hpp"

namespace bernbound {

inline bool is_even_integer(const BigRational& x) { return x.get_den() == 1 && mpz_even_p(x.get_num_mpz_t()); }

/// zeta(2k) = q_k pi^{2k} exactly.
inline PiRational zeta_even_exact(long k) { return PiRational::monomial(zeta_even_coefficient(k), static_cast<int>(2 * k)); }

/// Odd-harmonic series lambda(2k) = (1 - 2^{-2k}) zeta(2k) exactly.
inline PiRational odd_zeta_even_exact(long k) {
  return PiRational::monomial(BigRational((1 - pow2(-2 * k)) * zeta_even_coefficient(k)), static_cast<int>(2 * k));
}

namespace detail {

// Chebyshev-accelerated alternating sum (Cohen, Rodriguez Villegas, Zagier):
// for a_k = (k+1)^{-x} = int_0^1 t^k w(t) dt with w >= 0,
//   eta(x) = (1/d) sum_{k<n} c_k a_k + err,   |err| <= eta(x) / d <= 1 / d,
// where d = T_n(3) and T_n is the Chebyshev polynomial.
struct EtaWeights {
  BigInt d;
  std::vector<BigRational> weights;  // c_k / d
};

inline std::shared_ptr<const EtaWeights> eta_weights(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, std::shared_ptr<const EtaWeights>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  BigInt t_prev = 1, t_cur = 3;
  for (std::size_t i = 1; i < n; ++i) {
    BigInt next = 6 * t_cur - t_prev;
    t_prev = std::move(t_cur);
    t_cur = std::move(next);
  }
  auto w = std::make_shared<EtaWeights>();
  w->d = t_cur;
  BigRational b = -1, c = BigRational(-t_cur);
  const long nn = static_cast<long>(n);
  for (long k = 0; k < nn; ++k) {
    c = b - c;
    w->weights.push_back(BigRational(c / BigRational(t_cur)));
    b = b * BigRational(2 * (k + nn) * (k - nn)) / BigRational((2 * k + 1) * (k + 1));
  }
  cache.emplace(n, w);
  return w;
}

// Smallest n with T_n(3) >= 2^{bits + 8}.
inline std::size_t eta_terms_for(Precision bits) {
  const BigInt target = pow_int(BigInt(2), static_cast<unsigned long>(bits + 8));
  BigInt t_prev = 1, t_cur = 3;
  std::size_t n = 1;
  while (t_cur < target) {
    BigInt next = 6 * t_cur - t_prev;
    t_prev = std::move(t_cur);
    t_cur = std::move(next);
    ++n;
  }
  return n;
}

inline RealEnclosure power_of(const BigRational& base, const BigRational& exponent, Precision bits) {
  if (exponent.get_den() == 1 && mpz_fits_slong_p(exponent.get_num_mpz_t()))
    return RealEnclosure(pow_int(base, mpz_get_si(exponent.get_num_mpz_t())), bits);
  return exp(RealEnclosure(exponent, bits) * log(RealEnclosure(base, bits)));
}

inline RealEnclosure power_of(const BigRational& base, const RealEnclosure& exponent) {
  return exp(exponent * log(RealEnclosure(base, exponent.precision())));
}

}  // namespace detail

/// Eta-series evaluation of zeta(x) for real x >= 2 (x given as an enclosure).
inline RealEnclosure zeta_real(const RealEnclosure& x, Precision bits) {
  if (x.lo().compare(BigRational(2)) < 0) throw DomainError("zeta_real is certified only for x >= 2");
  const std::size_t n = detail::eta_terms_for(bits);
  auto w = detail::eta_weights(n);
  RealEnclosure xb = x + RealEnclosure(0L, bits);
  RealEnclosure eta(0L, bits);
  for (std::size_t k = 0; k < n; ++k) {
    RealEnclosure term = exp(-(xb * log(RealEnclosure(static_cast<long>(k + 1), bits))));
    eta = eta + w->weights[k] * term;
  }
  eta = widen(eta, BigRational(1, 1) / BigRational(w->d));
  RealEnclosure one(1L, bits);
  return eta / (one - exp((one - xb) * log(RealEnclosure(2L, bits))));
}

/// zeta(x) for rational x >= 2; even integers go through the exact
/// Bernoulli route zeta(2k) = q_k pi^{2k}.
inline RealEnclosure zeta_real(const BigRational& x, Precision bits) {
  if (x < 2) throw DomainError("zeta_real is certified only for x >= 2");
  if (is_even_integer(x)) return zeta_even_exact(mpz_get_si(x.get_num_mpz_t()) / 2).evaluate(bits);
  return zeta_real(RealEnclosure(x, bits), bits);
}

namespace detail {

// prod_{n=1}^{m-1} p_n^x / (p_n^x - 1) over the leading odd primes.
inline BigRational leading_factor_product(std::size_t m, long two_k) {
  BigRational product = 1;
  if (m < 2) return product;
  for (std::uint64_t p : odd_primes(m - 1).primes) {
    BigInt pk = pow_int(BigInt(static_cast<unsigned long>(p)), static_cast<unsigned long>(two_k));
    product *= make_rational(pk, BigInt(pk - 1));
  }
  return product;
}

}  // namespace detail

/// Exact value at x = 2k of the critical-constant curve
///   c_m(x) = p_m^x [1 - prod_{n<m} p_n^x/(p_n^x - 1) / ((1 - 2^{-x}) zeta(x))],
/// the constant c for which p_m^{2k}/(p_m^{2k} - c) times the leading factors
/// reproduces |B_{2k}| exactly. m = 1 gives the curve with base 3.
inline PiRational critical_constant_exact(std::size_t m, long k) {
  if (m < 1) throw ParamError("critical constant requires m >= 1");
  if (k < 1) throw DomainError("critical constant requires k >= 1");
  const BigInt pm = pow_int(BigInt(static_cast<unsigned long>(odd_prime(m))), static_cast<unsigned long>(2 * k));
  const BigRational lambda_coeff = (1 - pow2(-2 * k)) * zeta_even_coefficient(k);
  const BigRational product = detail::leading_factor_product(m, 2 * k);
  PiLaurent value = PiLaurent::constant(BigRational(pm)) -
                    PiLaurent::monomial(BigRational(BigRational(pm) * product / lambda_coeff), static_cast<int>(-2 * k));
  return PiRational(value);
}

inline RealEnclosure critical_constant_general(std::size_t m, const RealEnclosure& x, Precision bits) {
  if (m < 1) throw ParamError("critical constant requires m >= 1");
  RealEnclosure xb = x + RealEnclosure(0L, bits);
  RealEnclosure one(1L, bits);
  RealEnclosure lambda = (one - exp(-(xb * log(RealEnclosure(2L, bits))))) * zeta_real(xb, bits);
  RealEnclosure product = one;
  if (m >= 2) {
    for (std::uint64_t p : odd_primes(m - 1).primes) {
      RealEnclosure px = detail::power_of(BigRational(static_cast<unsigned long>(p)), xb);
      product = product * (px / (px - one));
    }
  }
  RealEnclosure base = detail::power_of(BigRational(static_cast<unsigned long>(odd_prime(m))), xb);
  return base * (one - product / lambda);
}

inline RealEnclosure critical_constant_general(std::size_t m, const BigRational& x, Precision bits) {
  if (x < 2) throw DomainError("critical constant is certified only for x >= 2");
  if (is_even_integer(x)) return critical_constant_exact(m, mpz_get_si(x.get_num_mpz_t()) / 2).evaluate(bits);
  return critical_constant_general(m, RealEnclosure(x, bits), bits);
}

/// c(x) = 3^x [1 - 1/((1 - 2^{-x}) zeta(x))]; decreasing from beta at x = 2
/// towards alpha = 1.
inline RealEnclosure critical_constant(const BigRational& x, Precision bits) { return critical_constant_general(1, x, bits); }
inline RealEnclosure critical_constant(const RealEnclosure& x, Precision bits) { return critical_constant_general(1, x, bits); }

// ---------------------------------------------------------------------------
// Best constants.

/// beta = 9(1 - 8/pi^2).
inline PiLaurent beta_exact() { return PiLaurent::constant(9) - PiLaurent::monomial(72, -2); }

/// 2^delta with delta = 2 + ln(1 - 6/pi^2)/ln 2, i.e. 4(1 - 6/pi^2).
inline PiLaurent two_pow_delta_exact() { return PiLaurent::constant(4) - PiLaurent::monomial(24, -2); }

/// beta'_m = p_m^2 [1 - (8/pi^2) prod_{n<m} p_n^2/(p_n^2 - 1)]; m = 1 gives beta.
inline PiLaurent beta_prime_exact(std::size_t m) {
  if (m < 1) throw ParamError("beta_prime requires m >= 1");
  const BigRational p2 = BigRational(static_cast<unsigned long>(odd_prime(m))) * static_cast<unsigned long>(odd_prime(m));
  const BigRational product = detail::leading_factor_product(m, 2);
  return PiLaurent::constant(p2) - PiLaurent::monomial(BigRational(8 * p2 * product), -2);
}

inline RealEnclosure delta_enclosure(Precision bits) {
  RealEnclosure pi = pi_enclosure(bits);
  RealEnclosure one(1L, bits);
  return RealEnclosure(2L, bits) + log(one - BigRational(6) / (pi * pi)) / log(RealEnclosure(2L, bits));
}

struct Constants {
  BigRational alpha = 1;
  BigRational theta = 0;
  RealEnclosure beta;
  RealEnclosure delta;
  RealEnclosure two_pow_delta;                // exp(delta ln 2), numerically
  RealEnclosure beta_over_two_pow_delta_minus_one;
  std::map<std::size_t, RealEnclosure> beta_prime;  // m = 2..5
  bool ratio_exactly_three = false;           // symbolic check in pi^{-2}
};

inline Constants compute_constants(Precision bits) {
  if (bits < 64) throw std::invalid_argument("compute_constants requires at least 64 bits");
  RealEnclosure pi = pi_enclosure(bits);
  RealEnclosure one(1L, bits);
  RealEnclosure beta = BigRational(9) * (one - BigRational(8) / (pi * pi));
  RealEnclosure delta = delta_enclosure(bits);
  RealEnclosure two_pow_delta = exp(delta * log(RealEnclosure(2L, bits)));
  RealEnclosure ratio = beta / (two_pow_delta - one);
  std::map<std::size_t, RealEnclosure> primes;
  for (std::size_t m = 2; m <= 5; ++m) primes.emplace(m, beta_prime_exact(m).evaluate(pi));
  const bool exact_three = beta_exact() == BigRational(3) * (two_pow_delta_exact() - PiLaurent::constant(1));
  return Constants{1, 0, beta, delta, two_pow_delta, ratio, std::move(primes), exact_three};
}

// ---------------------------------------------------------------------------
// Certificates.

enum class MonotonicityStatus { CertifiedDecreasing, Undecided, Violated };

struct MonotonicityCertificate {
  MonotonicityStatus status = MonotonicityStatus::CertifiedDecreasing;
  std::size_t pairs_certified = 0;
  std::optional<std::pair<BigRational, BigRational>> offending_pair;
  Precision max_bits_used = 0;
};

/// Certifies c_m(x_i) > c_m(x_{i+1}) for all adjacent grid points by
/// enclosure comparison under adaptive precision.
inline MonotonicityCertificate monotonicity_certificate(std::span<const BigRational> grid, const PrecisionPolicy& policy,
                                                        std::size_t m = 1) {
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] < 2) throw DomainError("monotonicity grid must lie in x >= 2");
    if (i > 0 && grid[i] < grid[i - 1]) throw std::invalid_argument("monotonicity grid must be ascending");
  }
  MonotonicityCertificate cert;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    auto outcome = refine_until(
        [&](Precision bits) {
          return std::pair{critical_constant_general(m, grid[i], bits), critical_constant_general(m, grid[i + 1], bits)};
        },
        [](const std::pair<RealEnclosure, RealEnclosure>& v) -> std::optional<bool> {
          switch (compare(v.first, v.second)) {
            case Ordering::Greater: return true;
            case Ordering::Less: return false;
            case Ordering::Overlapping: return std::nullopt;
          }
          return std::nullopt;
        },
        policy);
    cert.max_bits_used = std::max(cert.max_bits_used, outcome.bits);
    if (!outcome.decided() || !*outcome.decision) {
      cert.status = outcome.decided() ? MonotonicityStatus::Violated : MonotonicityStatus::Undecided;
      cert.offending_pair = std::pair{grid[i], grid[i + 1]};
      return cert;
    }
    ++cert.pairs_certified;
  }
  return cert;
}

/// Evenly spaced grid first, first + step, ..., up to and including last.
inline std::vector<BigRational> make_grid(const BigRational& first, const BigRational& last, const BigRational& step) {
  if (step <= 0) throw std::invalid_argument("grid step must be positive");
  std::vector<BigRational> grid;
  for (BigRational x = first; x <= last; x += step) grid.push_back(x);
  return grid;
}

/// For each of the first m_terms odd primes p, whether
///   1/p^x - (ln p / ln 3) / (p^x - 1) < 0
/// is certified.
inline std::vector<bool> termwise_negativity_check(const BigRational& x, std::size_t m_terms,
                                                   const PrecisionPolicy& policy = {}) {
  if (x < 2) throw DomainError("termwise check requires x >= 2");
  std::vector<bool> result;
  for (std::uint64_t p : odd_primes(m_terms).primes) {
    const BigRational base(static_cast<unsigned long>(p));
    auto outcome = refine_until(
        [&](Precision bits) {
          RealEnclosure px = detail::power_of(base, x, bits);
          RealEnclosure one(1L, bits);
          RealEnclosure ratio = log(RealEnclosure(base, bits)) / log(RealEnclosure(3L, bits));
          return one / px - ratio / (px - one);
        },
        [](const RealEnclosure& term) -> std::optional<bool> {
          if (term.is_negative()) return true;
          if (term.is_positive()) return false;
          return std::nullopt;
        },
        policy);
    result.push_back(outcome.decided() && *outcome.decision);
  }
  return result;
}

/// lambda(x) - 1 - sum_{n<=M} p_n^{-x} over odd primes, split into the odd
/// composite contribution below p_M and a bound on the odd tail beyond p_M.
struct OddPrimeSumResidual {
  RealEnclosure residual;
  RealEnclosure odd_composite_sum;  // sum of j^{-x}, j odd composite, j < p_M
  RealEnclosure odd_tail_bound;     // >= sum of j^{-x}, j odd, j > p_M
};

inline OddPrimeSumResidual odd_prime_sum_residual(const BigRational& x, std::size_t prime_count, Precision bits) {
  if (x < 2) throw DomainError("odd_prime_sum_residual requires x >= 2");
  if (prime_count < 1) throw ParamError("odd_prime_sum_residual requires at least one prime");
  RealEnclosure one(1L, bits);
  RealEnclosure lambda = is_even_integer(x)
                             ? odd_zeta_even_exact(mpz_get_si(x.get_num_mpz_t()) / 2).evaluate(bits)
                             : (one - detail::power_of(2, -x, bits)) * zeta_real(x, bits);
  const auto primes = odd_primes(prime_count).primes;
  RealEnclosure prime_sum(0L, bits), composite_sum(0L, bits);
  for (std::uint64_t j = 3; j <= primes.back(); j += 2) {
    RealEnclosure term = detail::power_of(BigRational(static_cast<unsigned long>(j)), -x, bits);
    if (is_prime_trial(j))
      prime_sum = prime_sum + term;
    else
      composite_sum = composite_sum + term;
  }
  // sum_{odd j >= P+2} j^{-x} <= (1/2) int_P^inf t^{-x} dt = P^{1-x} / (2(x-1)).
  const BigRational last(static_cast<unsigned long>(primes.back()));
  RealEnclosure tail = detail::power_of(last, 1 - x, bits) / RealEnclosure(BigRational(2 * (x - 1)), bits);
  return {lambda - one - prime_sum, composite_sum, tail};
}

}  // namespace bernbound
