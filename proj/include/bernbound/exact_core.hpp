#pragma once

#include <cstddef>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "bernbound/big_rational.hpp"
#include "bernbound/errors.hpp"
#include "bernbound/primes.hpp"

namespace bernbound {

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

/// Memoized B_0, B_1, ... with B_1 = -1/2. Values are computed once per
/// process from sum_{j=0}^{n} C(n+1, j) B_j = 0 and never recomputed.
/// Concurrent readers share the lock; extension takes it exclusively.
class BernoulliTable {
 public:
  static BernoulliTable& instance() {
    static BernoulliTable table;
    return table;
  }

  BigRational get(std::size_t n) {
    {
      std::shared_lock lock(mutex_);
      if (n < values_.size()) return values_[n];
    }
    std::unique_lock lock(mutex_);
    extend_to(n);
    return values_[n];
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return values_.size();
  }

 private:
  BernoulliTable() : values_{BigRational(1)} {}

  void extend_to(std::size_t n) {
    values_.reserve(n + 1);
    for (std::size_t i = values_.size(); i <= n; ++i) {
      BigRational sum = 0;
      for (std::size_t j = 0; j < i; ++j) {
        if (values_[j] == 0) continue;
        sum += BigRational(binomial(i + 1, j)) * values_[j];
      }
      values_.push_back(BigRational(-sum / BigRational(i + 1)));
    }
  }

  mutable std::shared_mutex mutex_;
  std::vector<BigRational> values_;
};

inline BigRational bernoulli(std::size_t n) { return BernoulliTable::instance().get(n); }

/// |B_{2k}| for k >= 1.
inline BigRational abs_bernoulli_even(long k) {
  if (k < 1) throw DomainError("abs_bernoulli_even requires k >= 1");
  return abs(bernoulli(2 * static_cast<std::size_t>(k)));
}

/// q_k with zeta(2k) = q_k * pi^{2k}, i.e. q_k = 2^{2k} |B_{2k}| / (2 (2k)!).
inline BigRational zeta_even_coefficient(long k) {
  if (k < 1) throw DomainError("zeta_even_coefficient requires k >= 1");
  BigRational q = pow2(2 * k) * abs_bernoulli_even(k) /
                  BigRational(2 * factorial(2 * static_cast<unsigned long>(k)));
  return q;
}

/// Product of the primes p with (p - 1) | 2k. By von Staudt-Clausen this is
/// the denominator of B_{2k}; computed without touching the Bernoulli table.
inline BigInt von_staudt_clausen_denominator(long k) {
  if (k < 1) throw DomainError("von_staudt_clausen_denominator requires k >= 1");
  const auto two_k = static_cast<std::uint64_t>(2 * k);
  BigInt product = 1;
  for (std::uint64_t d = 1; d <= two_k; ++d)
    if (two_k % d == 0 && is_prime_trial(d + 1)) product *= static_cast<unsigned long>(d + 1);
  return product;
}

}  // namespace bernbound
