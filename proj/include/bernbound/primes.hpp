#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <mutex>
#include <shared_mutex>
#include <vector>

namespace bernbound {

/// First few primes, either all primes (2, 3, 5, ...) or only the odd ones
/// (3, 5, 7, ...). Always strictly ascending.
struct PrimeList {
  bool include_two = false;
  std::vector<std::uint64_t> primes;

  std::size_t size() const { return primes.size(); }
  std::uint64_t operator[](std::size_t i) const { return primes[i]; }
  bool operator==(const PrimeList&) const = default;
};

/// Primality by trial division; used as an oracle independent of the sieve.
constexpr bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

/// Process-wide incremental sieve of Eratosthenes. The sieved range doubles
/// on demand; each extension only sieves the new segment.
class PrimeSieve {
 public:
  static PrimeSieve& instance() {
    static PrimeSieve sieve;
    return sieve;
  }

  /// The first `count` primes starting at 2.
  std::vector<std::uint64_t> first(std::size_t count) {
    {
      std::shared_lock lock(mutex_);
      if (primes_.size() >= count)
        return {primes_.begin(), primes_.begin() + static_cast<std::ptrdiff_t>(count)};
    }
    std::unique_lock lock(mutex_);
    while (primes_.size() < count) extend(limit_ * 2);
    return {primes_.begin(), primes_.begin() + static_cast<std::ptrdiff_t>(count)};
  }

  /// Zero-based: nth(0) == 2, nth(1) == 3.
  std::uint64_t nth(std::size_t index) {
    {
      std::shared_lock lock(mutex_);
      if (index < primes_.size()) return primes_[index];
    }
    return first(index + 1).back();
  }

  std::uint64_t sieved_limit() const {
    std::shared_lock lock(mutex_);
    return limit_;
  }

 private:
  PrimeSieve() {
    primes_ = {2, 3, 5, 7};
    limit_ = 8;
    while (limit_ < 1024) extend(std::min<std::uint64_t>(limit_ * limit_, 1024));
  }

  // Sieves [limit_, new_limit). Requires new_limit <= limit_^2 so every
  // prime needed for crossing out is already known.
  void extend(std::uint64_t new_limit) {
    const std::uint64_t base = limit_;
    std::vector<bool> composite(new_limit - base, false);
    for (std::uint64_t p : primes_) {
      if (p * p >= new_limit) break;
      std::uint64_t start = std::max(p * p, (base + p - 1) / p * p);
      for (std::uint64_t j = start; j < new_limit; j += p) composite[j - base] = true;
    }
    for (std::uint64_t n = base; n < new_limit; ++n)
      if (!composite[n - base]) primes_.push_back(n);
    limit_ = new_limit;
  }

  mutable std::shared_mutex mutex_;
  std::vector<std::uint64_t> primes_;
  std::uint64_t limit_ = 0;
};

/// First m odd primes p_1 = 3, p_2 = 5, ...
inline PrimeList odd_primes(std::size_t m) {
  auto all = PrimeSieve::instance().first(m + 1);
  return {false, {all.begin() + 1, all.end()}};
}

/// First m_plus_one primes starting with p_0 = 2.
inline PrimeList all_primes(std::size_t m_plus_one) {
  return {true, PrimeSieve::instance().first(m_plus_one)};
}

/// One-based odd prime: odd_prime(1) == 3.
inline std::uint64_t odd_prime(std::size_t n) { return PrimeSieve::instance().nth(n); }

}  // namespace bernbound
