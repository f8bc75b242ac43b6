#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bernbound/asymptotic.hpp"
#include "bernbound/big_rational.hpp"
#include "bernbound/enclosure.hpp"
#include "bernbound/errors.hpp"
#include "bernbound/exact_core.hpp"
#include "bernbound/pi_forms.hpp"
#include "bernbound/primes.hpp"

namespace bernbound {

// Shorthand used in the formulas below:
//   S_k = 2 (2k)! / (2 pi)^{2k}               so |B_{2k}| = S_k zeta(2k)
//   T_k = 2 (2k)! / (pi^{2k} (2^{2k} - 1))     so |B_{2k}| = T_k lambda(2k)
//   r_p = p^{2k} / (p^{2k} - 1)
enum class BoundId {
  ClassicLower,          // S_k
  ClassicUpper,          // (2k)! / (pi^{2k} (2^{2k-1} - 1))
  LeemingLower,          // 4 sqrt(pi k) (k / (pi e))^{2k},   k >= 2
  LeemingUpper,          // 5 sqrt(pi k) (k / (pi e))^{2k},   k >= 2
  DanielloLower,         // S_k (1 + 2^{-2k})
  DanielloStirlingLower, // 4 sqrt(pi k) (k / (pi e))^{2k} (1 + 2^{-2k})
  OddSumLower,           // T_k
  AlzerLower,            // S_k / (1 - 2^{theta - 2k}),  theta = 0
  AlzerUpper,            // S_k / (1 - 2^{delta - 2k})
  GeUpper,               // 2 (1 - 2^{-2n}) zeta(2n) (2k)! / (pi^{2k} (2^{2k} - 1)),  k >= n
  PartialSumLower,       // S_k sum_{j=1}^{m} j^{-2k}
  OddPartialLower,       // T_k sum_{j=0}^{m} (2j+1)^{-2k}
  EulerProductLower,     // T_k prod_{n=1}^{m} r_{p_n}
  EulerProduct0Lower,    // S_k prod_{n=0}^{m} r_{p_n},  p_0 = 2
  ParamALower,           // T_k r_a,  a >= 3
  MixedProductLower,     // T_k prod_{n<m} r_{p_n} r_a,  a >= p_m
  BestConstLower,        // T_k 3^{2k} / (3^{2k} - alpha),  alpha = 1
  BestConstUpper,        // T_k 3^{2k} / (3^{2k} - beta),   beta = 9 (1 - 8/pi^2)
  GeneralLower,          // T_k prod_{n<m} r_{p_n} p_m^{2k} / (p_m^{2k} - alpha'),  m >= 2
  GeneralUpper,          // same with beta'_m
};

enum class Side { Lower, Upper };

inline const char* to_string(Side s) { return s == Side::Lower ? "lower" : "upper"; }

/// Which parameters an id takes.
enum class ParamKind { None, M, N, A, MA };

struct CatalogueEntry {
  BoundId id;
  std::string_view name;
  Side side;
  ParamKind params;
  long min_m;  // smallest admissible m (when m is a parameter)
  long min_k;  // k >= min_k (GeUpper additionally needs k >= n)
};

inline constexpr std::array<CatalogueEntry, 20> kCatalogue{{
    {BoundId::ClassicLower, "classic_lower_1_1", Side::Lower, ParamKind::None, 0, 1},
    {BoundId::ClassicUpper, "classic_upper_1_1", Side::Upper, ParamKind::None, 0, 1},
    {BoundId::LeemingLower, "leeming_lower_1_2", Side::Lower, ParamKind::None, 0, 2},
    {BoundId::LeemingUpper, "leeming_upper_1_2", Side::Upper, ParamKind::None, 0, 2},
    {BoundId::DanielloLower, "daniello_lower_1_4", Side::Lower, ParamKind::None, 0, 1},
    {BoundId::DanielloStirlingLower, "daniello_stirling_lower_1_5", Side::Lower, ParamKind::None, 0, 1},
    {BoundId::OddSumLower, "odd_sum_lower_1_7", Side::Lower, ParamKind::None, 0, 1},
    {BoundId::AlzerLower, "alzer_lower_1_9", Side::Lower, ParamKind::None, 0, 1},
    {BoundId::AlzerUpper, "alzer_upper_1_9", Side::Upper, ParamKind::None, 0, 1},
    {BoundId::GeUpper, "ge_upper_1_10", Side::Upper, ParamKind::N, 0, 1},
    {BoundId::PartialSumLower, "partial_sum_lower_1_11", Side::Lower, ParamKind::M, 1, 1},
    {BoundId::OddPartialLower, "odd_partial_lower_1_12", Side::Lower, ParamKind::M, 0, 1},
    {BoundId::EulerProductLower, "euler_product_lower_2_1", Side::Lower, ParamKind::M, 1, 1},
    {BoundId::EulerProduct0Lower, "euler_product0_lower_2_4", Side::Lower, ParamKind::M, 0, 1},
    {BoundId::ParamALower, "param_a_lower_2_5", Side::Lower, ParamKind::A, 0, 1},
    {BoundId::MixedProductLower, "mixed_product_lower_2_6", Side::Lower, ParamKind::MA, 1, 1},
    {BoundId::BestConstLower, "best_const_lower_2_7", Side::Lower, ParamKind::None, 0, 1},
    {BoundId::BestConstUpper, "best_const_upper_2_7", Side::Upper, ParamKind::None, 0, 1},
    {BoundId::GeneralLower, "general_lower_2_8", Side::Lower, ParamKind::M, 2, 1},
    {BoundId::GeneralUpper, "general_upper_2_8", Side::Upper, ParamKind::M, 2, 1},
}};

inline const CatalogueEntry& catalogue_entry(BoundId id) {
  for (const auto& e : kCatalogue)
    if (e.id == id) return e;
  throw std::logic_error("unknown bound id");
}

inline std::optional<BoundId> parse_bound_id(std::string_view name) {
  for (const auto& e : kCatalogue)
    if (e.name == name) return e.id;
  return std::nullopt;
}

inline std::string_view name_of(BoundId id) { return catalogue_entry(id).name; }

/// A real parameter given either exactly or as a precision-parameterized
/// enclosure (e.g. a = pi + 1).
using RealParameter = std::variant<BigRational, std::function<RealEnclosure(Precision)>>;

inline RealEnclosure enclose(const RealParameter& p, Precision bits) {
  if (const auto* q = std::get_if<BigRational>(&p)) return RealEnclosure(*q, bits);
  return std::get<1>(p)(bits);
}

struct BoundParams {
  std::optional<long> m{};
  std::optional<long> n{};
  std::optional<RealParameter> a{};
  // Override the best constants of the two-sided families; defaults are
  // alpha = alpha' = 1, beta = 9(1 - 8/pi^2), beta' from the prime product.
  std::optional<PiRational> alpha{};
  std::optional<PiRational> beta{};
};

/// One inequality instance family from the catalogue, with its parameters.
struct BoundSpec {
  BoundId id;
  BoundParams params;

  Side side() const { return catalogue_entry(id).side; }
  std::string_view name() const { return name_of(id); }

  bool in_domain(long k) const {
    if (k < catalogue_entry(id).min_k) return false;
    if (id == BoundId::GeUpper) return k >= *params.n;
    return true;
  }

  /// "euler_product_lower_2_1[m=2]" style label.
  std::string label() const {
    std::string s(name());
    std::vector<std::string> parts;
    if (params.m) parts.push_back("m=" + std::to_string(*params.m));
    if (params.n) parts.push_back("n=" + std::to_string(*params.n));
    if (params.a) {
      if (const auto* q = std::get_if<BigRational>(&*params.a))
        parts.push_back("a=" + q->get_str());
      else
        parts.push_back("a=<enclosure>");
    }
    if (params.alpha) parts.push_back("alpha=" + params.alpha->to_string());
    if (params.beta) parts.push_back("beta=" + params.beta->to_string());
    if (parts.empty()) return s;
    s += "[";
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i];
    return s + "]";
  }
};

/// Validates the parameters required by `id` and returns the spec.
inline BoundSpec make_spec(BoundId id, BoundParams params = {}) {
  const auto& entry = catalogue_entry(id);
  const std::string name(entry.name);
  const bool needs_m = entry.params == ParamKind::M || entry.params == ParamKind::MA;
  const bool needs_a = entry.params == ParamKind::A || entry.params == ParamKind::MA;
  const bool needs_n = entry.params == ParamKind::N;
  if (needs_m != params.m.has_value()) throw ParamError(name + (needs_m ? " requires m" : " takes no m"));
  if (needs_n != params.n.has_value()) throw ParamError(name + (needs_n ? " requires n" : " takes no n"));
  if (needs_a != params.a.has_value()) throw ParamError(name + (needs_a ? " requires a" : " takes no a"));
  if (needs_m && *params.m < entry.min_m)
    throw ParamError(name + " requires m >= " + std::to_string(entry.min_m));
  if (needs_n && *params.n < 1) throw ParamError(name + " requires n >= 1");
  const bool two_sided = id == BoundId::BestConstLower || id == BoundId::GeneralLower ||
                         id == BoundId::BestConstUpper || id == BoundId::GeneralUpper;
  if (params.alpha && !(two_sided && entry.side == Side::Lower)) throw ParamError(name + " takes no alpha");
  if (params.beta && !(two_sided && entry.side == Side::Upper)) throw ParamError(name + " takes no beta");
  if (needs_a) {
    // a >= 3 (resp. a >= p_m), checked against the lower endpoint.
    const BigRational threshold(static_cast<unsigned long>(odd_prime(id == BoundId::ParamALower ? 1 : *params.m)));
    const auto* exact_a = std::get_if<BigRational>(&*params.a);
    const bool below = exact_a ? *exact_a < threshold : enclose(*params.a, 128).lo().compare(threshold) < 0;
    if (below)
      throw ParamError(name + " requires a >= " + threshold.get_str());
  }
  return BoundSpec{id, std::move(params)};
}

enum class DomainPolicy { Enforce, Override };

namespace detail {

inline void check_domain(const BoundSpec& spec, long k, DomainPolicy policy) {
  if (k < 1) throw DomainError("k must be >= 1");
  if (policy == DomainPolicy::Override || spec.in_domain(k)) return;
  if (spec.id == BoundId::GeUpper && k < *spec.params.n)
    throw ParamError(std::string(spec.name()) + " requires n <= k");
  throw DomainError(std::string(spec.name()) + " is stated only for k >= " +
                    std::to_string(catalogue_entry(spec.id).min_k));
}

inline PiRational s_factor(long k) {
  const auto two_k = static_cast<unsigned long>(2 * k);
  return PiRational::monomial(BigRational(BigRational(2 * factorial(two_k)) * pow2(-2 * k)), static_cast<int>(-2 * k));
}

inline PiRational t_factor(long k) {
  const auto two_k = static_cast<unsigned long>(2 * k);
  const BigInt four_k = pow_int(BigInt(2), two_k);
  return PiRational::monomial(make_rational(BigInt(2 * factorial(two_k)), BigInt(four_k - 1)), static_cast<int>(-2 * k));
}

inline BigRational ratio_factor(const BigRational& p, long k) {
  const BigRational pk = pow_int(p, 2 * k);
  return pk / (pk - 1);
}

inline BigRational odd_prime_product(long count, long k) {
  BigRational product = 1;
  if (count <= 0) return product;
  for (std::uint64_t p : odd_primes(static_cast<std::size_t>(count)).primes)
    product *= ratio_factor(BigRational(static_cast<unsigned long>(p)), k);
  return product;
}

// p^{2k} / (p^{2k} - c) for a PiRational constant c.
inline PiRational shifted_ratio(const BigRational& p, long k, const PiRational& c) {
  const PiRational pk(pow_int(p, 2 * k));
  return pk / (pk - c);
}

inline PiRational default_alpha() { return PiRational(BigRational(1)); }

inline PiRational default_beta(long m) { return PiRational(beta_prime_exact(static_cast<std::size_t>(m))); }

}  // namespace detail

/// Exact form of the bound as a rational function of pi, when the bound has
/// no other transcendental ingredient (empty for the Stirling-type bounds and
/// for enclosure-valued a).
inline std::optional<PiRational> exact_form(const BoundSpec& spec, long k,
                                            DomainPolicy domain = DomainPolicy::Enforce) {
  detail::check_domain(spec, k, domain);
  using detail::s_factor;
  using detail::t_factor;
  const auto two_k = static_cast<unsigned long>(2 * k);
  switch (spec.id) {
    case BoundId::ClassicLower:
      return s_factor(k);
    case BoundId::ClassicUpper:
      return PiRational::monomial(make_rational(factorial(two_k), BigInt(pow_int(BigInt(2), two_k - 1) - 1)),
                                  static_cast<int>(-2 * k));
    case BoundId::LeemingLower:
    case BoundId::LeemingUpper:
    case BoundId::DanielloStirlingLower:
      return std::nullopt;
    case BoundId::DanielloLower:
      return s_factor(k) * PiRational(BigRational(1 + pow2(-2 * k)));
    case BoundId::OddSumLower:
      return t_factor(k);
    case BoundId::AlzerLower:
      // theta = 0, so 2^{theta - 2k} = 2^{-2k}.
      return s_factor(k) / PiRational(BigRational(1 - pow2(-2 * k)));
    case BoundId::AlzerUpper:
      return s_factor(k) / (PiRational(BigRational(1)) - PiRational(two_pow_delta_exact() * pow2(-2 * k)));
    case BoundId::GeUpper: {
      const long n = *spec.params.n;
      const PiRational zeta_2n = zeta_even_exact(n);
      const PiRational head(BigRational(2 * (1 - pow2(-2 * n))));
      return head * zeta_2n * PiRational::monomial(make_rational(factorial(two_k), BigInt(pow_int(BigInt(2), two_k) - 1)),
                                                   static_cast<int>(-2 * k));
    }
    case BoundId::PartialSumLower: {
      BigRational sum = 0;
      for (long j = 1; j <= *spec.params.m; ++j) sum += pow_int(BigRational(j), -2 * k);
      return s_factor(k) * PiRational(sum);
    }
    case BoundId::OddPartialLower: {
      BigRational sum = 0;
      for (long j = 0; j <= *spec.params.m; ++j) sum += pow_int(BigRational(2 * j + 1), -2 * k);
      return t_factor(k) * PiRational(sum);
    }
    case BoundId::EulerProductLower:
      return t_factor(k) * PiRational(detail::odd_prime_product(*spec.params.m, k));
    case BoundId::EulerProduct0Lower:
      return s_factor(k) * PiRational(BigRational(detail::ratio_factor(2, k) * detail::odd_prime_product(*spec.params.m, k)));
    case BoundId::ParamALower:
    case BoundId::MixedProductLower: {
      const auto* a = std::get_if<BigRational>(&*spec.params.a);
      if (!a) return std::nullopt;
      const long leading = spec.id == BoundId::ParamALower ? 0 : *spec.params.m - 1;
      return t_factor(k) * PiRational(BigRational(detail::odd_prime_product(leading, k) * detail::ratio_factor(*a, k)));
    }
    case BoundId::BestConstLower:
    case BoundId::BestConstUpper:
    case BoundId::GeneralLower:
    case BoundId::GeneralUpper: {
      const bool base_three = spec.id == BoundId::BestConstLower || spec.id == BoundId::BestConstUpper;
      const long m = base_three ? 1 : *spec.params.m;
      const PiRational c = spec.side() == Side::Lower ? spec.params.alpha.value_or(detail::default_alpha())
                                                      : spec.params.beta.value_or(detail::default_beta(m));
      const BigRational pm(static_cast<unsigned long>(odd_prime(static_cast<std::size_t>(m))));
      return t_factor(k) * PiRational(detail::odd_prime_product(m - 1, k)) * detail::shifted_ratio(pm, k, c);
    }
  }
  throw std::logic_error("unhandled bound id");
}

namespace detail {

// c sqrt(pi k) (k / (pi e))^{2k}
inline RealEnclosure stirling_type(long c, long k, Precision bits) {
  RealEnclosure pi = pi_enclosure(bits);
  RealEnclosure e = exp(RealEnclosure(1L, bits));
  RealEnclosure base = BigRational(k) / (pi * e);
  return BigRational(c) * sqrt(pi * BigRational(k)) * pow_int(base, 2 * k);
}

}  // namespace detail

/// Enclosure of the bound's value at k. Uses the exact pi-form whenever one
/// exists so that only powers of pi are rounded.
inline RealEnclosure evaluate_bound(const BoundSpec& spec, long k, Precision bits,
                                    DomainPolicy domain = DomainPolicy::Enforce) {
  if (auto exact = exact_form(spec, k, domain)) return exact->evaluate(bits);
  switch (spec.id) {
    case BoundId::LeemingLower:
      return detail::stirling_type(4, k, bits);
    case BoundId::LeemingUpper:
      return detail::stirling_type(5, k, bits);
    case BoundId::DanielloStirlingLower:
      return detail::stirling_type(4, k, bits) * BigRational(1 + pow2(-2 * k));
    case BoundId::ParamALower:
    case BoundId::MixedProductLower: {
      RealEnclosure a = enclose(*spec.params.a, bits);
      RealEnclosure a2k = pow_int(a, 2 * k);
      RealEnclosure ra = a2k / (a2k - BigRational(1));
      const long leading = spec.id == BoundId::ParamALower ? 0 : *spec.params.m - 1;
      return detail::t_factor(k).evaluate(bits) * detail::odd_prime_product(leading, k) * ra;
    }
    default:
      break;
  }
  throw std::logic_error("bound without exact form has no numeric route");
}

// ---------------------------------------------------------------------------
// Verification.

enum class VerdictStatus { HoldsStrictly, HoldsWithEquality, Fails, Undecided, SkippedOutOfDomain };

inline const char* to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::HoldsStrictly: return "HoldsStrictly";
    case VerdictStatus::HoldsWithEquality: return "HoldsWithEquality";
    case VerdictStatus::Fails: return "Fails";
    case VerdictStatus::Undecided: return "Undecided";
    case VerdictStatus::SkippedOutOfDomain: return "SkippedOutOfDomain";
  }
  return "?";
}

/// gap = |B_{2k}| - bound for lower bounds, bound - |B_{2k}| for upper
/// bounds; the inequality holds strictly iff gap > 0.
struct Verdict {
  VerdictStatus status;
  Precision precision_bits;
  RealEnclosure gap;
};

namespace detail {

inline RealEnclosure gap_enclosure(const BoundSpec& spec, long k, Precision bits, DomainPolicy domain) {
  RealEnclosure bound = evaluate_bound(spec, k, bits, domain);
  RealEnclosure exact(abs_bernoulli_even(k), bits);
  return spec.side() == Side::Lower ? exact - bound : bound - exact;
}

}  // namespace detail

/// Certifies the inequality at k. Exact equality (a pi-form equal to the
/// rational |B_{2k}|) is detected symbolically; otherwise the gap is refined
/// until its sign is certain or max_bits is reached.
inline Verdict verify(const BoundSpec& spec, long k, const PrecisionPolicy& policy = {},
                      DomainPolicy domain = DomainPolicy::Enforce) {
  if (domain == DomainPolicy::Enforce && (k < 1 || !spec.in_domain(k)))
    return {VerdictStatus::SkippedOutOfDomain, 0, RealEnclosure(0L, policy.initial_bits)};
  const BigRational exact = abs_bernoulli_even(k);
  if (auto form = exact_form(spec, k, domain); form && form->equals(PiRational(exact)))
    return {VerdictStatus::HoldsWithEquality, policy.initial_bits, RealEnclosure(0L, policy.initial_bits)};

  auto outcome = refine_until([&](Precision bits) { return detail::gap_enclosure(spec, k, bits, domain); },
                              [](const RealEnclosure& gap) -> std::optional<VerdictStatus> {
                                if (gap.is_positive()) return VerdictStatus::HoldsStrictly;
                                if (gap.is_negative()) return VerdictStatus::Fails;
                                return std::nullopt;
                              },
                              policy);
  return {outcome.decision.value_or(VerdictStatus::Undecided), outcome.bits, std::move(outcome.enclosure)};
}

/// 2 (2k)! / (2 pi)^{2k} * (sum_{n<=N} n^{-2k} + [0, N^{1-2k} / (2k - 1)]),
/// which must contain |B_{2k}|.
inline RealEnclosure identity_check_fourier(long k, long truncation, Precision bits) {
  if (k < 1 || truncation < 1) throw DomainError("identity_check_fourier requires k >= 1 and N >= 1");
  RealEnclosure partial(0L, bits);
  for (long n = truncation; n >= 1; --n) partial = partial + pow_int(RealEnclosure(n, bits), -2 * k);
  const BigRational tail = pow_int(BigRational(truncation), 1 - 2 * k) / BigRational(2 * k - 1);
  RealEnclosure with_tail = partial + tail;
  RealEnclosure series = hull(partial, with_tail);
  return detail::s_factor(k).evaluate(bits) * series;
}

struct ProductSumComparison {
  BigRational product;  // prod_{n=1}^{m} p_n^{2k} / (p_n^{2k} - 1)
  BigRational sum;      // sum_{n=0}^{m} (2n+1)^{-2k}
  bool product_greater;
};

inline ProductSumComparison product_vs_sum_check(long m, long k) {
  if (m < 1 || k < 1) throw DomainError("product_vs_sum_check requires m, k >= 1");
  BigRational product = detail::odd_prime_product(m, k);
  BigRational sum = 0;
  for (long n = 0; n <= m; ++n) sum += pow_int(BigRational(2 * n + 1), -2 * k);
  const bool greater = product > sum;
  return {std::move(product), std::move(sum), greater};
}

// ---------------------------------------------------------------------------
// Sharpness ordering.

enum class Sharpness { TighterStrictly, Looser, Equal, Undecided };

inline const char* to_string(Sharpness s) {
  switch (s) {
    case Sharpness::TighterStrictly: return "TighterStrictly";
    case Sharpness::Looser: return "Looser";
    case Sharpness::Equal: return "Equal";
    case Sharpness::Undecided: return "Undecided";
  }
  return "?";
}

/// Whether `a` is a tighter bound than `b` at k (both on the same side).
inline Sharpness compare_sharpness(const BoundSpec& a, const BoundSpec& b, long k, const PrecisionPolicy& policy = {}) {
  if (a.side() != b.side()) throw std::invalid_argument("sharpness comparison needs bounds on the same side");
  const bool lower = a.side() == Side::Lower;
  auto from_order = [&](bool a_greater) {
    return a_greater == lower ? Sharpness::TighterStrictly : Sharpness::Looser;
  };
  auto fa = exact_form(a, k);
  auto fb = exact_form(b, k);
  if (fa && fb) {
    if (auto ord = exact_compare(*fa, *fb)) {
      if (*ord == std::strong_ordering::equal) return Sharpness::Equal;
      return from_order(*ord == std::strong_ordering::greater);
    }
  }
  auto outcome = refine_until(
      [&](Precision bits) { return evaluate_bound(a, k, bits) - evaluate_bound(b, k, bits); },
      [](const RealEnclosure& diff) -> std::optional<bool> {
        if (diff.is_positive()) return true;
        if (diff.is_negative()) return false;
        return std::nullopt;
      },
      policy);
  return outcome.decided() ? from_order(*outcome.decision) : Sharpness::Undecided;
}

struct SharpnessMatrix {
  std::vector<BoundSpec> specs;
  std::vector<long> ks;
  std::vector<Sharpness> cells;  // [k index][row][column], row relative to column

  Sharpness at(std::size_t k_index, std::size_t row, std::size_t column) const {
    return cells[(k_index * specs.size() + row) * specs.size() + column];
  }
};

/// Pairwise sharpness of bounds on one side over k_first..k_last.
inline SharpnessMatrix sharpness_order(const std::vector<BoundSpec>& specs, Side side, long k_first, long k_last,
                                       const PrecisionPolicy& policy = {}) {
  for (const auto& s : specs) {
    if (s.side() != side) throw std::invalid_argument(std::string(s.name()) + " is on the other side");
    for (long k = k_first; k <= k_last; ++k)
      if (!s.in_domain(k)) throw DomainError(s.label() + " is not stated at k = " + std::to_string(k));
  }
  SharpnessMatrix matrix{specs, {}, {}};
  const std::size_t n = specs.size();
  for (long k = k_first; k <= k_last; ++k) {
    matrix.ks.push_back(k);
    std::vector<Sharpness> block(n * n, Sharpness::Equal);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const Sharpness s = compare_sharpness(specs[i], specs[j], k, policy);
        block[i * n + j] = s;
        block[j * n + i] = s == Sharpness::TighterStrictly ? Sharpness::Looser
                           : s == Sharpness::Looser        ? Sharpness::TighterStrictly
                                                           : s;
      }
    }
    matrix.cells.insert(matrix.cells.end(), block.begin(), block.end());
  }
  return matrix;
}

}  // namespace bernbound
