#pragma once

#include <array>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

#include "bernbound/asymptotic.hpp"
#include "bernbound/bound_catalog.hpp"
#include "bernbound/enclosure.hpp"
#include "bernbound/exact_core.hpp"

namespace bernbound::report {

// ---------------------------------------------------------------------------
// Decimal rendering. Everything truncates toward zero, never rounds.

namespace detail {

inline BigRational pow10(long e) { return pow_int(BigRational(10), e); }

inline BigInt floor_of(const BigRational& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace detail

/// Decimal exponent e with 10^e <= |x| < 10^{e+1}; x must be non-zero.
inline long decimal_exponent(const BigRational& x) {
  const BigRational r = abs(x);
  long e = static_cast<long>(mpz_sizeinbase(r.get_num_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(r.get_den_mpz_t(), 10));
  while (r < detail::pow10(e)) --e;
  while (r >= detail::pow10(e + 1)) ++e;
  return e;
}

/// "1.46e-2" style: `digits` significant digits, truncated.
inline std::string truncated_scientific(const BigRational& x, int digits) {
  if (digits < 1) throw std::invalid_argument("digits must be >= 1");
  if (x == 0) return "0";
  const long e = decimal_exponent(x);
  const BigInt significand = detail::floor_of(BigRational(abs(x) * detail::pow10(digits - 1 - e)));
  const std::string s = significand.get_str();
  std::string out = x < 0 ? "-" : "";
  out += s.substr(0, 1);
  if (s.size() > 1) out += "." + s.substr(1);
  return out + "e" + std::to_string(e);
}

/// Fixed-point with `decimals` digits after the point, truncated.
inline std::string truncated_fixed(const BigRational& x, int decimals) {
  if (decimals < 0) throw std::invalid_argument("decimals must be >= 0");
  std::string s = detail::floor_of(BigRational(abs(x) * detail::pow10(decimals))).get_str();
  if (s.size() <= static_cast<std::size_t>(decimals)) s.insert(0, decimals + 1 - s.size(), '0');
  if (decimals > 0) s.insert(s.size() - decimals, ".");
  const bool negative = x < 0 && s.find_first_not_of("0.") != std::string::npos;
  return (negative ? "-" : "") + s;
}

/// Fixed-point rounded half-up to `decimals` places (non-negative x).
inline std::string rounded_fixed(const BigRational& x, int decimals) {
  if (x < 0) throw std::invalid_argument("rounded_fixed expects x >= 0");
  const BigRational half(1, 2);
  return truncated_fixed(BigRational(x + half * detail::pow10(-decimals)), decimals);
}

/// The rendering when both endpoints agree (every printed digit certified).
inline std::optional<std::string> certified_scientific(const RealEnclosure& x, int digits) {
  std::string lo = truncated_scientific(x.lower(), digits);
  if (lo != truncated_scientific(x.upper(), digits)) return std::nullopt;
  return lo;
}

inline std::optional<std::string> certified_fixed(const RealEnclosure& x, int decimals) {
  std::string lo = truncated_fixed(x.lower(), decimals);
  if (lo != truncated_fixed(x.upper(), decimals)) return std::nullopt;
  return lo;
}

template <class Producer>
std::string render_certified_scientific(Producer&& compute, int digits, const PrecisionPolicy& policy) {
  auto r = refine_until(compute, [&](const RealEnclosure& x) { return certified_scientific(x, digits); }, policy);
  if (!r.decided()) throw std::runtime_error("could not certify " + std::to_string(digits) + " digits");
  return *r.decision;
}

inline std::optional<std::string> certified_rounded(const RealEnclosure& x, int decimals) {
  if (x.lower() < 0) return std::nullopt;
  std::string lo = rounded_fixed(x.lower(), decimals);
  if (lo != rounded_fixed(x.upper(), decimals)) return std::nullopt;
  return lo;
}

template <class Producer>
std::string render_certified_rounded(Producer&& compute, int decimals, const PrecisionPolicy& policy) {
  auto r = refine_until(compute, [&](const RealEnclosure& x) { return certified_rounded(x, decimals); }, policy);
  if (!r.decided()) throw std::runtime_error("could not certify rounding to " + std::to_string(decimals) + " decimals");
  return *r.decision;
}

template <class Producer>
std::string render_certified_fixed(Producer&& compute, int decimals, const PrecisionPolicy& policy) {
  auto r = refine_until(compute, [&](const RealEnclosure& x) { return certified_fixed(x, decimals); }, policy);
  if (!r.decided()) throw std::runtime_error("could not certify " + std::to_string(decimals) + " decimals");
  return *r.decision;
}

// ---------------------------------------------------------------------------
// Tabular output.

enum class Format { Markdown, Csv, Json };

inline std::optional<Format> parse_format(std::string_view s) {
  if (s == "md") return Format::Markdown;
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  return std::nullopt;
}

using Cell = std::variant<long, std::string>;

struct Table {
  std::vector<std::string> headers;
  std::vector<std::vector<Cell>> rows;
};

namespace detail {

inline std::string cell_text(const Cell& c) {
  if (const auto* v = std::get_if<long>(&c)) return std::to_string(*v);
  return std::get<std::string>(c);
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

}  // namespace detail

inline std::string render(const Table& table, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::Markdown: {
      os << "|";
      for (const auto& h : table.headers) os << " " << h << " |";
      os << "\n|";
      for (std::size_t i = 0; i < table.headers.size(); ++i) os << "---|";
      os << "\n";
      for (const auto& row : table.rows) {
        os << "|";
        for (const auto& c : row) os << " " << detail::cell_text(c) << " |";
        os << "\n";
      }
      break;
    }
    case Format::Csv: {
      for (std::size_t i = 0; i < table.headers.size(); ++i) os << (i ? "," : "") << detail::csv_escape(table.headers[i]);
      os << "\n";
      for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << detail::csv_escape(detail::cell_text(row[i]));
        os << "\n";
      }
      break;
    }
    case Format::Json: {
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (const auto& row : table.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < row.size(); ++i) {
          if (const auto* v = std::get_if<long>(&row[i]))
            obj[table.headers[i]] = *v;
          else
            obj[table.headers[i]] = std::get<std::string>(row[i]);
        }
        rows.push_back(std::move(obj));
      }
      os << rows.dump(2) << "\n";
      break;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Gap table: |B_{2k}| - L_{2k} for the odd-prime Euler-product lower bound.

struct ReportRow {
  long k;
  std::string exact_value;  // |B_{2k}| as p/q
  std::string bound;
  std::string gap;
  std::string verdict;
};

/// Published gap values for m = 1, k = 1..10, three truncated digits.
inline constexpr std::array<std::string_view, 10> kPublishedGaps{
    "1.46e-2", "7.15e-5", "1.74e-6", "9.13e-8", "8.02e-9", "1.05e-9", "1.92e-10", "4.66e-11", "1.43e-11", "5.11e-12"};

inline std::vector<ReportRow> gap_table(long m, long k_max, int digits, const PrecisionPolicy& policy = {}) {
  if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
  const BoundSpec spec = make_spec(BoundId::EulerProductLower, {.m = m});
  std::vector<ReportRow> rows;
  for (long k = 1; k <= k_max; ++k) {
    const BigRational exact = abs_bernoulli_even(k);
    std::string bound = render_certified_scientific([&](Precision b) { return evaluate_bound(spec, k, b); }, digits, policy);
    std::string gap = render_certified_scientific(
        [&](Precision b) { return RealEnclosure(exact, b) - evaluate_bound(spec, k, b); }, digits, policy);
    rows.push_back({k, exact.get_str(), std::move(bound), std::move(gap), to_string(verify(spec, k, policy).status)});
  }
  return rows;
}

struct GoldenMismatch {
  long k;
  std::string published;
  std::string computed;
};

/// Compares the first ten gaps (m = 1) to the published three-digit values.
inline std::vector<GoldenMismatch> check_against_published(const PrecisionPolicy& policy = {}) {
  std::vector<GoldenMismatch> mismatches;
  const auto rows = gap_table(1, static_cast<long>(kPublishedGaps.size()), 3, policy);
  for (const auto& row : rows) {
    const std::string_view expected = kPublishedGaps[static_cast<std::size_t>(row.k - 1)];
    if (row.gap != expected) mismatches.push_back({row.k, std::string(expected), row.gap});
  }
  return mismatches;
}

inline Table to_table(const std::vector<ReportRow>& rows) {
  Table t{{"k", "abs_B_2k", "bound", "gap", "verdict"}, {}};
  for (const auto& r : rows) t.rows.push_back({r.k, r.exact_value, r.bound, r.gap, r.verdict});
  return t;
}

// ---------------------------------------------------------------------------
// Catalogue verification.

/// Parameter values swept for parameterized ids; empty vectors mean defaults.
struct SweepOverrides {
  std::vector<long> m;
  std::vector<long> n;
  std::vector<BigRational> a;
};

/// Instances of `id` checked at k. GeUpper sweeps n = 1..k by default.
inline std::vector<BoundSpec> sweep_specs(BoundId id, long k, const SweepOverrides& o = {}) {
  auto pick = [](const std::vector<long>& chosen, std::vector<long> fallback) { return chosen.empty() ? fallback : chosen; };
  std::vector<BoundSpec> specs;
  switch (catalogue_entry(id).params) {
    case ParamKind::None:
      specs.push_back(make_spec(id));
      break;
    case ParamKind::N: {
      std::vector<long> ns = o.n;
      if (ns.empty())
        for (long n = 1; n <= k; ++n) ns.push_back(n);
      for (long n : ns) specs.push_back(make_spec(id, {.n = n}));
      break;
    }
    case ParamKind::M: {
      std::vector<long> fallback;
      switch (id) {
        case BoundId::OddPartialLower:
        case BoundId::EulerProduct0Lower: fallback = {0, 1, 2, 5, 10}; break;
        case BoundId::GeneralLower:
        case BoundId::GeneralUpper: fallback = {2, 3, 4, 5}; break;
        default: fallback = {1, 2, 3, 5, 10}; break;
      }
      for (long m : pick(o.m, fallback)) specs.push_back(make_spec(id, {.m = m}));
      break;
    }
    case ParamKind::A: {
      std::vector<BigRational> as = o.a;
      if (as.empty()) as = {BigRational(3), BigRational(7, 2), BigRational(4), BigRational(10)};
      for (const auto& a : as) specs.push_back(make_spec(id, {.a = RealParameter(a)}));
      break;
    }
    case ParamKind::MA: {
      if (!o.m.empty() || !o.a.empty()) {
        for (long m : pick(o.m, {1, 2, 3})) {
          std::vector<BigRational> as = o.a;
          if (as.empty()) as = {BigRational(static_cast<unsigned long>(odd_prime(static_cast<std::size_t>(m))))};
          for (const auto& a : as) specs.push_back(make_spec(id, {.m = m, .a = RealParameter(a)}));
        }
      } else {
        const std::vector<std::pair<long, BigRational>> pairs{
            {1, BigRational(3)}, {2, BigRational(5)}, {2, BigRational(6)}, {3, BigRational(7)}, {3, BigRational(15, 2)}, {5, BigRational(13)}};
        for (const auto& [m, a] : pairs) specs.push_back(make_spec(id, {.m = m, .a = RealParameter(a)}));
      }
      break;
    }
  }
  return specs;
}

struct VerifyRow {
  std::string id;
  std::string label;
  long k;
  Verdict verdict;
};

inline std::vector<VerifyRow> run_verification(const std::vector<BoundId>& ids, long k_min, long k_max,
                                               const PrecisionPolicy& policy = {}, const SweepOverrides& overrides = {}) {
  std::vector<VerifyRow> rows;
  for (BoundId id : ids) {
    for (long k = k_min; k <= k_max; ++k) {
      std::vector<BoundSpec> specs;
      try {
        specs = sweep_specs(id, k, overrides);
      } catch (const ParamError&) {
        continue;  // override not admissible for this id
      }
      for (const auto& spec : specs) rows.push_back({std::string(spec.name()), spec.label(), k, verify(spec, k, policy)});
    }
  }
  return rows;
}

/// 0 when everything is certified, 1 on any failure, 2 on any undecided.
inline int verification_exit_code(const std::vector<VerifyRow>& rows) {
  bool undecided = false;
  for (const auto& r : rows) {
    if (r.verdict.status == VerdictStatus::Fails) return 1;
    undecided |= r.verdict.status == VerdictStatus::Undecided;
  }
  return undecided ? 2 : 0;
}

inline Table to_table(const std::vector<VerifyRow>& rows) {
  Table t{{"id", "instance", "k", "verdict", "bits", "gap"}, {}};
  for (const auto& r : rows) {
    std::string gap = r.verdict.status == VerdictStatus::SkippedOutOfDomain ? "-" : r.verdict.gap.to_string(8);
    t.rows.push_back({r.id, r.label, r.k, to_string(r.verdict.status), static_cast<long>(r.verdict.precision_bits), gap});
  }
  return t;
}

// ---------------------------------------------------------------------------
// Constants.

/// Truncated and rounded decimals; both columns are certified by the
/// enclosure (a value sitting exactly on a rounding tie would not certify).
inline Table constants_table(int decimals, const PrecisionPolicy& policy = {}) {
  Table t{{"name", "truncated", "rounded", "kind"}, {}};
  auto add = [&](std::string name, auto producer) {
    t.rows.push_back({std::move(name), render_certified_fixed(producer, decimals, policy),
                      render_certified_rounded(producer, decimals, policy), "certified"});
  };
  auto add_exact = [&](std::string name, const BigRational& v) {
    t.rows.push_back({std::move(name), truncated_fixed(v, decimals), rounded_fixed(v, decimals), "exact"});
  };
  add_exact("alpha", 1);
  add_exact("theta", 0);
  add("beta", [](Precision b) { return compute_constants(b).beta; });
  add("delta", [](Precision b) { return delta_enclosure(b); });
  {
    const Constants c = compute_constants(policy.initial_bits);
    if (!c.ratio_exactly_three || !c.beta_over_two_pow_delta_minus_one.contains(BigRational(3)))
      throw std::runtime_error("beta / (2^delta - 1) identity check failed");
    add_exact("beta/(2^delta-1)", 3);
  }
  for (std::size_t m = 2; m <= 5; ++m)
    add("beta_prime(" + std::to_string(m) + ")", [m](Precision b) { return beta_prime_exact(m).evaluate(pi_enclosure(b)); });
  return t;
}

// ---------------------------------------------------------------------------
// Plot data.

inline Table critical_constant_curve(const std::vector<BigRational>& grid, std::size_t m, Precision bits, int digits = 20) {
  Table t{{"x", "lower", "upper", "midpoint"}, {}};
  for (const auto& x : grid) {
    RealEnclosure c = critical_constant_general(m, x, bits);
    const BigRational mid = (c.lower() + c.upper()) / 2;
    t.rows.push_back({x.get_str(), truncated_scientific(c.lower(), digits), truncated_scientific(c.upper(), digits),
                      truncated_scientific(mid, digits)});
  }
  return t;
}

inline Table gap_curves(const std::vector<long>& ms, long k_max, int digits, const PrecisionPolicy& policy = {}) {
  Table t{{"m", "k", "gap"}, {}};
  for (long m : ms)
    for (const auto& row : gap_table(m, k_max, digits, policy)) t.rows.push_back({m, row.k, row.gap});
  return t;
}

/// Bounds compared by the sharpness plot (all stated for every k >= 1).
inline std::vector<BoundSpec> sharpness_panel(Side side) {
  if (side == Side::Upper)
    return {make_spec(BoundId::ClassicUpper), make_spec(BoundId::AlzerUpper), make_spec(BoundId::GeUpper, {.n = 1}),
            make_spec(BoundId::BestConstUpper), make_spec(BoundId::GeneralUpper, {.m = 2})};
  return {make_spec(BoundId::ClassicLower), make_spec(BoundId::DanielloLower), make_spec(BoundId::OddSumLower),
          make_spec(BoundId::EulerProductLower, {.m = 1}), make_spec(BoundId::EulerProductLower, {.m = 2}),
          make_spec(BoundId::BestConstLower)};
}

inline Table sharpness_table(Side side, long k_max, const PrecisionPolicy& policy = {}) {
  const auto specs = sharpness_panel(side);
  const SharpnessMatrix matrix = sharpness_order(specs, side, 1, k_max, policy);
  Table t{{"k", "bound", "versus", "relation"}, {}};
  for (std::size_t ki = 0; ki < matrix.ks.size(); ++ki)
    for (std::size_t i = 0; i < specs.size(); ++i)
      for (std::size_t j = 0; j < specs.size(); ++j)
        if (i != j) t.rows.push_back({matrix.ks[ki], specs[i].label(), specs[j].label(), to_string(matrix.at(ki, i, j))});
  return t;
}

// ---------------------------------------------------------------------------
// Bernoulli listing.

inline Table bernoulli_table(std::size_t first, std::size_t last, bool even_only, bool with_vsc) {
  Table t{{"n", "B_n"}, {}};
  if (with_vsc) t.headers.push_back("vsc_denominator");
  for (std::size_t n = first; n <= last; ++n) {
    if (even_only && n % 2 == 1) continue;
    std::vector<Cell> row{static_cast<long>(n), bernoulli(n).get_str()};
    if (with_vsc)
      row.push_back(n >= 2 && n % 2 == 0 ? von_staudt_clausen_denominator(static_cast<long>(n / 2)).get_str() : std::string("-"));
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace bernbound::report
