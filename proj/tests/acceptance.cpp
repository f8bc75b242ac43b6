// Acceptance checks, one per criterion: `acceptance --criterion N`.
// Prints a single PASS/FAIL line (plus diagnostics on stderr) and exits 0
// only on PASS.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "bernbound/bernbound.hpp"
#include "bernbound/report.hpp"
#include "oracles.hpp"

using namespace bernbound;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures_++ < 20) std::cerr << "  failed: " << what << "\n";
  }
  long failures() const { return failures_; }

 private:
  long failures_ = 0;
};

// Golden Bernoulli values.
Outcome criterion_1() {
  const std::array<BigRational, 8> golden{BigRational(1, 6),   BigRational(-1, 30),     BigRational(1, 42),
                                          BigRational(-1, 30), BigRational(5, 66),      BigRational(-691, 2730),
                                          BigRational(7, 6),   BigRational(-3617, 510)};
  Checker c;
  for (std::size_t k = 1; k <= golden.size(); ++k)
    c.expect(bernoulli(2 * k) == golden[k - 1], "B_" + std::to_string(2 * k) + " = " + bernoulli(2 * k).get_str());
  return {c.failures() == 0, "B_2..B_16 exact"};
}

// Published gap table, m = 1, three truncated significant digits.
Outcome criterion_2() {
  const auto rows = report::gap_table(1, 10, 3);
  std::ostringstream detail;
  long matched = 0;
  for (const auto& row : rows) {
    const std::string_view expected = report::kPublishedGaps[static_cast<std::size_t>(row.k - 1)];
    const bool ok = row.gap == expected;
    matched += ok;
    if (!ok) {
      // Show more digits so the discrepancy is visible.
      const BoundSpec spec = make_spec(BoundId::EulerProductLower, {.m = 1});
      const auto wide = report::render_certified_scientific(
          [&](Precision b) { return RealEnclosure(abs_bernoulli_even(row.k), b) - evaluate_bound(spec, row.k, b); }, 12,
          PrecisionPolicy{});
      std::cerr << "  k=" << row.k << ": published " << expected << ", certified " << row.gap << " (" << wide << ")\n";
    }
  }
  detail << matched << "/10 published gaps reproduced";
  return {matched == 10, detail.str()};
}

// Best constants.
Outcome criterion_3() {
  Checker c;
  const std::string beta30 = report::render_certified_fixed([](Precision b) { return compute_constants(b).beta; }, 30,
                                                            PrecisionPolicy{});
  std::cerr << "  beta = " << beta30 << "\n";
  c.expect(beta30.size() == 32, "30 certified decimals");
  const std::string rounded6 = report::render_certified_rounded([](Precision b) { return compute_constants(b).beta; }, 6,
                                                                PrecisionPolicy{});
  c.expect(rounded6 == "1.704875", "beta rounds to 1.704875, got " + rounded6);
  c.expect(beta30.rfind("1.70487477775168045604067864889", 0) == 0, "beta digits");

  const Constants k = compute_constants(128);
  c.expect(k.beta_over_two_pow_delta_minus_one.contains(BigRational(3)), "enclosure of beta/(2^delta-1) contains 3");
  c.expect(k.beta_over_two_pow_delta_minus_one.width_upper() < 1e-20, "ratio width < 1e-20");
  std::cerr << "  beta/(2^delta-1) in " << k.beta_over_two_pow_delta_minus_one.to_string(25) << "\n";
  c.expect(k.ratio_exactly_three, "9 - 72/pi^2 == 3 (4 - 24/pi^2 - 1) symbolically");
  c.expect(PiRational(beta_exact()).equals(PiRational(BigRational(3)) * PiRational(two_pow_delta_exact() - PiLaurent::constant(1))),
           "exact ratio via PiRational");
  return {c.failures() == 0, "beta = " + beta30.substr(0, 12) + "..., beta/(2^delta-1) = 3 exactly"};
}

// Full catalogue at k_max = 50.
Outcome criterion_4() {
  std::vector<BoundId> ids;
  for (const auto& e : kCatalogue) ids.push_back(e.id);
  const auto rows = report::run_verification(ids, 1, 50, PrecisionPolicy{});
  Checker c;
  std::map<std::string, long> counts;
  for (const auto& r : rows) {
    const auto status = r.verdict.status;
    ++counts[to_string(status)];
    const auto id = *parse_bound_id(r.id);
    const auto& entry = catalogue_entry(id);
    VerdictStatus expected = VerdictStatus::HoldsStrictly;
    if (r.k < entry.min_k) {
      expected = VerdictStatus::SkippedOutOfDomain;
    } else if (entry.side == Side::Upper) {
      const bool ge_diagonal = id == BoundId::GeUpper && r.label == "ge_upper_1_10[n=" + std::to_string(r.k) + "]";
      const bool first_index = r.k == 1 && (id == BoundId::BestConstUpper || id == BoundId::GeneralUpper || id == BoundId::AlzerUpper);
      if (ge_diagonal || first_index) expected = VerdictStatus::HoldsWithEquality;
    }
    c.expect(status == expected, r.label + " k=" + std::to_string(r.k) + ": " + to_string(status) + ", expected " +
                                     to_string(expected));
  }
  std::ostringstream detail;
  detail << rows.size() << " instances:";
  for (const auto& [s, n] : counts) detail << " " << s << "=" << n;
  c.expect(counts["Fails"] == 0 && counts["Undecided"] == 0, "no Fails, no Undecided");
  return {c.failures() == 0, detail.str()};
}

// Orderings between bound families.
Outcome criterion_5() {
  Checker c;
  auto m_spec = [](BoundId id, long m) { return make_spec(id, {.m = m}); };
  long comparisons = 0;
  auto tighter = [&](const BoundSpec& a, const BoundSpec& b, long k) {
    ++comparisons;
    const Sharpness s = compare_sharpness(a, b, k);
    c.expect(s == Sharpness::TighterStrictly, a.label() + " vs " + b.label() + " at k=" + std::to_string(k) + ": " + to_string(s));
  };
  for (long m = 2; m <= 5; ++m)
    for (long k = 1; k <= 20; ++k) {
      // Exact rational factor comparison as well as the generic route.
      c.expect(detail::odd_prime_product(m, k) > detail::odd_prime_product(m - 1, k), "product grows with m");
      tighter(m_spec(BoundId::EulerProductLower, m), m_spec(BoundId::EulerProductLower, m - 1), k);
    }
  for (long k = 1; k <= 20; ++k)
    tighter(m_spec(BoundId::EulerProductLower, 1), m_spec(BoundId::OddPartialLower, 1), k);
  for (long m = 1; m <= 20; ++m)
    for (long k = 1; k <= 20; ++k) {
      c.expect(product_vs_sum_check(m, k).product_greater, "product > odd sum at m=" + std::to_string(m));
      tighter(m_spec(BoundId::EulerProductLower, m), m_spec(BoundId::OddPartialLower, m), k);
      tighter(m_spec(BoundId::OddPartialLower, m), m_spec(BoundId::PartialSumLower, 2 * m + 1), k);
    }
  for (long k = 2; k <= 20; ++k) tighter(make_spec(BoundId::BestConstUpper), make_spec(BoundId::AlzerUpper), k);
  return {c.failures() == 0, std::to_string(comparisons) + " strict orderings certified"};
}

// Monotonicity of the critical-constant curve.
Outcome criterion_6() {
  Checker c;
  const auto grid = make_grid(2, 40, BigRational(1, 4));
  const auto cert = monotonicity_certificate(grid, PrecisionPolicy{});
  c.expect(cert.status == MonotonicityStatus::CertifiedDecreasing, "curve certified decreasing");
  c.expect(cert.pairs_certified == grid.size() - 1, "every adjacent pair certified");
  const RealEnclosure beta = beta_exact().evaluate(pi_enclosure(256));
  const BigRational eps = pow2(-100);
  for (const auto& x : grid) {
    const RealEnclosure h = critical_constant(x, 256);
    c.expect(h.lower() > 1, "h(" + x.get_str() + ") > 1");
    c.expect(h.upper() <= beta.upper() + eps, "h(" + x.get_str() + ") <= beta + eps");
  }
  long terms = 0;
  for (const BigRational& x : {BigRational(2), BigRational(3), BigRational(5), BigRational(10)}) {
    const auto flags = termwise_negativity_check(x, 50);
    for (std::size_t i = 0; i < flags.size(); ++i) {
      ++terms;
      c.expect(flags[i], "termwise negativity at x=" + x.get_str() + ", prime #" + std::to_string(i + 1));
    }
  }
  c.expect(terms == 200, "200 termwise checks");
  std::ostringstream detail;
  detail << cert.pairs_certified << " adjacent pairs on " << grid.size() << " grid points, max " << cert.max_bits_used
         << " bits; " << terms << " termwise checks";
  return {c.failures() == 0, detail.str()};
}

// Property suites.
Outcome criterion_7() {
  Checker c;
  for (long k = 1; k <= 100; ++k)
    c.expect(bernoulli(2 * static_cast<std::size_t>(k)).get_den() == von_staudt_clausen_denominator(k),
             "denominator of B_" + std::to_string(2 * k));
  for (long k = 1; k <= 20; ++k)
    c.expect(identity_check_fourier(k, 1000, 128).contains(abs_bernoulli_even(k)), "Fourier containment k=" + std::to_string(k));
  const auto fuzz = oracle::enclosure_fuzz(10000, 20240601);
  c.expect(fuzz.failures == 0, "fuzz: " + fuzz.first_failure);
  std::ostringstream detail;
  detail << "100 denominators, 20 Fourier enclosures, " << fuzz.cases << " fuzz pipelines (" << fuzz.failures
         << " violations)";
  return {c.failures() == 0, detail.str()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bernbound acceptance checks"};
  int criterion = 0;
  app.add_option("--criterion", criterion, "criterion number")->required()->check(CLI::Range(1, 7));
  CLI11_PARSE(app, argc, argv);

  struct Entry {
    std::function<Outcome()> run;
    double time_limit_s;  // 0: none
    const char* title;
  };
  const std::map<int, Entry> criteria{
      {1, {criterion_1, 1.0, "golden Bernoulli values"}},
      {2, {criterion_2, 5.0, "published gap table"}},
      {3, {criterion_3, 0.0, "best constants"}},
      {4, {criterion_4, 60.0, "catalogue verification to k = 50"}},
      {5, {criterion_5, 0.0, "sharpness orderings"}},
      {6, {criterion_6, 0.0, "monotonicity certificate"}},
      {7, {criterion_7, 0.0, "property suites"}},
  };
  const Entry& entry = criteria.at(criterion);
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = entry.run();
  } catch (const std::exception& e) {
    outcome = {false, std::string("exception: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream timing;
  timing.precision(3);
  timing << std::fixed << seconds << " s";
  if (entry.time_limit_s > 0) {
    timing << " (limit " << entry.time_limit_s << " s)";
    if (seconds >= entry.time_limit_s) outcome.pass = false;
  }
  std::cout << "criterion " << criterion << " [" << entry.title << "]: " << (outcome.pass ? "PASS" : "FAIL") << " - "
            << outcome.detail << " - " << timing.str() << "\n";
  return outcome.pass ? 0 : 1;
}
