// bernbound: exact Bernoulli numbers and certified bounds on |B_{2k}|.
//
// Exit codes: 0 all certified as expected, 1 a bound fails (or a published
// value does not reproduce), 2 something stayed undecided, 3 usage error.

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bernbound/bernbound.hpp"
#include "bernbound/report.hpp"

namespace {

using namespace bernbound;
using report::Format;

constexpr int kUsageError = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Format format_from(const std::string& s) {
  auto f = report::parse_format(s);
  if (!f) throw UsageError("unknown format '" + s + "' (expected md, csv or json)");
  return *f;
}

PrecisionPolicy policy_from(Precision initial, Precision max) {
  PrecisionPolicy p{initial, max, 2};
  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return p;
}

std::vector<BigRational> rationals_from(const std::vector<std::string>& texts) {
  std::vector<BigRational> out;
  for (const auto& t : texts) {
    try {
      out.push_back(parse_rational(t));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  return out;
}

int run_table1(long m, long k_max, int digits, const std::string& format, bool check) {
  const Format f = format_from(format);
  std::cout << report::render(report::to_table(report::gap_table(m, k_max, digits)), f);
  if (!check) return 0;
  if (m != 1) throw UsageError("--check compares against the published m = 1 column");
  const auto mismatches = report::check_against_published();
  for (const auto& mm : mismatches)
    std::cerr << "mismatch at k=" << mm.k << ": published " << mm.published << ", certified " << mm.computed << "\n";
  std::cerr << (mismatches.empty() ? "all 10 published values reproduced\n"
                                   : std::to_string(mismatches.size()) + " of 10 published values differ\n");
  return mismatches.empty() ? 0 : 1;
}

int run_verify(std::vector<std::string> ids, bool all, long k_min, long k_max, const PrecisionPolicy& policy,
               const report::SweepOverrides& overrides, const std::string& format, bool summary_only) {
  const Format f = format_from(format);
  if (all == !ids.empty()) throw UsageError("give either --all or at least one --id");
  std::vector<BoundId> chosen;
  if (all) {
    for (const auto& e : kCatalogue) chosen.push_back(e.id);
  } else {
    for (const auto& name : ids) {
      auto id = parse_bound_id(name);
      if (!id) throw UsageError("unknown bound id '" + name + "'");
      chosen.push_back(*id);
    }
  }
  if (k_min < 1 || k_max < k_min) throw UsageError("need 1 <= k-min <= k-max");
  const auto rows = report::run_verification(chosen, k_min, k_max, policy, overrides);
  if (rows.empty()) {
    // Surface the parameter error that ruled out every instance.
    for (BoundId id : chosen) report::sweep_specs(id, k_max, overrides);
    throw UsageError("no admissible instances");
  }
  if (!summary_only) std::cout << report::render(report::to_table(rows), f);
  std::map<std::string, int> counts;
  for (const auto& r : rows) ++counts[to_string(r.verdict.status)];
  std::cerr << rows.size() << " instances:";
  for (const auto& [status, n] : counts) std::cerr << " " << status << "=" << n;
  std::cerr << "\n";
  return report::verification_exit_code(rows);
}

int run_bernoulli(const std::string& range, bool even_only, bool vsc, const std::string& format) {
  const Format f = format_from(format);
  std::size_t first = 0, last = 0;
  try {
    if (auto dots = range.find(".."); dots != std::string::npos) {
      first = std::stoul(range.substr(0, dots));
      last = std::stoul(range.substr(dots + 2));
    } else {
      first = last = std::stoul(range);
    }
  } catch (const std::exception&) {
    throw UsageError("expected n or a..b, got '" + range + "'");
  }
  if (range.find('-') != std::string::npos || last < first) throw UsageError("invalid range '" + range + "'");
  std::cout << report::render(report::bernoulli_table(first, last, even_only, vsc), f);
  return 0;
}

int run_plotdata(const std::string& subject, const std::string& x_min, const std::string& x_max, const std::string& step,
                 std::vector<long> ms, long k_max, const std::string& side, int digits, Precision bits,
                 const std::string& format) {
  const Format f = format_from(format);
  if (subject == "h_curve") {
    const auto bounds = rationals_from({x_min, x_max, step});
    if (bounds[0] < 2 || bounds[2] <= 0) throw UsageError("h_curve needs x-min >= 2 and step > 0");
    const std::size_t m = ms.empty() ? 1 : static_cast<std::size_t>(ms.front());
    if (m < 1) throw UsageError("--m must be >= 1");
    std::cout << report::render(report::critical_constant_curve(make_grid(bounds[0], bounds[1], bounds[2]), m, bits, digits), f);
    return 0;
  }
  if (subject == "gap_curves") {
    if (ms.empty()) ms = {1, 2, 3};
    std::cout << report::render(report::gap_curves(ms, k_max, digits), f);
    return 0;
  }
  if (subject == "sharpness") {
    if (side != "lower" && side != "upper") throw UsageError("--side must be lower or upper");
    std::cout << report::render(report::sharpness_table(side == "lower" ? Side::Lower : Side::Upper, k_max), f);
    return 0;
  }
  throw UsageError("unknown plot subject '" + subject + "' (h_curve, gap_curves, sharpness)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Bernoulli numbers and certified bounds for |B_2k|", "bernbound"};
  app.require_subcommand(1);

  auto* table1 = app.add_subcommand("table1", "gap |B_2k| - L_2k of the odd-prime Euler-product lower bound");
  long t_m = 1, t_kmax = 10;
  int t_digits = 3;
  std::string t_format = "md";
  bool t_check = false;
  table1->add_option("--m", t_m, "number of odd primes in the product")->check(CLI::PositiveNumber);
  table1->add_option("--k-max", t_kmax, "largest k")->check(CLI::PositiveNumber);
  table1->add_option("--digits", t_digits, "significant digits (truncated)")->check(CLI::Range(1, 50));
  table1->add_option("--format", t_format, "md, csv or json");
  table1->add_flag("--check", t_check, "compare the m = 1 gaps against the published values");

  auto* verify_cmd = app.add_subcommand("verify", "certify catalogue bounds");
  std::vector<std::string> v_ids;
  bool v_all = false, v_summary = false;
  long v_kmin = 1, v_kmax = 50;
  Precision v_prec = 128, v_max = 16384;
  std::vector<long> v_m, v_n;
  std::vector<std::string> v_a;
  std::string v_format = "md";
  verify_cmd->add_option("--id", v_ids, "catalogue id (repeatable)");
  verify_cmd->add_flag("--all", v_all, "every catalogue id");
  verify_cmd->add_option("--k-min", v_kmin, "smallest k");
  verify_cmd->add_option("--k-max", v_kmax, "largest k")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--prec-bits", v_prec, "initial precision in bits")->check(CLI::Range(16, 1 << 20));
  verify_cmd->add_option("--max-prec-bits", v_max, "precision cap in bits")->check(CLI::Range(16, 1 << 22));
  verify_cmd->add_option("--m", v_m, "override the m values swept");
  verify_cmd->add_option("--n", v_n, "override the n values swept");
  verify_cmd->add_option("--a", v_a, "override the a values swept (p, p/q or decimal)");
  verify_cmd->add_option("--format", v_format, "md, csv or json");
  verify_cmd->add_flag("--summary-only", v_summary, "print only the verdict counts");

  auto* constants = app.add_subcommand("constants", "best constants alpha, beta, delta, theta, beta'");
  int c_digits = 6;
  std::string c_format = "md";
  constants->add_option("--digits", c_digits, "decimals (truncated, certified)")->check(CLI::Range(1, 50));
  constants->add_option("--format", c_format, "md, csv or json");

  auto* bern = app.add_subcommand("bernoulli", "exact Bernoulli numbers B_n");
  std::string b_range;
  bool b_even = false, b_vsc = false;
  std::string b_format = "md";
  bern->add_option("range", b_range, "n or a..b")->required();
  bern->add_flag("--even", b_even, "only even indices");
  bern->add_flag("--vsc", b_vsc, "add the von Staudt-Clausen denominator column");
  bern->add_option("--format", b_format, "md, csv or json");

  auto* plot = app.add_subcommand("plotdata", "columnar data for external plotting");
  std::string p_subject, p_xmin = "2", p_xmax = "10", p_step = "1/2", p_side = "upper", p_format = "csv";
  std::vector<long> p_m;
  long p_kmax = 10;
  int p_digits = 20;
  Precision p_bits = 128;
  plot->add_option("subject", p_subject, "h_curve, gap_curves or sharpness")->required();
  plot->add_option("--x-min", p_xmin, "h_curve grid start");
  plot->add_option("--x-max", p_xmax, "h_curve grid end");
  plot->add_option("--step", p_step, "h_curve grid step");
  plot->add_option("--m", p_m, "h_curve: prime index of the curve; gap_curves: m values");
  plot->add_option("--k-max", p_kmax, "largest k")->check(CLI::PositiveNumber);
  plot->add_option("--side", p_side, "sharpness: lower or upper");
  plot->add_option("--digits", p_digits, "significant digits")->check(CLI::Range(1, 50));
  plot->add_option("--prec-bits", p_bits, "h_curve precision")->check(CLI::Range(64, 1 << 16));
  plot->add_option("--format", p_format, "md, csv or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (table1->parsed()) return run_table1(t_m, t_kmax, t_digits, t_format, t_check);
    if (verify_cmd->parsed())
      return run_verify(v_ids, v_all, v_kmin, v_kmax, policy_from(v_prec, v_max), {v_m, v_n, rationals_from(v_a)},
                        v_format, v_summary);
    if (constants->parsed()) {
      std::cout << report::render(report::constants_table(c_digits), format_from(c_format));
      return 0;
    }
    if (bern->parsed()) return run_bernoulli(b_range, b_even, b_vsc, b_format);
    if (plot->parsed()) return run_plotdata(p_subject, p_xmin, p_xmax, p_step, p_m, p_kmax, p_side, p_digits, p_bits, p_format);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ParamError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
