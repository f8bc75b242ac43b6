// Certifies the two-sided bound with base 3 for k = 1..12 and prints beta.

#include <iomanip>
#include <iostream>

#include "bernbound/bernbound.hpp"
#include "bernbound/report.hpp"

int main() {
  using namespace bernbound;
  const Constants c = compute_constants(192);
  std::cout << "beta  = " << report::truncated_fixed(c.beta.lower(), 30) << "...\n";
  std::cout << "beta / (2^delta - 1) = 3 exactly: " << std::boolalpha << c.ratio_exactly_three << "\n";

  const BoundSpec lower = make_spec(BoundId::BestConstLower);
  const BoundSpec upper = make_spec(BoundId::BestConstUpper);
  for (long k = 1; k <= 12; ++k) {
    const Verdict lo = verify(lower, k);
    const Verdict hi = verify(upper, k);
    std::cout << "k=" << std::setw(2) << k << "  lower: " << to_string(lo.status) << "  upper: " << to_string(hi.status) << "\n";
  }
}
