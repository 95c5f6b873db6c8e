#pragma once

#include <cstdlib>
#include <string>

#include "grouplike/errors.hpp"

namespace grouplike {

/* Search budgets. Combinatorial searches (equivariant-map backtracking,
 * invertible-intertwiner hunts) are capped so that malformed inputs fail fast
 * instead of wandering. The cap can be raised via the GROUPLIKE_BUDGET
 * environment variable; everything in the test suite fits in the default. */
struct Budget {
  long long nodes = 1 << 20;      // backtracking nodes per search
  long long carrier_cap = 4096;   // largest carrier an iso search will accept

  static Budget from_env() {
    Budget b;
    if (const char* s = std::getenv("GROUPLIKE_BUDGET")) {
      char* end = nullptr;
      long long v = std::strtoll(s, &end, 10);
      if (end != s && v > 0) b.nodes = v;
    }
    return b;
  }
};

class BudgetMeter {
public:
  explicit BudgetMeter(const Budget& b) : left_(b.nodes) {}

  void spend(const char* what) {
    if (--left_ < 0) fail("BudgetExceeded", std::string("search budget exhausted in ") + what);
  }

private:
  long long left_;
};

} // namespace grouplike
