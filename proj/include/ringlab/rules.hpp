#pragma once

#include <string>
#include <vector>

#include "ringlab/method.hpp"

namespace ringlab {

// motel: rules (1),(2),(3) plus (4M) -- a single adjacent swap per change.
// ringers: rules (1),(2),(3) plus (4R) -- no bell in one position for three
// successive rows.
enum class Ruleset { motel, ringers };

struct Violation {
  std::string rule;  // "1", "2", "3", "4M", "4R"
  int row_index = 0;
  std::string what;
};

struct ValidationReport {
  Ruleset ruleset = Ruleset::ringers;
  bool passed = false;
  bool is_extent = false;
  std::vector<Violation> violations;
};

// Collects every violation rather than stopping at the first. Rule (2)
// exempts the final row (rounds appears twice); rule (4R) windows wrap
// cyclically when the method returns to its start, since the performance
// repeats.
ValidationReport validate(const Method& m, Ruleset ruleset);

// Passes the ringers rules with exactly n!+1 rows.
bool is_extent(const Method& m);

}  // namespace ringlab
