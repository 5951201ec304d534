#include "ringlab/rules.hpp"

#include <set>

#include "ringlab/notation.hpp"

namespace ringlab {

namespace {

int moved_points(const Perm& p) {
  int c = 0;
  for (int i = 0; i < p.degree(); ++i)
    if (p[i] != i) ++c;
  return c;
}

}  // namespace

ValidationReport validate(const Method& m, Ruleset ruleset) {
  ValidationReport rep;
  rep.ruleset = ruleset;
  const auto& rows = m.rows;
  int last = static_cast<int>(rows.size()) - 1;
  Row rounds = Row::rounds(m.stage);

  if (!(rows.front() == rounds))
    rep.violations.push_back({"1", 0, "first row is not rounds"});
  if (!(rows.back() == rounds))
    rep.violations.push_back({"1", last, "last row is not rounds"});

  // (2): no repeats apart from rounds appearing first and last
  std::set<Row> seen;
  for (int i = 0; i < last; ++i) {
    if (!seen.insert(rows[i]).second)
      rep.violations.push_back({"2", i, "row repeats: " + format_row(rows[i])});
  }

  // (3): every change is a product of disjoint adjacent transpositions
  for (int i = 0; i < static_cast<int>(m.transitions.size()); ++i) {
    if (!is_transition(m.transitions[i]))
      rep.violations.push_back(
          {"3", i + 1,
           "change " + format_cycles(m.transitions[i]) + " is not allowed"});
  }

  if (ruleset == Ruleset::motel) {
    for (int i = 0; i < static_cast<int>(m.transitions.size()); ++i) {
      if (moved_points(m.transitions[i]) != 2)
        rep.violations.push_back(
            {"4M", i + 1, "more than one pair changed place"});
    }
  } else {
    // (4R): directly on row triples; wrap cyclically for round blocks
    bool wraps = rows.front() == rows.back() && last >= 2;
    int period = last;  // rows 0..last-1 repeat cyclically when wrapping
    int windows = wraps ? period : last - 1;
    for (int i = 0; i < windows; ++i) {
      const Row& a = rows[i];
      const Row& b = rows[(i + 1) % (wraps ? period : last + 1)];
      const Row& c = rows[(i + 2) % (wraps ? period : last + 1)];
      for (int pos = 1; pos <= m.stage; ++pos) {
        if (a.bell_at(pos) == b.bell_at(pos) &&
            b.bell_at(pos) == c.bell_at(pos)) {
          rep.violations.push_back(
              {"4R", i,
               "bell " + std::to_string(a.bell_at(pos)) + " stays in position " +
                   std::to_string(pos) + " for three rows"});
        }
      }
    }
  }

  rep.passed = rep.violations.empty();
  long long nfact = 1;
  for (int k = 2; k <= m.stage; ++k) nfact *= k;
  if (ruleset == Ruleset::ringers) {
    rep.is_extent =
        rep.passed && static_cast<long long>(rows.size()) == nfact + 1;
  } else {
    rep.is_extent = false;
  }
  return rep;
}

bool is_extent(const Method& m) {
  return validate(m, Ruleset::ringers).is_extent;
}

}  // namespace ringlab
