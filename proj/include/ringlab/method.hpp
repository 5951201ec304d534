#pragma once

#include <functional>
#include <vector>

#include "ringlab/perm.hpp"

namespace ringlab {

// A start row plus a sequence of transitions, with the derived row list:
// rows[0] = start, rows[i+1] = apply_to_row(transitions[i], rows[i]).
struct Method {
  int stage = 0;
  Row start;
  std::vector<Perm> transitions;
  std::vector<Row> rows;

  static Method from_transitions(int stage, Row start,
                                 std::vector<Perm> transitions);
};

// The Plain Hunt pair for stage n: X = (1 2)(3 4)..., Y = (2 3)(4 5)...,
// X covering the front pairs and Y offset by one. For even n, X reaches
// (n-1 n) and Y stops at (n-2 n-1); for odd n the other way around.
std::pair<Perm, Perm> hunt_pair(int n);

// All n! arrangements by single adjacent swaps, first and last rounds: the
// plain changes, with bell 1 hunting fastest. Equivalent to weaving the new
// bell through the (n-1)-bell solution; generated iteratively with one
// direction marker per bell. Satisfies rules (1),(2),(3),(4M).
Method sjt_extent(int n, int cap = 10);

// Streaming form for big stages: rows and transitions are emitted as they
// are produced, nothing is stored. on_row sees every row including the
// closing rounds; on_transition sees the change leading into each row.
void sjt_stream(int n, const std::function<void(const Row&)>& on_row,
                const std::function<void(const Perm&)>& on_transition,
                int cap = 10);

// 2n transitions alternating X,Y from rounds back to rounds. Stage >= 3:
// at n=2 the Y of the pair degenerates to the identity, which is not a
// transition.
Method plain_hunt(int n);

// Plain course of Plain Bob on n >= 4 bells: leads of (X,Y) alternated
// 2n-1 times then Z, repeated until rounds; 2n(n-1) transitions.
Method plain_bob_course(int n);

// Plain course of Grandsire on odd n >= 5: leads of Z,Y,(X,Y)^(n-1).
Method grandsire_course(int n);

// Plain course of Christ Church Dublin Differential Doubles: Plain-Bob-shaped
// leads on 5 bells with Z = (1 2); 6 leads, 61 rows.
Method ccdd_course();

}  // namespace ringlab
