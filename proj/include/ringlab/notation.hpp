#pragma once

#include <string>

#include "ringlab/perm.hpp"

namespace ringlab {

// Cycle notation, e.g. "(1 2)(3 4)" or "(2 4 7)(3 6 5)". Points are
// space-separated 1-based integers; "()" is the identity. Cycles need not be
// disjoint: they compose left-to-right.
Perm parse_cycles(const std::string& text, int n);

// Canonical disjoint-cycle form: cycles ordered by smallest element, each
// starting at its smallest element, 1-cycles omitted, identity printed "()".
std::string format_cycles(const Perm& p);

// Rows: "2 1 4 3 5", or contiguous digits "21435" for stages up to 9.
Row parse_row(const std::string& text);
std::string format_row(const Row& r);

}  // namespace ringlab
