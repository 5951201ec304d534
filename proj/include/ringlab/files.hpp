#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ringlab/method.hpp"

namespace ringlab {

// {"stage": n, "name": s, "start_row": "1 2 ... n", "transitions": [...]}
// start_row may be omitted (rounds). Unknown fields are rejected.
struct MethodFile {
  int stage = 0;
  std::string name;
  std::string start_row;  // empty = rounds
  std::vector<std::string> transitions;  // cycle strings

  static MethodFile from_method(const Method& m, const std::string& name);
  Method to_method() const;
};

MethodFile read_method_file(std::istream& in);
void write_method_file(std::ostream& out, const MethodFile& f);

// {"scheme": "plain-bob-6", "leads": ["P","P","B",...]}
struct CompositionFile {
  std::string scheme;
  std::vector<char> leads;
};

CompositionFile read_composition_file(std::istream& in);
void write_composition_file(std::ostream& out, const CompositionFile& f);

}  // namespace ringlab
