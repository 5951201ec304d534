#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ringlab/group.hpp"

namespace ringlab {

enum class SearchStatus { found, none, exhausted };

struct SearchStats {
  std::uint64_t expansions = 0;
  double seconds = 0.0;
};

struct HamiltonianResult {
  SearchStatus status = SearchStatus::none;
  std::vector<int> word;  // generator labels, length |G| when found
  SearchStats stats;
};

// A cyclic generator-labelled sequence of distinct group elements:
// elements[i+1] = elements[i] * T[labels[i]], indices mod length, including
// the wrap edge.
struct Chain {
  std::vector<int> elements;
  std::vector<int> labels;
  int length() const { return static_cast<int>(elements.size()); }
};

struct LongestResult {
  Chain best;
  bool optimal = false;  // search ran to completion within budget
  SearchStats stats;
};

struct SearchOptions {
  std::uint64_t budget = 1'000'000'000;  // node expansions
  int workers = 1;
};

// Hamiltonian cycle through the Cayley colour graph, WLOG through the
// identity (the graph is vertex-transitive). `none` is only reported after
// the whole tree has been exhausted; a spent budget reports `exhausted`.
HamiltonianResult hamiltonian_cycle(const CayleyGraph& g,
                                    const SearchOptions& opts = {});

// Longest simple cycle by branch and bound, seeded with greedy walks.
// optimal=false when the budget ran out first.
LongestResult longest_cycle(const CayleyGraph& g,
                            const SearchOptions& opts = {});

// True iff the word's partial products from the identity are pairwise
// distinct and the full product is the identity. Word length must be |G|
// for the unicursal check; any length is accepted for chain checking.
bool verify_word(const GroupTable& g, const std::vector<Perm>& gens,
                 const std::vector<int>& word, bool require_full = true);

// Label strings: generator 0 = 'A', 1 = 'B', ...
std::string word_to_string(const std::vector<int>& word);
std::vector<int> word_from_string(const std::string& s, int ngens);

}  // namespace ringlab
