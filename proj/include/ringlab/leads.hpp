#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/group.hpp"
#include "ringlab/method.hpp"
#include "ringlab/search.hpp"

namespace ringlab {

enum class LeadFamily { plain_bob, grandsire, ccdd };

// One lead = one fixed transition word per label. P is the lead-head
// permutation of a plain lead (the product of plain_word); B is the named
// bob lead-head permutation. For end-call families (Plain Bob, CCDD) the
// bob word ends in W instead of Z, so its product is P*B; for Grandsire
// the call replaces the last X mid-lead and the bob word's product is B
// itself. Lead-head chains always step by the word products.
struct LeadScheme {
  LeadFamily family;
  int stage = 0;
  std::vector<Perm> plain_word;
  std::vector<Perm> bob_word;  // empty when the family/stage has no bob
  Perm P;                      // product of plain_word
  Perm B;                      // named bob lead-head permutation
  Perm step_bob;               // product of bob_word

  bool has_bob() const { return !bob_word.empty(); }
  int lead_length() const { return static_cast<int>(plain_word.size()); }
  std::string id() const;  // "plain-bob-6", "grandsire-7", "ccdd-5"
};

LeadScheme lead_scheme(LeadFamily family, int stage);
LeadScheme lead_scheme(const std::string& id);  // parses "family-stage"

// Concatenates the per-lead words starting from rounds. Labels: 'P' or 'B'.
Method expand_leads(const LeadScheme& s, const std::vector<char>& leads);

// The plain course: P repeated order(P) times.
Method plain_course(const LeadScheme& s);

struct LeadheadGraph {
  CayleyGraph graph;                 // closure of the lead steps, T indexed P=0, B=1
  bool is_full_alternating = false;  // closure == A_{n-1} on the working bells
};

LeadheadGraph leadhead_graph(const LeadScheme& s);

// Chain of lead heads <-> composition translation. The chain steps by the
// lead-word products; a composition must close (product of lead perms =
// identity) and is read from the identity when the chain contains it.
Chain composition_to_chain(const LeadScheme& s, const std::vector<char>& leads);
std::vector<char> chain_to_composition(const Chain& c);

// Longest sequence of leads forming a valid method (rows pairwise distinct,
// returning to the start). Conflicts are checked on the actual row sets of
// each lead; reachability pruning uses the hunting-subgroup coset classes,
// which distinct leads can never share.
struct MethodChainResult {
  int leads = 0;
  std::vector<char> labels;
  bool optimal = false;
  SearchStats stats;
};

MethodChainResult longest_method_chain(const LeadScheme& s,
                                       const SearchOptions& opts = {});

enum class FeasibilityKind { possible, impossible, unknown };

struct RankinFields {
  long long order_gamma = 0;
  long long index_p = 0;
  long long index_b = 0;
};

struct FeasibilityVerdict {
  FeasibilityKind kind = FeasibilityKind::unknown;
  std::string test;  // which test fired
  long long bound_leads = 0;
  long long bound_rows = 0;
  std::vector<char> witness;  // for possible
  RankinFields rankin;        // filled when the oracle fired
};

struct FeasibilityOptions {
  int vertex_cap = 120;  // exhaustive search allowed up to this group order
  std::uint64_t budget = 1'000'000'000;
};

// Can this scheme ring an extent with plain and bob leads? Tests run
// cheapest first: (a) all transitions even caps the method at |A_n| rows;
// (b) the lead-parity argument caps it at |A_{n-1}|/2 leads; (c) Rankin's
// oracle on the lead steps; (d) exhaustive lead-level search under the
// vertex cap. Each verdict names the test that fired.
FeasibilityVerdict extent_feasibility(const LeadScheme& s,
                                      const FeasibilityOptions& opts = {});

}  // namespace ringlab
