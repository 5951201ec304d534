#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ringlab/group.hpp"
#include "ringlab/search.hpp"

namespace ringlab {

// Rankin's theorem, stated for T = {x, y}: if <x^-1 y> has odd order and G
// is generated unicursally by T, then <x> and <y> have odd index in G. The
// oracle applies the contrapositive.
struct RankinVerdict {
  bool impossible = false;  // otherwise inconclusive
  long long order_gamma = 0;
  long long index_x = 0;
  long long index_y = 0;
};

RankinVerdict rankin_oracle(const GroupTable& g, const Perm& x, const Perm& y);

// The left cosets of C = <gamma>, gamma = B * P^-1 -- Thompson's "Q-sets".
// Coset representatives are the minimal-index elements; members of coset c
// are listed as rep * gamma^1, ..., rep * gamma^m (= rep).
class QsetSystem {
 public:
  QsetSystem(std::shared_ptr<const GroupTable> g, Perm p, Perm b);

  const GroupTable& group() const { return *group_; }
  std::shared_ptr<const GroupTable> group_ptr() const { return group_; }
  const Perm& p() const { return p_; }
  const Perm& b() const { return b_; }
  const Perm& gamma() const { return gamma_; }
  int period() const { return period_; }  // |C|
  int coset_count() const { return static_cast<int>(cosets_.size()); }
  int coset_of(int element) const { return coset_of_[element]; }
  const std::vector<int>& coset(int c) const { return cosets_[c]; }

  // element index of rep * gamma^e (e taken mod period, 1-based as in the
  // two-line tables: position period holds the rep itself)
  int member(int c, int exponent) const;

 private:
  std::shared_ptr<const GroupTable> group_;
  Perm p_, b_, gamma_;
  int period_ = 0;
  std::vector<int> coset_of_;
  std::vector<std::vector<int>> cosets_;  // [c][e-1] = rep * gamma^e
};

enum class CosetLabel { all_p, all_b, mixed };

// A set of disjoint generator-labelled cyclic chains partitioning the group,
// stored as the generator acting on each element (0 = P, 1 = B). The chains
// are the cycles of succ(v) = v * act(v); that map is a bijection exactly
// when every Q-set is uniformly labelled (Lemma 1).
class ChainCover {
 public:
  ChainCover(std::shared_ptr<const QsetSystem> sys, std::vector<std::uint8_t> act);

  // every coset traversed by P: the chains are the left cosets of <P>
  static ChainCover all_p(std::shared_ptr<const QsetSystem> sys);

  // single chain from a Hamiltonian word over {P, B}
  static ChainCover from_word(std::shared_ptr<const QsetSystem> sys,
                              const std::vector<int>& word);

  // from explicit chains; validates the partition and the label equations
  static ChainCover from_chains(std::shared_ptr<const QsetSystem> sys,
                                const std::vector<Chain>& chains);

  const QsetSystem& sys() const { return *sys_; }
  int act(int element) const { return act_[element]; }
  int succ(int element) const;

  CosetLabel coset_label(int c) const;

  // succ is a bijection and its cycles respect the stored labels
  bool valid() const;

  std::vector<Chain> chains() const;
  int chain_count() const;

  // sigma(x): position i (1..|C|) maps to k_i, where rep*gamma^{k_i} is the
  // next member of the coset met along its chain after rep*gamma^i. For a
  // P-labelled coset the roles of P and B swap and exponents run over
  // gamma^-1. tau is sigma precomposed with the cyclic shift: tau(i) =
  // k_{i-1}; its cycle count predicts the chain count after rearranging.
  Perm sigma(int c) const;
  Perm tau(int c) const;

  // Redirect every member of the coset to its other generator: a B-coset
  // becomes P-acted (the segment permutation of Rankin's argument) and
  // vice versa. Everything else is untouched.
  ChainCover rearrange(int c) const;

 private:
  std::shared_ptr<const QsetSystem> sys_;
  std::vector<std::uint8_t> act_;
};

struct AuditStep {
  int coset = 0;
  CosetLabel before = CosetLabel::all_p;
  CosetLabel after = CosetLabel::all_p;
  int chains_before = 0;
  int chains_after = 0;
  int sigma_cycles = 0;
  int tau_cycles = 0;
  bool lemma3_ok = false;     // the coset's acting generator flipped
  bool lemma6_ok = false;     // rot * tau == sigma
  bool count_law_ok = false;  // after == before - sigma_cycles + tau_cycles
  bool parity_ok = false;     // delta == |C|-1 (mod 2)
};

struct AuditReport {
  int start_chains = 0;
  int final_chains = 0;
  int period = 0;
  std::vector<AuditStep> steps;
  bool parity_law_held = true;
  bool lemma3_held = true;
  bool lemma6_held = true;
  bool count_law_held = true;
  // For odd |C| and even index(<P>): chain-count parity is invariant, so a
  // single chain is unreachable from the all-P cover (Thompson's theorem).
  std::string conclusion;
};

// Replays a trace of coset rearrangements from the all-P cover, checking the
// Lemma 3/5/6 bookkeeping and the parity law at every step.
AuditReport parity_audit(std::shared_ptr<const GroupTable> g, const Perm& p,
                         const Perm& b, const std::vector<int>& trace);

// cycle count including fixed points, as "cycles" is used in Lemmas 5-8
int cycle_count(const Perm& p);

}  // namespace ringlab
