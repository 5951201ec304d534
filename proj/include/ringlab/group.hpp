#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "ringlab/perm.hpp"

namespace ringlab {

// An enumerated finite permutation group. Element 0 is the identity; the
// remaining elements are in BFS order from the identity, expanding by right
// multiplication with the generators and then their inverses. Immutable once
// built, so tables can be shared freely between threads.
class GroupTable {
 public:
  int degree() const { return degree_; }
  int size() const { return static_cast<int>(elements_.size()); }

  const Perm& element(int i) const { return elements_[i]; }
  const std::vector<Perm>& elements() const { return elements_; }

  // -1 when absent
  int index_of(const Perm& p) const {
    auto it = index_.find(p);
    return it == index_.end() ? -1 : it->second;
  }

  int mul(int a, int b) const {
    return index_.at(elements_[a] * elements_[b]);
  }

  friend GroupTable closure(const std::vector<Perm>& gens, int cap);

 private:
  int degree_ = 0;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, int> index_;
};

// Breadth-first closure of the generators. Throws resource-error when more
// than cap elements appear.
GroupTable closure(const std::vector<Perm>& gens, int cap = 1'000'000);

// |G| / |<gens>|; every generator must lie in G.
long long subgroup_index(const GroupTable& g, const std::vector<Perm>& gens);

// Cayley colour graph: vertex per group element, an edge (x, x*t) for every
// t in T. succ(v) lists the targets in generator order, so edge labels are
// positions in gens().
class CayleyGraph {
 public:
  CayleyGraph(std::shared_ptr<const GroupTable> group, std::vector<Perm> gens);

  const GroupTable& group() const { return *group_; }
  std::shared_ptr<const GroupTable> group_ptr() const { return group_; }
  const std::vector<Perm>& gens() const { return gens_; }
  int size() const { return group_->size(); }
  int out_degree() const { return static_cast<int>(gens_.size()); }

  int succ(int v, int label) const {
    return succ_[static_cast<std::size_t>(v) * gens_.size() + label];
  }

 private:
  std::shared_ptr<const GroupTable> group_;
  std::vector<Perm> gens_;
  std::vector<std::int32_t> succ_;
};

}  // namespace ringlab
