#include "ringlab/group.hpp"

namespace ringlab {

GroupTable closure(const std::vector<Perm>& gens, int cap) {
  if (gens.empty()) throw error("invalid-degree", "no generators");
  int degree = gens[0].degree();
  for (const Perm& g : gens) require_same_degree(gens[0], g);

  std::vector<Perm> expand = gens;
  for (const Perm& g : gens) expand.push_back(g.inverse());

  GroupTable t;
  t.degree_ = degree;
  t.elements_.push_back(Perm::identity(degree));
  t.index_.emplace(t.elements_[0], 0);
  for (std::size_t head = 0; head < t.elements_.size(); ++head) {
    Perm cur = t.elements_[head];  // copy: elements_ may reallocate
    for (const Perm& g : expand) {
      Perm next = cur * g;
      if (t.index_.count(next)) continue;
      if (static_cast<int>(t.elements_.size()) >= cap)
        throw error("resource-error",
                    "closure exceeded cap of " + std::to_string(cap));
      t.index_.emplace(next, static_cast<int>(t.elements_.size()));
      t.elements_.push_back(std::move(next));
    }
  }
  return t;
}

long long subgroup_index(const GroupTable& g, const std::vector<Perm>& gens) {
  for (const Perm& x : gens)
    if (g.index_of(x) < 0)
      throw error("membership-error",
                  "generator not an element of the group");
  GroupTable h = closure(gens, g.size() + 1);
  return static_cast<long long>(g.size()) / h.size();
}

CayleyGraph::CayleyGraph(std::shared_ptr<const GroupTable> group,
                         std::vector<Perm> gens)
    : group_(std::move(group)), gens_(std::move(gens)) {
  succ_.resize(static_cast<std::size_t>(group_->size()) * gens_.size());
  for (int v = 0; v < group_->size(); ++v) {
    for (std::size_t t = 0; t < gens_.size(); ++t) {
      int w = group_->index_of(group_->element(v) * gens_[t]);
      if (w < 0)
        throw error("membership-error", "generator leaves the group");
      succ_[static_cast<std::size_t>(v) * gens_.size() + t] = w;
    }
  }
}

}  // namespace ringlab
