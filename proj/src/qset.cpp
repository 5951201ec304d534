#include "ringlab/qset.hpp"

#include <algorithm>

namespace ringlab {

RankinVerdict rankin_oracle(const GroupTable& g, const Perm& x, const Perm& y) {
  GroupTable gen = closure({x, y}, g.size() + 1);
  if (gen.size() != g.size())
    throw error("generation-error",
                "{x, y} generates a subgroup of order " +
                    std::to_string(gen.size()) + ", not the whole group");
  RankinVerdict v;
  v.order_gamma = order(x.inverse() * y);
  v.index_x = g.size() / order(x);
  v.index_y = g.size() / order(y);
  v.impossible =
      v.order_gamma % 2 == 1 && (v.index_x % 2 == 0 || v.index_y % 2 == 0);
  return v;
}

QsetSystem::QsetSystem(std::shared_ptr<const GroupTable> g, Perm p, Perm b)
    : group_(std::move(g)), p_(std::move(p)), b_(std::move(b)),
      gamma_(b_ * p_.inverse()) {
  period_ = static_cast<int>(order(gamma_));
  int n = group_->size();
  coset_of_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    if (coset_of_[i] >= 0) continue;
    int c = static_cast<int>(cosets_.size());
    std::vector<int> members;
    Perm cur = group_->element(i);
    for (int e = 1; e <= period_; ++e) {
      cur = cur * gamma_;
      int idx = group_->index_of(cur);
      if (idx < 0) throw error("membership-error", "gamma leaves the group");
      coset_of_[idx] = c;
      members.push_back(idx);
    }
    cosets_.push_back(std::move(members));
  }
}

int QsetSystem::member(int c, int exponent) const {
  int m = period_;
  int e = ((exponent - 1) % m + m) % m;  // to 0..m-1 with position m = rep
  return cosets_[c][e];
}

ChainCover::ChainCover(std::shared_ptr<const QsetSystem> sys,
                       std::vector<std::uint8_t> act)
    : sys_(std::move(sys)), act_(std::move(act)) {
  if (static_cast<int>(act_.size()) != sys_->group().size())
    throw error("label-error", "one acting generator per element required");
}

ChainCover ChainCover::all_p(std::shared_ptr<const QsetSystem> sys) {
  std::vector<std::uint8_t> act(sys->group().size(), 0);
  return ChainCover(std::move(sys), std::move(act));
}

ChainCover ChainCover::from_word(std::shared_ptr<const QsetSystem> sys,
                                 const std::vector<int>& word) {
  const GroupTable& g = sys->group();
  if (static_cast<int>(word.size()) != g.size())
    throw error("word-error", "word must visit every element once");
  std::vector<std::uint8_t> act(g.size(), 0);
  std::vector<char> seen(g.size(), 0);
  Perm cur = Perm::identity(g.degree());
  for (int lab : word) {
    if (lab != 0 && lab != 1) throw error("word-error", "label must be P or B");
    int idx = g.index_of(cur);
    act[idx] = static_cast<std::uint8_t>(lab);
    if (seen[idx]) throw error("word-error", "word repeats an element");
    seen[idx] = 1;
    cur = cur * (lab == 0 ? sys->p() : sys->b());
  }
  if (!cur.is_identity())
    throw error("word-error", "word does not return to the identity");
  return ChainCover(std::move(sys), std::move(act));
}

ChainCover ChainCover::from_chains(std::shared_ptr<const QsetSystem> sys,
                                   const std::vector<Chain>& chains) {
  const GroupTable& g = sys->group();
  std::vector<std::uint8_t> act(g.size(), 0);
  std::vector<char> seen(g.size(), 0);
  for (const Chain& ch : chains) {
    if (ch.elements.empty() || ch.elements.size() != ch.labels.size())
      throw error("label-error", "chain needs one label per element");
    for (std::size_t i = 0; i < ch.elements.size(); ++i) {
      int v = ch.elements[i];
      int lab = ch.labels[i];
      int w = ch.elements[(i + 1) % ch.elements.size()];
      if (lab != 0 && lab != 1)
        throw error("label-error", "label must be P or B");
      const Perm& t = lab == 0 ? sys->p() : sys->b();
      if (g.index_of(g.element(v) * t) != w)
        throw error("label-error", "label equation violated in chain");
      if (seen[v]) throw error("label-error", "chains overlap");
      seen[v] = 1;
      act[v] = static_cast<std::uint8_t>(lab);
    }
  }
  for (char s : seen)
    if (!s) throw error("label-error", "chains do not cover the group");
  return ChainCover(std::move(sys), std::move(act));
}

int ChainCover::succ(int element) const {
  const GroupTable& g = sys_->group();
  const Perm& t = act_[element] == 0 ? sys_->p() : sys_->b();
  return g.index_of(g.element(element) * t);
}

CosetLabel ChainCover::coset_label(int c) const {
  const auto& members = sys_->coset(c);
  bool sawp = false, sawb = false;
  for (int v : members) (act_[v] == 0 ? sawp : sawb) = true;
  if (sawp && sawb) return CosetLabel::mixed;
  return sawp ? CosetLabel::all_p : CosetLabel::all_b;
}

bool ChainCover::valid() const {
  int n = sys_->group().size();
  std::vector<char> hit(n, 0);
  for (int v = 0; v < n; ++v) {
    int w = succ(v);
    if (hit[w]) return false;  // two chains merge: not a partition
    hit[w] = 1;
  }
  return true;
}

std::vector<Chain> ChainCover::chains() const {
  int n = sys_->group().size();
  std::vector<char> seen(n, 0);
  std::vector<Chain> out;
  for (int v0 = 0; v0 < n; ++v0) {
    if (seen[v0]) continue;
    Chain ch;
    int v = v0;
    while (!seen[v]) {
      seen[v] = 1;
      ch.elements.push_back(v);
      ch.labels.push_back(act_[v]);
      v = succ(v);
    }
    out.push_back(std::move(ch));
  }
  return out;
}

int ChainCover::chain_count() const {
  int n = sys_->group().size();
  std::vector<char> seen(n, 0);
  int count = 0;
  for (int v0 = 0; v0 < n; ++v0) {
    if (seen[v0]) continue;
    ++count;
    int v = v0;
    while (!seen[v]) {
      seen[v] = 1;
      v = succ(v);
    }
  }
  return count;
}

Perm ChainCover::sigma(int c) const {
  CosetLabel lab = coset_label(c);
  if (lab == CosetLabel::mixed)
    throw error("label-error", "coset is not uniformly labelled");
  // Exponents run over gamma for a B-coset, gamma^-1 when the roles of P and
  // B are swapped (rearranging a P-coset toward B).
  const GroupTable& g = sys_->group();
  int m = sys_->period();
  Perm step = lab == CosetLabel::all_b ? sys_->gamma() : sys_->gamma().inverse();
  int rep = sys_->coset(c).back();  // rep = rep * gamma^m
  std::vector<int> at_exp(m + 1, -1);
  std::vector<int> exp_of(g.size(), -1);
  Perm cur = g.element(rep);
  for (int e = 1; e <= m; ++e) {
    cur = cur * step;
    int idx = g.index_of(cur);
    at_exp[e] = idx;
    exp_of[idx] = e;
  }
  std::vector<std::uint8_t> img(m);
  for (int e = 1; e <= m; ++e) {
    int v = succ(at_exp[e]);
    int hops = 0;
    while (exp_of[v] < 0) {
      v = succ(v);
      if (++hops > g.size())
        throw error("label-error", "cover is not a valid chain partition");
    }
    img[e - 1] = static_cast<std::uint8_t>(exp_of[v] - 1);
  }
  return Perm::from_images(std::move(img));
}

Perm ChainCover::tau(int c) const {
  // tau(i) = k_{i-1}: sigma preceded by the backward cyclic shift
  Perm s = sigma(c);
  int m = s.degree();
  std::vector<std::uint8_t> img(m);
  for (int i = 0; i < m; ++i) img[i] = s[(i + m - 1) % m];
  return Perm::from_images(std::move(img));
}

ChainCover ChainCover::rearrange(int c) const {
  CosetLabel lab = coset_label(c);
  if (lab == CosetLabel::mixed)
    throw error("label-error", "coset is not uniformly labelled");
  std::vector<std::uint8_t> act = act_;
  std::uint8_t flipped = lab == CosetLabel::all_b ? 0 : 1;
  for (int v : sys_->coset(c)) act[v] = flipped;
  return ChainCover(sys_, std::move(act));
}

int cycle_count(const Perm& p) {
  int n = p.degree(), count = 0;
  std::vector<char> seen(n, 0);
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    ++count;
    int j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = p[j];
    }
  }
  return count;
}

AuditReport parity_audit(std::shared_ptr<const GroupTable> g, const Perm& p,
                         const Perm& b, const std::vector<int>& trace) {
  auto sys = std::make_shared<QsetSystem>(std::move(g), p, b);
  ChainCover cover = ChainCover::all_p(sys);
  AuditReport rep;
  rep.period = sys->period();
  rep.start_chains = cover.chain_count();
  int m = sys->period();
  Perm rot_img = [&] {
    std::vector<std::uint8_t> img(m);
    for (int i = 0; i < m; ++i) img[i] = static_cast<std::uint8_t>((i + 1) % m);
    return Perm::from_images(std::move(img));
  }();
  int chains = rep.start_chains;
  for (int c : trace) {
    if (c < 0 || c >= sys->coset_count())
      throw error("label-error", "trace names a nonexistent coset");
    AuditStep step;
    step.coset = c;
    step.before = cover.coset_label(c);
    step.chains_before = chains;
    Perm sg = cover.sigma(c);
    Perm tu = cover.tau(c);
    step.sigma_cycles = cycle_count(sg);
    step.tau_cycles = cycle_count(tu);
    step.lemma6_ok = (rot_img * tu) == sg;
    cover = cover.rearrange(c);
    chains = cover.chain_count();
    step.after = cover.coset_label(c);
    step.lemma3_ok = step.after != step.before &&
                     step.after != CosetLabel::mixed;
    step.chains_after = chains;
    step.count_law_ok =
        chains == step.chains_before - step.sigma_cycles + step.tau_cycles;
    step.parity_ok = ((chains - step.chains_before) % 2 + 2) % 2 ==
                     (m - 1) % 2;
    rep.lemma3_held = rep.lemma3_held && step.lemma3_ok;
    rep.lemma6_held = rep.lemma6_held && step.lemma6_ok;
    rep.count_law_held = rep.count_law_held && step.count_law_ok;
    rep.parity_law_held = rep.parity_law_held && step.parity_ok;
    rep.steps.push_back(step);
  }
  rep.final_chains = chains;
  long long index_p = sys->group().size() / order(p);
  if (m % 2 == 1) {
    rep.conclusion =
        index_p % 2 == 0
            ? "chain-count parity is invariant and starts even: no single "
              "chain is reachable (Thompson)"
            : "chain-count parity is invariant and starts odd";
  } else {
    rep.conclusion = "chain-count parity flips on every rearrangement";
  }
  return rep;
}

}  // namespace ringlab
