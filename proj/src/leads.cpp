#include "ringlab/leads.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_map>

#include "ringlab/notation.hpp"
#include "ringlab/qset.hpp"

namespace ringlab {

namespace {

Perm adjacent_swaps(int n, const std::vector<int>& firsts) {
  std::vector<std::uint8_t> img(n);
  for (int i = 0; i < n; ++i) img[i] = static_cast<std::uint8_t>(i);
  for (int f : firsts) {
    img[f - 1] = static_cast<std::uint8_t>(f);
    img[f] = static_cast<std::uint8_t>(f - 1);
  }
  return Perm::from_images(std::move(img));
}

Perm product(const std::vector<Perm>& word) {
  Perm acc = Perm::identity(word.at(0).degree());
  for (const Perm& t : word) acc = acc * t;
  return acc;
}

const char* family_name(LeadFamily f) {
  switch (f) {
    case LeadFamily::plain_bob: return "plain-bob";
    case LeadFamily::grandsire: return "grandsire";
    case LeadFamily::ccdd: return "ccdd";
  }
  return "?";
}

}  // namespace

std::string LeadScheme::id() const {
  return std::string(family_name(family)) + "-" + std::to_string(stage);
}

LeadScheme lead_scheme(LeadFamily family, int stage) {
  LeadScheme s;
  s.family = family;
  s.stage = stage;
  int n = stage;
  auto [X, Y] = hunt_pair(n);
  switch (family) {
    case LeadFamily::plain_bob: {
      if (n < 4) throw error("scheme-error", "plain bob needs >= 4 bells");
      // Z fixes 1,2 (even n) or 1,2,n (odd n)
      std::vector<int> zf;
      for (int f = 3; f + 1 <= n - (n % 2); f += 2) zf.push_back(f);
      Perm Z = adjacent_swaps(n, zf);
      for (int i = 0; i < 2 * n - 1; ++i)
        s.plain_word.push_back(i % 2 == 0 ? X : Y);
      s.plain_word.push_back(Z);
      if (n >= 6 && n % 2 == 0) {
        // W fixes 1 and 4: (2 3)(5 6)(7 8)...
        std::vector<int> wf{2};
        for (int f = 5; f + 1 <= n; f += 2) wf.push_back(f);
        Perm W = adjacent_swaps(n, wf);
        s.bob_word = s.plain_word;
        s.bob_word.back() = W;
        s.B = Z.inverse() * W;
      }
      break;
    }
    case LeadFamily::grandsire: {
      if (n < 5 || n % 2 == 0)
        throw error("scheme-error", "grandsire needs an odd stage >= 5");
      // Z = (1 2)(4 5)(6 7)... fixes position 3
      std::vector<int> zf{1};
      for (int f = 4; f + 1 <= n; f += 2) zf.push_back(f);
      Perm Z = adjacent_swaps(n, zf);
      s.plain_word = {Z, Y};
      for (int i = 0; i < n - 1; ++i) {
        s.plain_word.push_back(X);
        s.plain_word.push_back(Y);
      }
      // the bob replaces the last X (two places before the next Z)
      s.bob_word = s.plain_word;
      s.bob_word[s.bob_word.size() - 2] = Z;
      break;
    }
    case LeadFamily::ccdd: {
      if (n != 5) throw error("scheme-error", "ccdd is a 5-bell method");
      Perm Z = adjacent_swaps(n, {1});
      Perm W = adjacent_swaps(n, {3});
      for (int i = 0; i < 2 * n - 1; ++i)
        s.plain_word.push_back(i % 2 == 0 ? X : Y);
      s.plain_word.push_back(Z);
      s.bob_word = s.plain_word;
      s.bob_word.back() = W;
      s.B = Z.inverse() * W;
      break;
    }
  }
  s.P = product(s.plain_word);
  if (s.has_bob()) {
    s.step_bob = product(s.bob_word);
    if (s.family == LeadFamily::grandsire) s.B = s.step_bob;
  }
  return s;
}

LeadScheme lead_scheme(const std::string& id) {
  auto dash = id.rfind('-');
  if (dash == std::string::npos)
    throw error("scheme-error", "bad scheme id '" + id + "'");
  std::string fam = id.substr(0, dash);
  int stage;
  try {
    stage = std::stoi(id.substr(dash + 1));
  } catch (...) {
    throw error("scheme-error", "bad stage in scheme id '" + id + "'");
  }
  if (fam == "plain-bob") return lead_scheme(LeadFamily::plain_bob, stage);
  if (fam == "grandsire") return lead_scheme(LeadFamily::grandsire, stage);
  if (fam == "ccdd") return lead_scheme(LeadFamily::ccdd, stage);
  throw error("scheme-error", "unknown family '" + fam + "'");
}

Method expand_leads(const LeadScheme& s, const std::vector<char>& leads) {
  if (leads.empty()) throw error("composition-error", "no leads");
  std::vector<Perm> word;
  word.reserve(leads.size() * s.plain_word.size());
  for (char l : leads) {
    if (l == 'P') {
      word.insert(word.end(), s.plain_word.begin(), s.plain_word.end());
    } else if (l == 'B') {
      if (!s.has_bob())
        throw error("composition-error",
                    s.id() + " has no bob lead; alphabet is {P}");
      word.insert(word.end(), s.bob_word.begin(), s.bob_word.end());
    } else {
      throw error("composition-error",
                  std::string("unknown lead label '") + l + "'");
    }
  }
  return Method::from_transitions(s.stage, Row::rounds(s.stage),
                                  std::move(word));
}

Method plain_course(const LeadScheme& s) {
  std::vector<char> leads(static_cast<std::size_t>(order(s.P)), 'P');
  return expand_leads(s, leads);
}

LeadheadGraph leadhead_graph(const LeadScheme& s) {
  std::vector<Perm> steps{s.P};
  if (s.has_bob()) steps.push_back(s.step_bob);
  auto table = std::make_shared<GroupTable>(closure(steps));
  LeadheadGraph out{CayleyGraph(table, steps), false};
  // working-bell alternating group: bell 1 is dropped from lead heads
  long long an = 1;
  for (int k = 2; k <= s.stage - 1; ++k) an *= k;
  an /= 2;
  bool all_even = true;
  bool fixes_one = true;
  for (const Perm& t : steps) {
    all_even = all_even && is_even(t);
    fixes_one = fixes_one && t.at(1) == 1;
  }
  out.is_full_alternating = fixes_one && all_even && table->size() == an;
  return out;
}

Chain composition_to_chain(const LeadScheme& s, const std::vector<char>& leads) {
  if (leads.empty()) throw error("composition-error", "no leads");
  Chain c;
  Perm cur = Perm::identity(s.stage);
  std::vector<Perm> heads;
  for (char l : leads) {
    if (l == 'P') {
      c.labels.push_back(0);
      cur = cur * s.P;
    } else if (l == 'B' && s.has_bob()) {
      c.labels.push_back(1);
      cur = cur * s.step_bob;
    } else {
      throw error("composition-error",
                  std::string("unknown lead label '") + l + "'");
    }
    heads.push_back(cur);
  }
  if (!cur.is_identity())
    throw error("closure-error",
                "composition does not return to rounds; residual lead-head "
                "permutation " + format_cycles(cur));
  // lead heads must be pairwise distinct for the chain to be simple
  LeadheadGraph lg = leadhead_graph(s);
  const GroupTable& g = lg.graph.group();
  std::vector<char> used(g.size(), 0);
  c.elements.push_back(0);  // identity: chains are read from rounds
  used[0] = 1;
  for (std::size_t i = 0; i + 1 < heads.size(); ++i) {
    int idx = g.index_of(heads[i]);
    if (idx < 0 || used[idx])
      throw error("closure-error", "composition repeats a lead head");
    used[idx] = 1;
    c.elements.push_back(idx);
  }
  return c;
}

std::vector<char> chain_to_composition(const Chain& c) {
  if (c.elements.empty()) throw error("closure-error", "empty chain");
  // rotate so the identity (element 0) leads when present
  std::size_t start = 0;
  for (std::size_t i = 0; i < c.elements.size(); ++i)
    if (c.elements[i] == 0) {
      start = i;
      break;
    }
  std::vector<char> out;
  out.reserve(c.labels.size());
  for (std::size_t i = 0; i < c.labels.size(); ++i)
    out.push_back(c.labels[(start + i) % c.labels.size()] == 0 ? 'P' : 'B');
  return out;
}

namespace {

// Lead-level search state: vertices are lead heads in the step closure;
// choosing a label from head g rings the rows g * prefix for every proper
// prefix of that label's word (the lead's own rows), and moves the head to
// g * product(word). Validity is exact row occupancy; the pruning bound
// uses hunting-coset classes, which two disjoint leads can never share.
struct LeadSearch {
  const LeadScheme& s;
  std::shared_ptr<const GroupTable> heads;
  std::vector<std::vector<int>> head_succ;       // [v][label]
  std::vector<std::vector<std::vector<int>>> lead_rows;  // [v][label] -> row ids
  std::vector<int> clazz;                        // coset class per head
  int nclasses = 0;
  std::vector<char> row_used;
  std::vector<char> class_used;
  std::vector<char> head_seen;
  std::uint64_t budget = 0, expansions = 0;
  bool out_of_budget = false;
  int best = 0;
  std::vector<char> best_labels;
  std::vector<char> cur_labels;
  std::vector<int> scratch_stamp;
  int stamp = 0;

  explicit LeadSearch(const LeadScheme& scheme) : s(scheme) {
    std::vector<Perm> steps{s.P};
    if (s.has_bob()) steps.push_back(s.step_bob);
    heads = std::make_shared<GroupTable>(closure(steps));
    int nv = heads->size();
    int nl = s.has_bob() ? 2 : 1;

    // intern all rows any lead can ring
    std::unordered_map<Perm, int> row_id;
    auto intern = [&](const Perm& p) {
      return row_id.emplace(p, static_cast<int>(row_id.size())).first->second;
    };
    std::vector<std::vector<Perm>> prefix_sets(nl);
    for (int l = 0; l < nl; ++l) {
      const auto& word = l == 0 ? s.plain_word : s.bob_word;
      Perm cur = Perm::identity(s.stage);
      prefix_sets[l].push_back(cur);  // the lead owns its starting row
      for (std::size_t i = 0; i + 1 < word.size(); ++i) {
        cur = cur * word[i];
        prefix_sets[l].push_back(cur);
      }
    }
    head_succ.assign(nv, std::vector<int>(nl));
    lead_rows.assign(nv, {});
    for (int v = 0; v < nv; ++v) {
      lead_rows[v].resize(nl);
      const Perm& g = heads->element(v);
      for (int l = 0; l < nl; ++l) {
        head_succ[v][l] =
            heads->index_of(g * (l == 0 ? s.P : s.step_bob));
        for (const Perm& pre : prefix_sets[l])
          lead_rows[v][l].push_back(intern(g * pre));
      }
    }
    row_used.assign(row_id.size(), 0);

    // coset classes: heads whose plain leads share rows share a class
    auto [X, Y] = hunt_pair(s.stage);
    GroupTable hunt = closure({X, Y});
    const Perm& t1 = s.plain_word.front();
    std::unordered_map<Perm, int> class_of_min;
    clazz.assign(nv, -1);
    for (int v = 0; v < nv; ++v) {
      Perm base = heads->element(v) * t1;
      Perm best_rep = base;
      for (int h = 0; h < hunt.size(); ++h) {
        Perm cand = base * hunt.element(h);
        if (cand < best_rep) best_rep = cand;
      }
      auto [it, fresh] = class_of_min.emplace(best_rep, nclasses);
      if (fresh) ++nclasses;
      clazz[v] = it->second;
    }
    class_used.assign(nclasses, 0);
    head_seen.assign(nv, 0);
    scratch_stamp.assign(nv, 0);
  }

  int labels_count() const { return s.has_bob() ? 2 : 1; }

  bool lead_free(int v, int l) const {
    for (int r : lead_rows[v][l])
      if (row_used[r]) return false;
    return true;
  }
  void take(int v, int l) {
    for (int r : lead_rows[v][l]) row_used[r] = 1;
    class_used[clazz[v]] = 1;
    head_seen[v] = 1;
  }
  void drop(int v, int l) {
    for (int r : lead_rows[v][l]) row_used[r] = 0;
    class_used[clazz[v]] = 0;
    head_seen[v] = 0;
  }

  // distinct unused classes reachable from head through unseen heads in
  // unused classes, plus whether the identity head is reachable
  std::pair<int, bool> reach(int head) {
    ++stamp;
    scratch_stamp[head] = stamp;
    std::vector<int> queue{head};
    std::vector<char> cls(nclasses, 0);
    int count = 0;
    bool can_close = false;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (int l = 0; l < labels_count(); ++l) {
        int w = head_succ[v][l];
        if (w == 0) can_close = true;
        if (scratch_stamp[w] == stamp || head_seen[w] || class_used[clazz[w]])
          continue;
        scratch_stamp[w] = stamp;
        queue.push_back(w);
        if (!cls[clazz[w]]) {
          cls[clazz[w]] = 1;
          ++count;
        }
      }
    }
    return {count, can_close};
  }

  void dfs(int head, int depth) {
    if (++expansions > budget) {
      out_of_budget = true;
      return;
    }
    auto [reachable, can_close] = reach(head);
    if (!can_close && depth > 0) return;
    if (depth + reachable + 1 <= best && depth > 0) return;
    for (int l = 0; l < labels_count(); ++l) {
      if (out_of_budget) return;
      if (!lead_free(head, l)) continue;
      int w = head_succ[head][l];
      cur_labels.push_back(l == 0 ? 'P' : 'B');
      take(head, l);
      if (w == 0) {
        if (depth + 1 > best) {
          best = depth + 1;
          best_labels = cur_labels;
        }
      } else if (!head_seen[w]) {
        dfs(w, depth + 1);
      }
      drop(head, l);
      cur_labels.pop_back();
    }
  }
};

}  // namespace

MethodChainResult longest_method_chain(const LeadScheme& s,
                                       const SearchOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  LeadSearch ls(s);
  ls.budget = opts.budget;
  ls.dfs(0, 0);
  MethodChainResult r;
  r.leads = ls.best;
  r.labels = ls.best_labels;
  r.optimal = !ls.out_of_budget;
  r.stats.expansions = ls.expansions;
  r.stats.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return r;
}

FeasibilityVerdict extent_feasibility(const LeadScheme& s,
                                      const FeasibilityOptions& opts) {
  FeasibilityVerdict v;
  int n = s.stage;
  long long nfact = 1;
  for (int k = 2; k <= n; ++k) nfact *= k;
  long long lead_len = s.lead_length();
  long long target_leads = nfact / lead_len;

  // (a) all transitions even: every row is an even rearrangement of rounds
  bool all_even = true;
  for (const Perm& t : s.plain_word) all_even = all_even && is_even(t);
  for (const Perm& t : s.bob_word) all_even = all_even && is_even(t);
  if (all_even) {
    v.kind = FeasibilityKind::impossible;
    v.test = "even-transitions";
    v.bound_rows = nfact / 2;
    v.bound_leads = v.bound_rows / lead_len;
    return v;
  }

  // (b) lead parity: even lead steps land every lead head on an even
  // rearrangement of the working bells, and an even final transition makes
  // the row before it even too -- two of the |A_{n-1}| candidates per lead.
  if (s.has_bob()) {
    bool steps_fix_one = s.P.at(1) == 1 && s.step_bob.at(1) == 1;
    bool steps_even = is_even(s.P) && is_even(s.step_bob);
    const Perm& last_p = s.plain_word.back();
    const Perm& last_b = s.bob_word.back();
    bool ends_even = is_even(last_p) && is_even(last_b) &&
                     last_p.at(1) == 1 && last_b.at(1) == 1;
    auto home_rows = [&](const std::vector<Perm>& word) {
      int count = 0;
      Perm cur = Perm::identity(n);
      for (const Perm& t : word) {
        cur = cur * t;
        if (cur.at(1) == 1) ++count;
      }
      return count;
    };
    if (steps_fix_one && steps_even && ends_even &&
        home_rows(s.plain_word) == 2 && home_rows(s.bob_word) == 2) {
      long long an1 = 1;
      for (int k = 2; k <= n - 1; ++k) an1 *= k;
      an1 /= 2;
      v.kind = FeasibilityKind::impossible;
      v.test = "lead-parity";
      v.bound_leads = an1 / 2;
      v.bound_rows = v.bound_leads * lead_len;
      return v;
    }
  }

  // (c) Rankin's oracle on the lead steps
  if (s.has_bob()) {
    std::vector<Perm> steps{s.P, s.step_bob};
    auto table = std::make_shared<GroupTable>(closure(steps));
    RankinVerdict rv = rankin_oracle(*table, s.P, s.step_bob);
    v.rankin.order_gamma = rv.order_gamma;
    v.rankin.index_p = rv.index_x;
    v.rankin.index_b = rv.index_y;
    if (rv.impossible) {
      v.kind = FeasibilityKind::impossible;
      v.test = "rankin";
      long long shortest = std::min(order(s.P), order(s.step_bob));
      v.bound_leads = table->size() - shortest;
      v.bound_rows = v.bound_leads * lead_len;
      return v;
    }
    if (table->size() > opts.vertex_cap) {
      v.kind = FeasibilityKind::unknown;
      v.test = "vertex-cap";
      return v;
    }
  } else {
    // single-label schemes: the only methods are powers of the plain course
    v.kind = order(s.P) == target_leads ? FeasibilityKind::possible
                                        : FeasibilityKind::impossible;
    v.test = "cyclic";
    v.bound_leads = order(s.P);
    v.bound_rows = v.bound_leads * lead_len;
    if (v.kind == FeasibilityKind::possible)
      v.witness.assign(static_cast<std::size_t>(order(s.P)), 'P');
    return v;
  }

  // (d) exhaustive lead-level search
  SearchOptions sopts;
  sopts.budget = opts.budget;
  MethodChainResult mc = longest_method_chain(s, sopts);
  if (!mc.optimal) {
    v.kind = FeasibilityKind::unknown;
    v.test = "budget-exhausted";
    v.bound_leads = mc.leads;
    v.bound_rows = mc.leads * lead_len;
    return v;
  }
  v.bound_leads = mc.leads;
  v.bound_rows = mc.leads * lead_len;
  if (mc.leads == target_leads) {
    v.kind = FeasibilityKind::possible;
    v.test = "exhaustive-search";
    v.witness = mc.labels;
  } else {
    v.kind = FeasibilityKind::impossible;
    v.test = "exhaustive-search";
  }
  return v;
}

}  // namespace ringlab
