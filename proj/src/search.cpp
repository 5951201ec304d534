#include "ringlab/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

namespace ringlab {

namespace {

using Clock = std::chrono::steady_clock;

// Shared state between workers. Single-worker runs use it too; the atomics
// are uncontended there.
struct Shared {
  std::atomic<std::uint64_t> expansions{0};
  std::uint64_t budget = 0;
  std::atomic<bool> stop{false};  // found (ham) or budget spent
  std::atomic<bool> out_of_budget{false};
  std::atomic<int> best_len{0};  // longest mode
  std::mutex result_mu;
  std::vector<int> found_word;  // ham mode, labels incl. closing edge
  Chain best_chain;             // longest mode
};

// Depth-first search over simple paths from vertex 0 with:
//   (a) forced-move handling: a single admissible successor never branches,
//   (b) reachability pruning: prune when the start is unreachable through
//       unvisited vertices, or (Hamiltonian mode) when some unvisited vertex
//       is unreachable,
//   (c) successor ordering by fewest onward options, ties by label.
// Runs on an explicit stack; one frame per path vertex.
class Dfs {
 public:
  Dfs(const CayleyGraph& g, bool hamiltonian, Shared& sh)
      : g_(g), sh_(sh), n_(g.size()), nt_(g.out_degree()), ham_(hamiltonian) {
    visited_.assign(n_, 0);
    seen_.assign(n_, 0);
  }

  // prefix: labels of an already-fixed path from vertex 0.
  void run(const std::vector<int>& prefix) {
    path_v_.clear();
    path_l_.clear();
    path_v_.push_back(0);
    visited_[0] = 1;
    for (int lab : prefix) {
      int w = g_.succ(path_v_.back(), lab);
      path_l_.push_back(lab);
      path_v_.push_back(w);
      visited_[w] = 1;
    }
    if (!ham_) scan_prefix_closes();
    dfs();
    for (int v : path_v_) visited_[v] = 0;
  }

 private:
  // BFS over unvisited vertices from the path head. Fills reach_count_ and
  // can_close_ (an edge into vertex 0 exists from the explored region).
  void explore(int head) {
    ++stamp_;
    seen_[head] = stamp_;
    queue_.clear();
    queue_.push_back(head);
    reach_count_ = 0;
    can_close_ = false;
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
      int v = queue_[qi];
      for (int t = 0; t < nt_; ++t) {
        int w = g_.succ(v, t);
        if (w == 0) can_close_ = true;
        if (seen_[w] == stamp_ || visited_[w]) continue;
        seen_[w] = stamp_;
        queue_.push_back(w);
        ++reach_count_;
      }
    }
  }

  // Cycles closing inside a task's fixed prefix are never expanded by dfs();
  // pick them up here so task splitting cannot lose short optima.
  void scan_prefix_closes() {
    for (std::size_t k = 0; k + 1 < path_v_.size(); ++k) {
      for (int t = 0; t < nt_; ++t) {
        if (g_.succ(path_v_[k], t) != 0) continue;
        int len = static_cast<int>(k) + 1;
        if (len <= sh_.best_len.load(std::memory_order_relaxed)) break;
        std::scoped_lock lk(sh_.result_mu);
        if (len > sh_.best_len.load(std::memory_order_relaxed)) {
          sh_.best_len.store(len, std::memory_order_relaxed);
          sh_.best_chain.elements.assign(path_v_.begin(),
                                         path_v_.begin() + len);
          sh_.best_chain.labels.assign(path_l_.begin(),
                                       path_l_.begin() + k);
          sh_.best_chain.labels.push_back(t);
        }
        break;
      }
    }
  }

  void record_close(int closing_label) {
    int len = static_cast<int>(path_v_.size());
    if (ham_) {
      std::scoped_lock lk(sh_.result_mu);
      if (sh_.found_word.empty()) {
        sh_.found_word = path_l_;
        sh_.found_word.push_back(closing_label);
      }
      sh_.stop.store(true, std::memory_order_relaxed);
    } else {
      int cur = sh_.best_len.load(std::memory_order_relaxed);
      if (len <= cur) return;
      std::scoped_lock lk(sh_.result_mu);
      if (len > sh_.best_len.load(std::memory_order_relaxed)) {
        sh_.best_len.store(len, std::memory_order_relaxed);
        sh_.best_chain.elements = path_v_;
        sh_.best_chain.labels = path_l_;
        sh_.best_chain.labels.push_back(closing_label);
      }
    }
  }

  // Choices out of the current head, unvisited only, deduped by target,
  // ordered by number of onward moves.
  void order_choices(int head, std::vector<int>& out) {
    out.clear();
    for (int t = 0; t < nt_; ++t) {
      int w = g_.succ(head, t);
      if (visited_[w]) continue;
      bool dup = false;
      for (int prev : out)
        if (g_.succ(head, prev) == w) dup = true;
      if (!dup) out.push_back(t);
    }
    std::stable_sort(out.begin(), out.end(), [&](int a, int b) {
      return onward(g_.succ(head, a)) < onward(g_.succ(head, b));
    });
  }

  int onward(int v) const {
    int c = 0;
    for (int t = 0; t < nt_; ++t)
      if (!visited_[g_.succ(v, t)]) ++c;
    return c;
  }

  struct Frame {
    std::vector<int> choices;
    std::size_t next = 0;
    bool owns_edge = false;  // frame pushed a path edge that pop must undo
  };

  void dfs() {
    std::vector<Frame> stack;
    stack.emplace_back();
    if (!enter(stack.back())) stack.back().next = stack.back().choices.size();
    while (!stack.empty()) {
      if (sh_.stop.load(std::memory_order_relaxed)) break;
      Frame& f = stack.back();
      if (f.next >= f.choices.size()) {
        if (f.owns_edge) {
          visited_[path_v_.back()] = 0;
          path_v_.pop_back();
          path_l_.pop_back();
        }
        stack.pop_back();
        continue;
      }
      int lab = f.choices[f.next++];
      int w = g_.succ(path_v_.back(), lab);
      path_l_.push_back(lab);
      path_v_.push_back(w);
      visited_[w] = 1;
      stack.emplace_back();
      stack.back().owns_edge = true;
      if (!enter(stack.back())) stack.back().next = stack.back().choices.size();
    }
    // unwind anything left after an early stop so run() sees the bare prefix
    while (!stack.empty()) {
      if (stack.back().owns_edge) {
        visited_[path_v_.back()] = 0;
        path_v_.pop_back();
        path_l_.pop_back();
      }
      stack.pop_back();
    }
  }

  // Expand the current head: count the expansion, record a closing edge if
  // one exists, prune, and fill in the ordered choices. Returns false when
  // the frame should be abandoned immediately.
  bool enter(Frame& frame) {
    std::uint64_t seen =
        sh_.expansions.fetch_add(1, std::memory_order_relaxed) + 1;
    if (seen > sh_.budget) {
      sh_.out_of_budget.store(true, std::memory_order_relaxed);
      sh_.stop.store(true, std::memory_order_relaxed);
      return false;
    }
    int head = path_v_.back();
    int depth = static_cast<int>(path_v_.size());
    if (ham_) {
      if (depth == n_) {
        for (int t = 0; t < nt_; ++t)
          if (g_.succ(head, t) == 0) {
            record_close(t);
            break;
          }
        return false;
      }
    } else {
      for (int t = 0; t < nt_; ++t)
        if (g_.succ(head, t) == 0) {
          record_close(t);
          break;
        }
    }
    explore(head);
    if (!can_close_) return false;
    if (ham_) {
      if (reach_count_ < n_ - depth) return false;  // someone unreachable
    } else {
      if (depth + reach_count_ <= sh_.best_len.load(std::memory_order_relaxed))
        return false;
    }
    order_choices(head, frame.choices);
    return true;
  }

  const CayleyGraph& g_;
  Shared& sh_;
  int n_, nt_;
  bool ham_;
  std::vector<char> visited_;
  std::vector<int> path_v_, path_l_;
  std::vector<int> seen_;
  std::vector<int> queue_;
  int stamp_ = 0;
  int reach_count_ = 0;
  bool can_close_ = false;
};

// Enumerate simple-path label prefixes of the given depth for task
// splitting. Dead-end paths shorter than the depth become tasks too, so
// every branch of the tree lands in exactly one task.
void enumerate_prefixes(const CayleyGraph& g, int depth,
                        std::vector<int>& prefix, std::vector<char>& visited,
                        int v, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(prefix.size()) == depth) {
    out.push_back(prefix);
    return;
  }
  bool extended = false;
  for (int t = 0; t < g.out_degree(); ++t) {
    int w = g.succ(v, t);
    if (visited[w]) continue;
    bool dup = false;
    for (int s = 0; s < t; ++s)
      if (g.succ(v, s) == w) dup = true;
    if (dup) continue;
    extended = true;
    visited[w] = 1;
    prefix.push_back(t);
    enumerate_prefixes(g, depth, prefix, visited, w, out);
    prefix.pop_back();
    visited[w] = 0;
  }
  if (!extended) out.push_back(prefix);
}

void run_search(const CayleyGraph& g, const SearchOptions& opts, bool ham,
                Shared& sh) {
  int workers = std::max(1, opts.workers);
  if (workers == 1 || g.size() < 8) {
    Dfs dfs(g, ham, sh);
    dfs.run({});
    return;
  }
  int depth = 1;
  std::size_t want = static_cast<std::size_t>(workers) * 4;
  std::vector<std::vector<int>> tasks;
  while (depth < 24) {
    tasks.clear();
    std::vector<int> prefix;
    std::vector<char> visited(g.size(), 0);
    visited[0] = 1;
    enumerate_prefixes(g, depth, prefix, visited, 0, tasks);
    if (tasks.size() >= want || tasks.empty()) break;
    ++depth;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      Dfs dfs(g, ham, sh);
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= tasks.size()) return;
        if (sh.stop.load(std::memory_order_relaxed)) return;
        dfs.run(tasks[i]);
      }
    });
  }
  for (auto& t : pool) t.join();
}

// Deterministic greedy walks to seed the longest-cycle bound: fixed and
// rotating label preferences, keeping the deepest point that had an edge
// back to the start.
void greedy_seed(const CayleyGraph& g, Shared& sh) {
  int nt = g.out_degree();
  for (int mode = 0; mode < 2 * nt; ++mode) {
    std::vector<char> visited(g.size(), 0);
    std::vector<int> pv{0}, pl;
    visited[0] = 1;
    int best_close = -1, best_label = -1;
    std::vector<int> best_pl;
    for (;;) {
      int head = pv.back();
      for (int t = 0; t < nt; ++t)
        if (g.succ(head, t) == 0) {
          if (static_cast<int>(pv.size()) > best_close) {
            best_close = static_cast<int>(pv.size());
            best_label = t;
            best_pl = pl;
          }
          break;
        }
      int pick = -1;
      int base = (mode < nt) ? mode : (mode + static_cast<int>(pl.size()));
      for (int k = 0; k < nt; ++k) {
        int t = (base + k) % nt;
        if (!visited[g.succ(head, t)]) {
          pick = t;
          break;
        }
      }
      if (pick < 0) break;
      int w = g.succ(head, pick);
      visited[w] = 1;
      pv.push_back(w);
      pl.push_back(pick);
    }
    if (best_close > sh.best_len.load()) {
      std::scoped_lock lk(sh.result_mu);
      if (best_close > sh.best_len.load()) {
        sh.best_len.store(best_close);
        sh.best_chain.elements.assign(pv.begin(), pv.begin() + best_close);
        sh.best_chain.labels = best_pl;
        sh.best_chain.labels.push_back(best_label);
      }
    }
  }
}

}  // namespace

HamiltonianResult hamiltonian_cycle(const CayleyGraph& g,
                                    const SearchOptions& opts) {
  auto t0 = Clock::now();
  Shared sh;
  sh.budget = opts.budget;
  run_search(g, opts, /*ham=*/true, sh);
  HamiltonianResult r;
  r.stats.expansions = sh.expansions.load();
  r.stats.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  if (!sh.found_word.empty()) {
    r.status = SearchStatus::found;
    r.word = sh.found_word;
  } else if (sh.out_of_budget.load()) {
    r.status = SearchStatus::exhausted;
  } else {
    r.status = SearchStatus::none;
  }
  return r;
}

LongestResult longest_cycle(const CayleyGraph& g, const SearchOptions& opts) {
  auto t0 = Clock::now();
  Shared sh;
  sh.budget = opts.budget;
  greedy_seed(g, sh);
  run_search(g, opts, /*ham=*/false, sh);
  LongestResult r;
  r.best = sh.best_chain;
  r.optimal = !sh.out_of_budget.load();
  r.stats.expansions = sh.expansions.load();
  r.stats.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

bool verify_word(const GroupTable& g, const std::vector<Perm>& gens,
                 const std::vector<int>& word, bool require_full) {
  if (require_full && static_cast<int>(word.size()) != g.size())
    throw error("word-error", "word length " + std::to_string(word.size()) +
                                  " != group order " +
                                  std::to_string(g.size()));
  std::vector<char> seen(g.size(), 0);
  Perm cur = Perm::identity(g.degree());
  for (int lab : word) {
    if (lab < 0 || lab >= static_cast<int>(gens.size()))
      throw error("word-error",
                  "label " + std::to_string(lab) + " out of range");
    cur = cur * gens[lab];
    int idx = g.index_of(cur);
    if (idx < 0) throw error("word-error", "word leaves the group");
    if (seen[idx]) return false;
    seen[idx] = 1;
  }
  return cur.is_identity();
}

std::string word_to_string(const std::vector<int>& word) {
  std::string s;
  s.reserve(word.size());
  for (int lab : word) {
    if (lab < 0 || lab > 25)
      throw error("word-error", "label out of printable range");
    s.push_back(static_cast<char>('A' + lab));
  }
  return s;
}

std::vector<int> word_from_string(const std::string& s, int ngens) {
  std::vector<int> out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == ',' || c == ' ' || c == '\n' || c == '\t') continue;
    int lab = c - 'A';
    if (lab < 0 || lab >= ngens)
      throw error("word-error", std::string("bad label '") + c + "'");
    out.push_back(lab);
  }
  return out;
}

}  // namespace ringlab
