#include "ringlab/method.hpp"

#include "ringlab/leads.hpp"

namespace ringlab {

Method Method::from_transitions(int stage, Row start,
                                std::vector<Perm> transitions) {
  Method m;
  m.stage = stage;
  m.start = start;
  m.rows.reserve(transitions.size() + 1);
  m.rows.push_back(start);
  for (const Perm& t : transitions) {
    if (t.degree() != stage)
      throw error("degree-error", "transition degree != stage");
    m.rows.push_back(apply_to_row(t, m.rows.back()));
  }
  m.transitions = std::move(transitions);
  return m;
}

std::pair<Perm, Perm> hunt_pair(int n) {
  auto swaps = [n](int first) {
    std::vector<std::uint8_t> img(n);
    for (int i = 0; i < n; ++i) img[i] = static_cast<std::uint8_t>(i);
    for (int i = first; i + 1 < n; i += 2) {
      img[i] = static_cast<std::uint8_t>(i + 1);
      img[i + 1] = static_cast<std::uint8_t>(i);
    }
    return Perm::from_images(std::move(img));
  };
  return {swaps(0), swaps(1)};
}

void sjt_stream(int n, const std::function<void(const Row&)>& on_row,
                const std::function<void(const Perm&)>& on_transition,
                int cap) {
  if (n < 1) throw error("invalid-degree", "stage must be >= 1");
  if (n > cap)
    throw error("resource-error", "stage " + std::to_string(n) +
                                      " above cap " + std::to_string(cap));
  std::vector<std::uint8_t> row(n);
  for (int i = 0; i < n; ++i) row[i] = static_cast<std::uint8_t>(i + 1);
  on_row(Row::from_bells(row));
  if (n == 1) return;  // the degenerate one-row extent

  // Johnson-Trotter with bell 1 as the fastest hunter: a bell is mobile when
  // the neighbour it faces is larger; the smallest mobile bell moves, and
  // all smaller bells turn around.
  std::vector<int> pos(n + 1), dir(n + 1, +1);
  for (int i = 0; i < n; ++i) pos[row[i]] = i;
  auto swap_at = [&](int i) {  // transition (i+1, i+2)
    std::vector<std::uint8_t> img(n);
    for (int k = 0; k < n; ++k) img[k] = static_cast<std::uint8_t>(k);
    img[i] = static_cast<std::uint8_t>(i + 1);
    img[i + 1] = static_cast<std::uint8_t>(i);
    on_transition(Perm::from_images(std::move(img)));
    std::swap(row[i], row[i + 1]);
    pos[row[i]] = i;
    pos[row[i + 1]] = i + 1;
    on_row(Row::from_bells(row));
  };
  for (;;) {
    int mobile = 0;
    for (int b = 1; b <= n; ++b) {
      int j = pos[b] + dir[b];
      if (j >= 0 && j < n && row[j] > b) {
        mobile = b;
        break;
      }
    }
    if (mobile == 0) break;
    int i = pos[mobile];
    swap_at(dir[mobile] > 0 ? i : i - 1);
    for (int b = 1; b < mobile; ++b) dir[b] = -dir[b];
  }
  // close the extent: the final arrangement is one adjacent swap from rounds
  for (int i = 0; i + 1 < n; ++i) {
    if (row[i] == i + 2 && row[i + 1] == i + 1) {
      swap_at(i);
      break;
    }
  }
}

Method sjt_extent(int n, int cap) {
  Method m;
  m.stage = n;
  sjt_stream(
      n, [&](const Row& r) { m.rows.push_back(r); },
      [&](const Perm& t) { m.transitions.push_back(t); }, cap);
  m.start = m.rows.front();
  return m;
}

Method plain_hunt(int n) {
  if (n < 3)
    throw error("stage-error", "plain hunt needs at least 3 bells");
  auto [X, Y] = hunt_pair(n);
  std::vector<Perm> word;
  word.reserve(2 * n);
  for (int i = 0; i < 2 * n; ++i) word.push_back(i % 2 == 0 ? X : Y);
  return Method::from_transitions(n, Row::rounds(n), std::move(word));
}

Method plain_bob_course(int n) {
  if (n < 4) throw error("stage-error", "plain bob needs >= 4 bells");
  return plain_course(lead_scheme(LeadFamily::plain_bob, n));
}

Method grandsire_course(int n) {
  if (n < 5 || n % 2 == 0)
    throw error("stage-error", "grandsire needs an odd stage >= 5");
  return plain_course(lead_scheme(LeadFamily::grandsire, n));
}

Method ccdd_course() {
  return plain_course(lead_scheme(LeadFamily::ccdd, 5));
}

}  // namespace ringlab
