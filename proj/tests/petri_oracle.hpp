#pragma once

#include <deque>
#include <map>
#include <optional>
#include <vector>

#include "wqo/coverability.hpp"

namespace oracle_petri {

using wqo::Marking;
using wqo::PetriNet;

inline bool covers(const Marking& m, const Marking& target) {
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] < target[i]) return false;
  return true;
}

inline std::optional<Marking> fire(const PetriNet& net, std::size_t t, const Marking& m) {
  Marking out = m;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (out[i] < net.transitions[t].pre[i]) return std::nullopt;
    out[i] = out[i] - net.transitions[t].pre[i] + net.transitions[t].post[i];
  }
  return out;
}

// Breadth-first search over markings with every place at most `bound`;
// returns a firing sequence reaching a marking above target.
inline std::optional<std::vector<std::size_t>> forward_cover(
    const PetriNet& net, const Marking& init, const Marking& target, std::uint64_t bound) {
  std::map<Marking, std::pair<Marking, std::size_t>> parent;
  std::deque<Marking> queue{init};
  parent[init] = {init, SIZE_MAX};
  while (!queue.empty()) {
    auto m = queue.front();
    queue.pop_front();
    if (covers(m, target)) {
      std::vector<std::size_t> path;
      for (auto cur = m; parent[cur].second != SIZE_MAX; cur = parent[cur].first)
        path.insert(path.begin(), parent[cur].second);
      return path;
    }
    for (std::size_t t = 0; t < net.transitions.size(); ++t) {
      auto next = fire(net, t, m);
      if (!next || parent.count(*next)) continue;
      bool in_bound = true;
      for (auto v : *next) in_bound = in_bound && v <= bound;
      if (!in_bound) continue;
      parent[*next] = {m, t};
      queue.push_back(*next);
    }
  }
  return std::nullopt;
}

inline bool replay_covers(const PetriNet& net, Marking m, const std::vector<std::size_t>& path,
                          const Marking& target) {
  for (auto t : path) {
    auto next = fire(net, t, m);
    if (!next) return false;
    m = *next;
  }
  return covers(m, target);
}

}  // namespace oracle_petri
