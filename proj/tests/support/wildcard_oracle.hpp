#pragma once

// Brute-force wildcard expansion used to check expand_wildcards(). Shares no
// code with the library: the anchor process is found by relaxing shortest
// reverse distances over every node, then every process is tested against
// the eligibility predicate.

#include <algorithm>
#include <climits>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "admintm/process_model.hpp"

namespace admintm::testing {

using EdgeKey = std::tuple<std::string, std::string, int>;  // guard: -1 none, 0 yes, 1 no

inline EdgeKey key_of(const Edge& e) {
  int g = !e.guard ? -1 : (*e.guard == Guard::Yes ? 0 : 1);
  return {e.source.value, e.target.value, g};
}

// Distance (in reverse edges) from `start` to every node.
inline std::map<std::string, int> reverse_distances(const ProcessGraph& g, const std::string& start) {
  std::map<std::string, int> dist;
  for (const Node& n : g.nodes()) dist[n.id.value] = INT_MAX;
  dist[start] = 0;
  for (std::size_t round = 0; round < g.nodes().size(); ++round) {
    for (const Edge& e : g.edges()) {
      if (e.is_wildcard()) continue;
      auto t = dist.find(e.target.value);
      auto s = dist.find(e.source.value);
      if (t == dist.end() || s == dist.end() || t->second == INT_MAX) continue;
      s->second = std::min(s->second, t->second + 1);
    }
  }
  return dist;
}

inline const Node* oracle_anchor(const ProcessGraph& g, const Node& source) {
  if (source.kind == NodeKind::Process) return &source;
  auto dist = reverse_distances(g, source.id.value);
  const Node* best = nullptr;
  int best_dist = INT_MAX;
  for (const Node& n : g.nodes()) {
    if (n.kind != NodeKind::Process || n.id == source.id) continue;
    int d = dist[n.id.value];
    if (d == INT_MAX || d == 0) continue;
    if (d < best_dist || (d == best_dist && *n.canonical_index > *best->canonical_index)) {
      best = &n;
      best_dist = d;
    }
  }
  return best;
}

inline std::set<EdgeKey> oracle_expand(const ProcessGraph& g) {
  std::set<EdgeKey> out;
  for (const Edge& e : g.edges()) {
    if (!e.is_wildcard()) out.insert(key_of(e));
  }
  for (const Edge& e : g.edges()) {
    if (!e.is_wildcard()) continue;
    const Node* src = g.find(e.source);
    if (src == nullptr) continue;
    const Node* anchor = oracle_anchor(g, *src);
    if (anchor == nullptr) continue;
    for (const Node& p : g.nodes()) {
      const bool eligible = p.kind == NodeKind::Process && *p.canonical_index < *anchor->canonical_index &&
                            p.phase != Phase::Deployment && p.id != e.source;
      if (eligible) out.insert(key_of(Edge{e.source, p.id, e.guard}));
    }
  }
  return out;
}

inline std::set<EdgeKey> edge_keys(const ProcessGraph& g) {
  std::set<EdgeKey> out;
  for (const Edge& e : g.edges()) out.insert(key_of(e));
  return out;
}

}  // namespace admintm::testing
