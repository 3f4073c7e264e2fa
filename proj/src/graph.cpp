// Copyright 2026 The ssg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ssg/graph.hpp"

#include <algorithm>
#include <deque>

namespace ssg {
namespace {

std::vector<std::vector<StateIndex>> predecessors(const Game& g) {
  std::vector<std::vector<StateIndex>> pred(g.size());
  for (StateIndex s = 0; s < g.size(); ++s) {
    for (StateIndex t : g.successors(s)) pred[t].push_back(s);
  }
  return pred;
}

}  // namespace

Attractor attractor(const Game& g, const StateSet& goal, Player player, bool random_helps) {
  const std::size_t n = g.size();
  Attractor a{StateSet(n, false), std::vector<int>(n, -1)};
  auto pred = predecessors(g);
  // Remaining successors outside the set, for states that need all of them.
  std::vector<std::size_t> missing(n);
  const Owner mine = owner_of(player);
  auto needs_one = [&](StateIndex s) {
    Owner o = g.owner(s);
    return o == mine || (o == Owner::Random && random_helps);
  };
  for (StateIndex s = 0; s < n; ++s) missing[s] = g.successors(s).size();
  std::vector<StateIndex> layer;
  for (StateIndex s = 0; s < n; ++s) {
    if (goal[s]) {
      a.set[s] = true;
      a.rank[s] = 0;
      layer.push_back(s);
    }
  }
  int r = 0;
  while (!layer.empty()) {
    std::vector<StateIndex> next;
    for (StateIndex t : layer) {
      for (StateIndex s : pred[t]) {
        if (a.set[s]) continue;
        if (needs_one(s)) {
          a.set[s] = true;
          a.rank[s] = r + 1;
          next.push_back(s);
        } else if (--missing[s] == 0) {
          a.set[s] = true;
          a.rank[s] = r + 1;
          next.push_back(s);
        }
      }
    }
    // Duplicate successor entries cannot occur in valid games, so each
    // predecessor edge decrements once.
    layer = std::move(next);
    ++r;
  }
  return a;
}

std::vector<std::vector<StateIndex>> scc_decomposition(
    const std::vector<std::vector<StateIndex>>& adj, const StateSet& within) {
  const std::size_t n = adj.size();
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<StateIndex> stack;
  std::vector<std::vector<StateIndex>> out;
  int counter = 0;
  struct Frame {
    StateIndex v;
    std::size_t next;
  };
  for (StateIndex root = 0; root < n; ++root) {
    if (!within[root] || index[root] >= 0) continue;
    std::vector<Frame> call;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      const StateIndex v = f.v;
      if (f.next < adj[v].size()) {
        StateIndex w = adj[v][f.next++];
        if (!within[w]) continue;
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::vector<StateIndex> comp;
        StateIndex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
      }
      call.pop_back();
      if (!call.empty()) {
        StateIndex parent = call.back().v;
        low[parent] = std::min(low[parent], low[v]);
      }
    }
  }
  return out;
}

std::vector<std::vector<StateIndex>> end_components(
    const Game& g, const StateSet& within,
    const std::function<bool(StateIndex, StateIndex)>& allowed) {
  const std::size_t n = g.size();
  StateSet alive = within;
  std::vector<int> comp_of(n, -1);
  while (true) {
    std::vector<std::vector<StateIndex>> adj(n);
    for (StateIndex s = 0; s < n; ++s) {
      if (!alive[s]) continue;
      for (StateIndex t : g.successors(s)) {
        if (!alive[t]) continue;
        if (g.owner(s) != Owner::Random && !allowed(s, t)) continue;
        adj[s].push_back(t);
      }
    }
    auto comps = scc_decomposition(adj, alive);
    std::fill(comp_of.begin(), comp_of.end(), -1);
    for (std::size_t c = 0; c < comps.size(); ++c) {
      for (StateIndex s : comps[c]) comp_of[s] = static_cast<int>(c);
    }
    bool removed = false;
    for (StateIndex s = 0; s < n; ++s) {
      if (!alive[s]) continue;
      bool keep;
      if (g.owner(s) == Owner::Random) {
        keep = true;
        for (StateIndex t : g.successors(s)) {
          if (comp_of[t] != comp_of[s]) keep = false;
        }
      } else {
        keep = false;
        for (StateIndex t : adj[s]) {
          if (comp_of[t] == comp_of[s]) keep = true;
        }
      }
      if (!keep) {
        alive[s] = false;
        removed = true;
      }
    }
    if (!removed) {
      std::vector<std::vector<StateIndex>> out;
      for (auto& c : comps) {
        if (alive[c.front()]) out.push_back(std::move(c));
      }
      return out;
    }
  }
}

StateSet backward_reachable(const Game& g, const StateSet& goal) {
  auto pred = predecessors(g);
  StateSet seen = goal;
  std::deque<StateIndex> queue;
  for (StateIndex s = 0; s < g.size(); ++s) {
    if (goal[s]) queue.push_back(s);
  }
  while (!queue.empty()) {
    StateIndex t = queue.front();
    queue.pop_front();
    for (StateIndex s : pred[t]) {
      if (!seen[s]) {
        seen[s] = true;
        queue.push_back(s);
      }
    }
  }
  return seen;
}

}  // namespace ssg
