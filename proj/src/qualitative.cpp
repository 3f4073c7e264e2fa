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

#include "ssg/qualitative.hpp"

#include <stdexcept>

#include "ssg/graph.hpp"
#include "ssg/transforms.hpp"
#include "ssg/valuation.hpp"

namespace ssg {
namespace {

// Rebuilds g on the same indices: states outside `alive` become
// self-loops, owned states keep the edges accepted by `keep` that stay in
// `alive`, and an owned state left without edges gets a self-loop.
Game restrict_game(const Game& g, const StateSet& alive,
                   const std::function<bool(StateIndex, StateIndex)>& keep) {
  GameBuilder b;
  for (StateIndex s = 0; s < g.size(); ++s) b.add_state(g.id(s), g.owner(s));
  for (StateIndex s = 0; s < g.size(); ++s) {
    const bool random = g.owner(s) == Owner::Random;
    if (!alive[s]) {
      if (random) {
        b.add_edge(s, s, Rational(1));
      } else {
        b.add_edge(s, s);
      }
      continue;
    }
    auto succ = g.successors(s);
    auto w = g.weights(s);
    if (random) {
      for (std::size_t k = 0; k < succ.size(); ++k) {
        if (!alive[succ[k]]) throw std::logic_error("random state kept with a removed successor");
        b.add_edge(s, succ[k], w[k]);
      }
      continue;
    }
    bool any = false;
    for (StateIndex t : succ) {
      if (alive[t] && keep(s, t)) {
        b.add_edge(s, t);
        any = true;
      }
    }
    if (!any) b.add_edge(s, s);
  }
  return std::move(b).build();
}

WinningPartition partition_from_index(std::vector<int> index, std::size_t rounds) {
  WinningPartition p;
  p.rounds = rounds;
  p.max_wins.assign(index.size(), false);
  p.min_wins.assign(index.size(), false);
  for (std::size_t s = 0; s < index.size(); ++s) {
    if (index[s] == kNoIndex) {
      p.max_wins[s] = true;
    } else {
      p.min_wins[s] = true;
    }
  }
  p.index = std::move(index);
  return p;
}

}  // namespace

StateSet positive_reach_set(const Game& g, const StateSet& target) {
  if (target.size() != g.size()) throw PreconditionError("target mask size mismatch");
  // Plain fixpoint sweep, kept independent of the attractor helper.
  StateSet in = target;
  bool changed = true;
  while (changed) {
    changed = false;
    for (StateIndex s = 0; s < g.size(); ++s) {
      if (in[s]) continue;
      bool add;
      if (g.owner(s) == Owner::Min) {
        add = true;
        for (StateIndex t : g.successors(s)) add = add && in[t];
      } else {
        add = false;
        for (StateIndex t : g.successors(s)) add = add || in[t];
      }
      if (add) {
        in[s] = true;
        changed = true;
      }
    }
  }
  return in;
}

ReachPeeling reach_peeling(const Game& g, const StateSet& target) {
  ReachPeeling rec;
  rec.values = solve_reach(g, target).values;
  const StateSet all = full_set(g);
  Game current = rvi(g, target);
  rec.drop_index.assign(g.size(), kNoIndex);
  // Every round either deletes an edge or stops.
  while (true) {
    auto values = solve_reach(current, target).values;
    const int round = static_cast<int>(rec.rounds);
    for (StateIndex s = 0; s < g.size(); ++s) {
      if (rec.drop_index[s] == kNoIndex && values[s] < rec.values[s]) rec.drop_index[s] = round;
    }
    std::vector<Edge> deleted;
    for (StateIndex s = 0; s < g.size(); ++s) {
      if (current.owner(s) != Owner::Max || target[s]) continue;
      for (StateIndex t : current.successors(s)) {
        if (values[t] < values[s]) deleted.emplace_back(s, t);
      }
    }
    rec.round_games.push_back(current);
    rec.round_values.push_back(values);
    ++rec.rounds;
    if (deleted.empty()) break;
    StateSet drop_from(g.size(), false);
    for (const auto& e : deleted) drop_from[e.first] = true;
    const auto& del = deleted;
    Game next = restrict_game(current, all, [&](StateIndex s, StateIndex t) {
      if (!drop_from[s]) return true;
      for (const auto& e : del) {
        if (e.first == s && e.second == t) return false;
      }
      return true;
    });
    rec.deleted.push_back(std::move(deleted));
    current = std::move(next);
  }
  rec.deleted.emplace_back();
  return rec;
}

WinningPartition almost_sure_reach(const Game& g, const StateSet& target) {
  auto rec = reach_peeling(g, target);
  std::vector<int> index(g.size(), kNoIndex);
  for (StateIndex s = 0; s < g.size(); ++s) {
    if (rec.values[s] < 1) {
      index[s] = 0;
    } else {
      index[s] = rec.drop_index[s];
    }
  }
  return partition_from_index(std::move(index), rec.rounds);
}

BuchiPeeling buchi_peeling(const Game& g, const StateSet& buchi) {
  require_valid(g);
  if (buchi.size() != g.size()) throw PreconditionError("buchi mask size mismatch");
  const std::size_t n = g.size();
  BuchiPeeling rec;
  rec.layer.assign(n, -1);
  rec.descent.assign(n, 0);
  std::vector<int> index(n, kNoIndex);
  StateSet alive = full_set(g);
  std::size_t rounds = 0;
  while (set_count(alive) > 0) {
    const int round = static_cast<int>(rounds);
    Game current = restrict_game(g, alive, [](StateIndex, StateIndex) { return true; });
    StateSet goal(n, false);
    for (StateIndex s = 0; s < n; ++s) goal[s] = alive[s] && buchi[s];
    auto plus = bellman_step_plus(current, solve_reach(current, goal).values);
    ++rounds;
    rec.round_games.push_back(current);
    rec.round_alive.push_back(alive);
    rec.round_plus_values.push_back(plus);

    std::vector<StateIndex> frontier;
    for (StateIndex s = 0; s < n; ++s) {
      if (alive[s] && plus[s] < 1) {
        frontier.push_back(s);
        rec.layer[s] = 0;
        index[s] = round;
      }
    }
    if (frontier.empty()) break;
    StateSet removed(n, false);
    for (StateIndex s : frontier) removed[s] = true;
    // Min attractor of the removed states: Min and Random states with one
    // removed successor, Max states whose live successors are all removed.
    int depth = 0;
    while (!frontier.empty()) {
      std::vector<StateIndex> next;
      for (StateIndex s = 0; s < n; ++s) {
        if (!alive[s] || removed[s]) continue;
        if (g.owner(s) == Owner::Max) {
          bool trapped = true;
          for (StateIndex t : g.successors(s)) trapped = trapped && (!alive[t] || removed[t]);
          if (trapped) {
            next.push_back(s);
            rec.descent[s] = g.successors(s)[0];
          }
          continue;
        }
        for (StateIndex t : g.successors(s)) {
          if (removed[t] && rec.layer[t] == depth) {
            next.push_back(s);
            rec.descent[s] = t;
            break;
          }
        }
      }
      ++depth;
      for (StateIndex s : next) {
        removed[s] = true;
        rec.layer[s] = depth;
        index[s] = round;
      }
      frontier = std::move(next);
    }
    for (StateIndex s = 0; s < n; ++s) {
      if (removed[s]) alive[s] = false;
    }
  }
  rec.partition = partition_from_index(std::move(index), rounds);
  return rec;
}

WinningPartition almost_sure_buchi(const Game& g, const StateSet& buchi) {
  return buchi_peeling(g, buchi).partition;
}

WinningPartition almost_sure_safety(const Game& g, const StateSet& target) {
  if (target.size() != g.size()) throw PreconditionError("target mask size mismatch");
  auto a = attractor(g, target, Player::Min, true);
  std::vector<int> index(g.size(), kNoIndex);
  for (StateIndex s = 0; s < g.size(); ++s) {
    if (a.set[s]) index[s] = a.rank[s];
  }
  return partition_from_index(std::move(index), 1);
}

}  // namespace ssg
