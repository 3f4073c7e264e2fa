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

#include "ssg/game.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_set>

namespace ssg {

const char* owner_name(Owner o) {
  switch (o) {
    case Owner::Max: return "max";
    case Owner::Min: return "min";
    case Owner::Random: return "rand";
  }
  return "?";
}

const char* player_name(Player p) { return p == Player::Max ? "max" : "min"; }

Owner owner_of(Player p) { return p == Player::Max ? Owner::Max : Owner::Min; }

Player opponent(Player p) { return p == Player::Max ? Player::Min : Player::Max; }

std::optional<StateIndex> Game::find(std::string_view id) const {
  auto it = by_id_.find(std::string(id));
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

StateIndex Game::index(std::string_view id) const {
  auto s = find(id);
  if (!s) throw std::out_of_range("unknown state '" + std::string(id) + "'");
  return *s;
}

bool Game::has_edge(StateIndex from, StateIndex to) const {
  const auto& list = succ_[from];
  return std::find(list.begin(), list.end(), to) != list.end();
}

std::size_t Game::edge_count() const {
  std::size_t n = 0;
  for (const auto& list : succ_) n += list.size();
  return n;
}

bool Game::operator==(const Game& other) const {
  return ids_ == other.ids_ && owners_ == other.owners_ && succ_ == other.succ_ &&
         weights_ == other.weights_;
}

StateIndex GameBuilder::add_state(std::string id, Owner owner) {
  if (id.empty()) throw std::invalid_argument("empty state id");
  if (game_.by_id_.count(id)) throw std::invalid_argument("duplicate state '" + id + "'");
  auto s = static_cast<StateIndex>(game_.ids_.size());
  game_.by_id_.emplace(id, s);
  game_.ids_.push_back(std::move(id));
  game_.owners_.push_back(owner);
  game_.succ_.emplace_back();
  game_.weights_.emplace_back();
  return s;
}

void GameBuilder::add_edge(StateIndex from, StateIndex to) {
  game_.succ_.at(from).push_back(to);
}

void GameBuilder::add_edge(StateIndex from, StateIndex to, Rational weight) {
  game_.succ_.at(from).push_back(to);
  // GMP arithmetic assumes canonical operands.
  weight.canonicalize();
  game_.weights_.at(from).push_back(std::move(weight));
}

std::optional<StateIndex> GameBuilder::find(std::string_view id) const {
  return game_.find(id);
}

Game GameBuilder::build() && { return std::move(game_); }

const char* violation_name(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::DeadEnd: return "dead-end";
    case Violation::Kind::WeightSum: return "weight-sum";
    case Violation::Kind::NonPositiveWeight: return "non-positive-weight";
    case Violation::Kind::WeightCount: return "weight-count";
    case Violation::Kind::DanglingSuccessor: return "dangling-successor";
    case Violation::Kind::DuplicateSuccessor: return "duplicate-successor";
  }
  return "?";
}

std::vector<Violation> validate(const Game& g) {
  std::vector<Violation> out;
  const auto n = static_cast<StateIndex>(g.size());
  for (StateIndex s = 0; s < n; ++s) {
    auto succ = g.successors(s);
    auto w = g.weights(s);
    const std::string& id = g.id(s);
    if (succ.empty()) {
      out.push_back({Violation::Kind::DeadEnd, s, "state '" + id + "' has no successor", {}});
    }
    std::unordered_set<StateIndex> seen;
    for (StateIndex t : succ) {
      if (t >= n) {
        out.push_back({Violation::Kind::DanglingSuccessor, s,
                       "state '" + id + "' has successor index " + std::to_string(t) +
                           " outside the game",
                       {}});
      } else if (!seen.insert(t).second) {
        out.push_back({Violation::Kind::DuplicateSuccessor, s,
                       "state '" + id + "' lists '" + g.id(t) + "' more than once", {}});
      }
    }
    if (g.owner(s) == Owner::Random) {
      if (w.size() != succ.size()) {
        out.push_back({Violation::Kind::WeightCount, s,
                       "random state '" + id + "' has " + std::to_string(succ.size()) +
                           " successors but " + std::to_string(w.size()) + " weights",
                       {}});
        continue;
      }
      Rational sum(0);
      bool positive = true;
      for (const auto& x : w) {
        sum += x;
        if (x <= 0) positive = false;
      }
      if (!positive) {
        out.push_back({Violation::Kind::NonPositiveWeight, s,
                       "random state '" + id + "' has a non-positive weight", {}});
      }
      if (!succ.empty() && sum != 1) {
        out.push_back({Violation::Kind::WeightSum, s,
                       "weights of random state '" + id + "' sum to " + format_rational(sum),
                       sum});
      }
    } else if (!w.empty()) {
      out.push_back({Violation::Kind::WeightCount, s,
                     "owned state '" + id + "' carries probability weights", {}});
    }
  }
  return out;
}

void require_valid(const Game& g) {
  auto v = validate(g);
  if (v.empty()) return;
  std::ostringstream os;
  os << "invalid game:";
  for (const auto& x : v) os << "\n  " << violation_name(x.kind) << ": " << x.message;
  throw InvalidGame(os.str());
}

StateSet make_set(const Game& g, const std::vector<std::string>& ids) {
  StateSet s(g.size(), false);
  for (const auto& id : ids) s[g.index(id)] = true;
  return s;
}

StateSet empty_set(const Game& g) { return StateSet(g.size(), false); }

StateSet full_set(const Game& g) { return StateSet(g.size(), true); }

std::vector<std::string> set_ids(const Game& g, const StateSet& s) {
  std::vector<std::string> out;
  for (StateIndex i = 0; i < s.size(); ++i) {
    if (s[i]) out.push_back(g.id(i));
  }
  return out;
}

std::size_t set_count(const StateSet& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), true));
}

namespace {

template <typename OwnerFn, typename KeepFn>
Game rebuild(const Game& g, OwnerFn owner_fn, KeepFn keep) {
  GameBuilder b;
  for (StateIndex s = 0; s < g.size(); ++s) b.add_state(g.id(s), owner_fn(s));
  for (StateIndex s = 0; s < g.size(); ++s) {
    auto succ = g.successors(s);
    auto w = g.weights(s);
    for (std::size_t k = 0; k < succ.size(); ++k) {
      if (g.owner(s) == Owner::Random) {
        b.add_edge(s, succ[k], w[k]);
      } else if (keep(s, succ[k])) {
        b.add_edge(s, succ[k]);
      }
    }
  }
  return std::move(b).build();
}

}  // namespace

Game swap_players(const Game& g) {
  return rebuild(
      g,
      [&](StateIndex s) {
        switch (g.owner(s)) {
          case Owner::Max: return Owner::Min;
          case Owner::Min: return Owner::Max;
          default: return Owner::Random;
        }
      },
      [](StateIndex, StateIndex) { return true; });
}

Game filter_owned_edges(const Game& g, const std::function<bool(StateIndex, StateIndex)>& keep) {
  return rebuild(g, [&](StateIndex s) { return g.owner(s); }, keep);
}

Game fix_choices(const Game& g, Player player, const std::vector<StateIndex>& choice) {
  const Owner fixed = owner_of(player);
  GameBuilder b;
  for (StateIndex s = 0; s < g.size(); ++s) {
    b.add_state(g.id(s), g.owner(s) == fixed ? Owner::Random : g.owner(s));
  }
  for (StateIndex s = 0; s < g.size(); ++s) {
    auto succ = g.successors(s);
    auto w = g.weights(s);
    if (g.owner(s) == fixed) {
      if (s >= choice.size() || !g.has_edge(s, choice[s])) {
        throw PreconditionError("choice at '" + g.id(s) + "' is not an edge");
      }
      b.add_edge(s, choice[s], Rational(1));
      continue;
    }
    for (std::size_t k = 0; k < succ.size(); ++k) {
      if (g.owner(s) == Owner::Random) {
        b.add_edge(s, succ[k], w[k]);
      } else {
        b.add_edge(s, succ[k]);
      }
    }
  }
  return std::move(b).build();
}

Expansion LazyGame::expand(const std::string& id) const {
  Expansion e = expand_(id);
  if (e.successors.empty()) {
    throw DivergenceError("expansion of '" + id + "' returned no successors");
  }
  if (bound_ && e.successors.size() > *bound_) {
    throw DivergenceError("expansion of '" + id + "' returned " +
                          std::to_string(e.successors.size()) +
                          " successors, above the branching bound " + std::to_string(*bound_));
  }
  if (e.owner == Owner::Random && e.weights.size() != e.successors.size()) {
    throw InvalidGame("expansion of random state '" + id + "' has misaligned weights");
  }
  if (e.owner != Owner::Random && !e.weights.empty()) {
    throw InvalidGame("expansion of owned state '" + id + "' carries weights");
  }
  return e;
}

StateSet Truncation::tagged(const std::string& tag) const {
  StateSet s(game.size(), false);
  auto it = tags.find(tag);
  if (it != tags.end()) s = it->second;
  s[sink] = mode == SinkMode::Optimistic;
  return s;
}

Truncation truncate(const LazyGame& base, std::size_t depth, SinkMode mode) {
  // Layered BFS; a state at distance d is expanded iff d <= depth.
  std::vector<std::string> order;
  std::vector<Expansion> expansions;
  std::unordered_map<std::string, std::size_t> dist;
  std::deque<std::string> queue;
  dist.emplace(base.initial(), 0);
  queue.push_back(base.initial());
  std::vector<std::string> frontier;
  std::unordered_set<std::string> frontier_seen;
  while (!queue.empty()) {
    std::string id = std::move(queue.front());
    queue.pop_front();
    const std::size_t d = dist.at(id);
    Expansion e = base.expand(id);
    for (const auto& t : e.successors) {
      if (dist.count(t)) continue;
      if (d + 1 <= depth) {
        dist.emplace(t, d + 1);
        queue.push_back(t);
      } else if (frontier_seen.insert(t).second) {
        frontier.push_back(t);
      }
    }
    order.push_back(std::move(id));
    expansions.push_back(std::move(e));
  }

  std::string sink_id = "__sink";
  while (dist.count(sink_id)) sink_id += "_";

  Truncation tr;
  tr.depth = depth;
  tr.mode = mode;
  tr.frontier = std::move(frontier);
  GameBuilder b;
  for (std::size_t k = 0; k < order.size(); ++k) b.add_state(order[k], expansions[k].owner);
  tr.sink = b.add_state(sink_id, Owner::Random);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto s = static_cast<StateIndex>(k);
    const Expansion& e = expansions[k];
    // Merge all frontier successors into one sink edge.
    std::vector<StateIndex> succ;
    std::vector<Rational> w;
    std::optional<std::size_t> sink_pos;
    for (std::size_t j = 0; j < e.successors.size(); ++j) {
      auto target = b.find(e.successors[j]);
      StateIndex t = target ? *target : tr.sink;
      if (!target) {
        if (sink_pos) {
          if (e.owner == Owner::Random) w[*sink_pos] += e.weights[j];
          continue;
        }
        sink_pos = succ.size();
      }
      succ.push_back(t);
      if (e.owner == Owner::Random) w.push_back(e.weights[j]);
    }
    for (std::size_t j = 0; j < succ.size(); ++j) {
      if (e.owner == Owner::Random) {
        b.add_edge(s, succ[j], w[j]);
      } else {
        b.add_edge(s, succ[j]);
      }
    }
    for (const auto& tag : e.tags) {
      auto& set = tr.tags[tag];
      set.resize(order.size() + 1, false);
      set[s] = true;
    }
  }
  b.add_edge(tr.sink, tr.sink, Rational(1));
  tr.game = std::move(b).build();
  return tr;
}

}  // namespace ssg
