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

#include "ssg/strategy.hpp"

#include <sstream>
#include <stdexcept>

#include "ssg/qualitative.hpp"
#include "ssg/valuation.hpp"

namespace ssg {

void check_md(const Game& g, const MDStrategy& m) {
  if (m.choice.size() != g.size()) throw PreconditionError("strategy size does not match game");
  const Owner mine = owner_of(m.owner);
  for (StateIndex s = 0; s < g.size(); ++s) {
    if (g.owner(s) != mine) continue;
    if (m.choice[s] >= g.size() || !g.has_edge(s, m.choice[s])) {
      throw PreconditionError("strategy choice at '" + g.id(s) + "' is not an edge");
    }
  }
}

MDStrategy first_choice(const Game& g, Player owner) {
  MDStrategy m{owner, std::vector<StateIndex>(g.size(), 0)};
  const Owner mine = owner_of(owner);
  for (StateIndex s = 0; s < g.size(); ++s) {
    if (g.owner(s) == mine) m.choice[s] = g.successors(s)[0];
  }
  return m;
}

Game apply(const Game& g, const MDStrategy& m) {
  check_md(g, m);
  return fix_choices(g, m.owner, m.choice);
}

void check_transducer(const Game& g, const TransducerStrategy& t) {
  const std::size_t modes = t.modes.size();
  if (modes == 0) throw PreconditionError("transducer has no modes");
  if (t.update.size() != modes || t.move.size() != modes) {
    throw PreconditionError("transducer tables do not match the mode count");
  }
  const Owner mine = owner_of(t.owner);
  for (std::size_t m = 0; m < modes; ++m) {
    if (t.update[m].size() != g.size() || t.move[m].size() != g.size()) {
      throw PreconditionError("transducer tables do not match the game");
    }
    for (StateIndex s = 0; s < g.size(); ++s) {
      const auto& u = t.update[m][s];
      if (!u.to.empty()) {
        Rational sum(0);
        for (std::size_t k = 0; k < u.to.size(); ++k) {
          if (u.to[k] >= modes || u.prob[k] <= 0) {
            throw PreconditionError("bad update row at mode " + t.modes[m] + ", state '" +
                                    g.id(s) + "'");
          }
          sum += u.prob[k];
        }
        if (sum != 1) {
          throw PreconditionError("update row at mode " + t.modes[m] + ", state '" + g.id(s) +
                                  "' sums to " + format_rational(sum));
        }
      }
      if (g.owner(s) != mine) continue;
      const auto& mv = t.move[m][s];
      if (mv.to.empty()) {
        throw PreconditionError("no move at mode " + t.modes[m] + ", state '" + g.id(s) + "'");
      }
      Rational sum(0);
      for (std::size_t k = 0; k < mv.to.size(); ++k) {
        if (mv.to[k] >= g.size() || !g.has_edge(s, static_cast<StateIndex>(mv.to[k])) ||
            mv.prob[k] <= 0) {
          throw PreconditionError("move at mode " + t.modes[m] + ", state '" + g.id(s) +
                                  "' is not a distribution over successors");
        }
        sum += mv.prob[k];
      }
      if (sum != 1) {
        throw PreconditionError("move at mode " + t.modes[m] + ", state '" + g.id(s) +
                                "' sums to " + format_rational(sum));
      }
    }
  }
}

TransducerStrategy to_transducer(const Game& g, const MDStrategy& m) {
  check_md(g, m);
  TransducerStrategy t;
  t.owner = m.owner;
  t.modes = {"m0"};
  t.update.assign(1, std::vector<TransducerStrategy::Row>(g.size()));
  t.move.assign(1, std::vector<TransducerStrategy::Row>(g.size()));
  const Owner mine = owner_of(m.owner);
  for (StateIndex s = 0; s < g.size(); ++s) {
    if (g.owner(s) == mine) t.move[0][s] = {{m.choice[s]}, {Rational(1)}};
  }
  return t;
}

std::optional<MDStrategy> to_md(const TransducerStrategy& t) {
  if (t.modes.size() != 1) return std::nullopt;
  MDStrategy m{t.owner, std::vector<StateIndex>(t.move[0].size(), 0)};
  for (std::size_t s = 0; s < t.move[0].size(); ++s) {
    const auto& row = t.move[0][s];
    if (row.to.empty()) continue;
    if (row.to.size() != 1 || row.prob[0] != 1) return std::nullopt;
    m.choice[s] = static_cast<StateIndex>(row.to[0]);
  }
  for (const auto& u : t.update[0]) {
    if (!u.to.empty() && (u.to.size() != 1 || u.to[0] != 0)) return std::nullopt;
  }
  return m;
}

namespace {

// Backward layering from the target: Max states join through an equal-value
// successor, Random states through any successor, Min states once all
// equal-value successors have joined. States of value 0 never join.
std::vector<int> progress_rank(const Game& g, const StateSet& target,
                               const std::vector<Rational>& values) {
  const std::size_t n = g.size();
  std::vector<int> rank(n, -1);
  for (StateIndex s = 0; s < n; ++s) {
    if (target[s]) rank[s] = 0;
  }
  for (int layer = 1;; ++layer) {
    std::vector<StateIndex> joined;
    for (StateIndex s = 0; s < n; ++s) {
      if (rank[s] >= 0 || values[s] == 0) continue;
      auto ranked = [&](StateIndex t) { return rank[t] >= 0 && rank[t] < layer; };
      bool join = false;
      switch (g.owner(s)) {
        case Owner::Max:
          for (StateIndex t : g.successors(s)) join = join || (values[t] == values[s] && ranked(t));
          break;
        case Owner::Random:
          for (StateIndex t : g.successors(s)) join = join || ranked(t);
          break;
        case Owner::Min:
          join = true;
          for (StateIndex t : g.successors(s)) {
            if (values[t] == values[s]) join = join && ranked(t);
          }
          break;
      }
      if (join) joined.push_back(s);
    }
    if (joined.empty()) break;
    for (StateIndex s : joined) rank[s] = layer;
  }
  return rank;
}

// Max choice of least rank among equal-value successors, first in list.
StateIndex ranked_choice(const Game& g, StateIndex s, const std::vector<Rational>& values,
                         const std::vector<int>& rank) {
  std::optional<StateIndex> best;
  for (StateIndex t : g.successors(s)) {
    if (values[t] != values[s]) continue;
    if (!best) {
      best = t;
      continue;
    }
    const int rb = rank[*best];
    const int rt = rank[t];
    if (rt >= 0 && (rb < 0 || rt < rb)) best = t;
  }
  return best ? *best : g.successors(s)[0];
}

std::string edge_list(const Game& g, const std::vector<Edge>& edges) {
  std::ostringstream os;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (k) os << ", ";
    os << g.id(edges[k].first) << " -> " << g.id(edges[k].second);
  }
  return os.str();
}

}  // namespace

MDStrategy optimal_min_md(const Game& g, const StateSet& target) {
  const auto values = solve_reach(g, target).values;
  MDStrategy m = first_choice(g, Player::Min);
  for (StateIndex s = 0; s < g.size(); ++s) {
    if (g.owner(s) != Owner::Min) continue;
    for (StateIndex t : g.successors(s)) {
      if (values[t] == values[s]) {
        m.choice[s] = t;
        break;
      }
    }
  }
  return m;
}

MDStrategy optimal_max_md_no_decrease(const Game& g, const StateSet& target) {
  const auto values = solve_reach(g, target).values;
  std::vector<Edge> bad;
  for (StateIndex s = 0; s < g.size(); ++s) {
    if (g.owner(s) != Owner::Max || target[s]) continue;
    for (StateIndex t : g.successors(s)) {
      if (values[t] < values[s]) bad.emplace_back(s, t);
    }
  }
  if (!bad.empty()) {
    throw PreconditionError("value-decreasing Max edges: " + edge_list(g, bad));
  }
  const auto rank = progress_rank(g, target, values);
  MDStrategy m = first_choice(g, Player::Max);
  for (StateIndex s = 0; s < g.size(); ++s) {
    if (g.owner(s) == Owner::Max && !target[s]) m.choice[s] = ranked_choice(g, s, values, rank);
  }
  return m;
}

MDStrategy reachplus_min_md(const Game& g, const StateSet& target) {
  const auto values = solve_reach(g, target).values;
  const auto plus = bellman_step_plus(g, values);
  MDStrategy m = first_choice(g, Player::Min);
  for (StateIndex s = 0; s < g.size(); ++s) {
    if (g.owner(s) != Owner::Min) continue;
    if (!target[s]) {
      for (StateIndex t : g.successors(s)) {
        if (values[t] == values[s]) {
          m.choice[s] = t;
          break;
        }
      }
    } else if (plus[s] < 1) {
      bool found = false;
      for (StateIndex t : g.successors(s)) {
        if (!target[t] && values[t] == plus[s]) {
          m.choice[s] = t;
          found = true;
          break;
        }
      }
      if (!found) throw std::logic_error("no off-target successor keeps the value at " + g.id(s));
    }
  }
  return m;
}

MDStrategy reachplus_max_md(const Game& g, const StateSet& target) {
  const auto values = solve_reach(g, target).values;
  const auto plus = bellman_step_plus(g, values);
  std::vector<Edge> bad;
  for (StateIndex s = 0; s < g.size(); ++s) {
    if (g.owner(s) != Owner::Max) continue;
    for (StateIndex t : g.successors(s)) {
      if (plus[t] < plus[s]) bad.emplace_back(s, t);
    }
  }
  if (!bad.empty()) {
    throw PreconditionError("value-decreasing Max edges for Reach+: " + edge_list(g, bad));
  }
  const auto rank = progress_rank(g, target, values);
  MDStrategy m = first_choice(g, Player::Max);
  for (StateIndex s = 0; s < g.size(); ++s) {
    if (g.owner(s) != Owner::Max) continue;
    if (!target[s]) {
      m.choice[s] = ranked_choice(g, s, values, rank);
      continue;
    }
    for (StateIndex t : g.successors(s)) {
      if (target[t] || plus[t] == plus[s]) {
        m.choice[s] = t;
        break;
      }
    }
  }
  return m;
}

BuchiStrategies buchi_md_pair(const Game& g, const StateSet& buchi) {
  const auto rec = buchi_peeling(g, buchi);
  const auto& part = rec.partition;
  BuchiStrategies out{first_choice(g, Player::Max), first_choice(g, Player::Min), part.max_wins,
                      part.min_wins};
  const std::size_t n = g.size();
  if (set_count(part.max_wins) > 0) {
    const Game& last = rec.round_games.back();
    StateSet goal(n, false);
    for (StateIndex s = 0; s < n; ++s) goal[s] = part.max_wins[s] && buchi[s];
    const MDStrategy inner = reachplus_max_md(last, goal);
    for (StateIndex s = 0; s < n; ++s) {
      if (g.owner(s) == Owner::Max && part.max_wins[s]) out.max.choice[s] = inner.choice[s];
    }
  }
  std::vector<std::optional<MDStrategy>> per_round(rec.round_games.size());
  for (StateIndex s = 0; s < n; ++s) {
    if (g.owner(s) != Owner::Min || !part.min_wins[s]) continue;
    if (rec.layer[s] > 0) {
      out.min.choice[s] = rec.descent[s];
      continue;
    }
    const auto round = static_cast<std::size_t>(part.index[s]);
    if (!per_round[round]) {
      StateSet goal(n, false);
      for (StateIndex u = 0; u < n; ++u) goal[u] = rec.round_alive[round][u] && buchi[u];
      per_round[round] = reachplus_min_md(rec.round_games[round], goal);
    }
    out.min.choice[s] = per_round[round]->choice[s];
  }
  check_md(g, out.max);
  check_md(g, out.min);
  return out;
}

const char* winner_name(Winner w) {
  switch (w) {
    case Winner::Max: return "max";
    case Winner::Min: return "min";
    case Winner::OutOfScope: return "out-of-scope";
  }
  return "?";
}

}  // namespace ssg
