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

#include "ssg/oracle.hpp"

#include <deque>
#include <stdexcept>

#include "ssg/errors.hpp"

namespace ssg {
namespace {

struct Dist {
  std::vector<StateIndex> to;
  std::vector<Rational> p;
};
using Chain = std::vector<Dist>;

// States that reach `goal` with positive probability.
StateSet positive_states(const Chain& c, const StateSet& goal) {
  const std::size_t n = c.size();
  std::vector<std::vector<StateIndex>> pred(n);
  for (StateIndex s = 0; s < n; ++s) {
    for (StateIndex t : c[s].to) pred[t].push_back(s);
  }
  StateSet seen = goal;
  std::deque<StateIndex> queue;
  for (StateIndex s = 0; s < n; ++s) {
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

// Reach probabilities by one dense elimination over the states that reach
// the goal with positive probability.
std::vector<Rational> chain_reach_dense(const Chain& c, const StateSet& goal) {
  const std::size_t n = c.size();
  const StateSet pos = positive_states(c, goal);
  std::vector<long> col(n, -1);
  std::vector<StateIndex> unknown;
  for (StateIndex s = 0; s < n; ++s) {
    if (pos[s] && !goal[s]) {
      col[s] = static_cast<long>(unknown.size());
      unknown.push_back(s);
    }
  }
  const std::size_t m = unknown.size();
  // Augmented matrix [I - P | b].
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1, Rational(0)));
  for (std::size_t r = 0; r < m; ++r) {
    const Dist& d = c[unknown[r]];
    a[r][r] += 1;
    for (std::size_t k = 0; k < d.to.size(); ++k) {
      StateIndex t = d.to[k];
      if (goal[t]) {
        a[r][m] += d.p[k];
      } else if (col[t] >= 0) {
        a[r][static_cast<std::size_t>(col[t])] -= d.p[k];
      }
    }
  }
  for (std::size_t p = 0; p < m; ++p) {
    std::size_t piv = p;
    while (piv < m && a[piv][p] == 0) ++piv;
    if (piv == m) throw std::logic_error("singular chain system");
    std::swap(a[p], a[piv]);
    const Rational inv = 1 / a[p][p];
    for (std::size_t j = p; j <= m; ++j) a[p][j] *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == p || a[r][p] == 0) continue;
      const Rational f = a[r][p];
      for (std::size_t j = p; j <= m; ++j) a[r][j] -= f * a[p][j];
    }
  }
  std::vector<Rational> x(n, Rational(0));
  for (StateIndex s = 0; s < n; ++s) {
    if (goal[s]) x[s] = 1;
    if (col[s] >= 0) x[s] = a[static_cast<std::size_t>(col[s])][m];
  }
  return x;
}

// reach[s][t]: t is reachable from s (reflexive).
std::vector<std::vector<bool>> closure(const std::vector<std::vector<StateIndex>>& adj) {
  const std::size_t n = adj.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (StateIndex s = 0; s < n; ++s) {
    std::vector<StateIndex> stack{s};
    reach[s][s] = true;
    while (!stack.empty()) {
      StateIndex u = stack.back();
      stack.pop_back();
      for (StateIndex v : adj[u]) {
        if (!reach[s][v]) {
          reach[s][v] = true;
          stack.push_back(v);
        }
      }
    }
  }
  return reach;
}

// Union of bottom components whose membership in `mark` matches `want_mark`
// for at least one state (want_mark) or for no state (!want_mark).
StateSet good_bottoms(const Chain& c, const StateSet& mark, bool want_mark) {
  const std::size_t n = c.size();
  std::vector<std::vector<StateIndex>> adj(n);
  for (StateIndex s = 0; s < n; ++s) adj[s] = c[s].to;
  const auto reach = closure(adj);
  StateSet good(n, false);
  for (StateIndex s = 0; s < n; ++s) {
    bool bottom = true;
    bool has_mark = false;
    for (StateIndex t = 0; t < n && bottom; ++t) {
      if (!reach[s][t]) continue;
      bottom = reach[t][s];
      has_mark = has_mark || mark[t];
    }
    if (bottom && has_mark == want_mark) good[s] = true;
  }
  return good;
}

Chain induced_chain(const Game& g, const std::vector<StateIndex>& choice) {
  Chain c(g.size());
  for (StateIndex s = 0; s < g.size(); ++s) {
    if (g.owner(s) == Owner::Random) {
      auto succ = g.successors(s);
      auto w = g.weights(s);
      c[s].to.assign(succ.begin(), succ.end());
      c[s].p.assign(w.begin(), w.end());
    } else {
      c[s].to = {choice[s]};
      c[s].p = {Rational(1)};
    }
  }
  return c;
}

std::vector<Rational> chain_objective(const Chain& c, ObjectiveKind kind, const StateSet& target) {
  switch (kind) {
    case ObjectiveKind::Reach: return chain_reach_dense(c, target);
    case ObjectiveKind::Safety: {
      auto r = chain_reach_dense(c, target);
      for (auto& v : r) v = 1 - v;
      return r;
    }
    case ObjectiveKind::ReachPlus: {
      const auto r = chain_reach_dense(c, target);
      std::vector<Rational> out(c.size(), Rational(0));
      for (StateIndex s = 0; s < c.size(); ++s) {
        for (std::size_t k = 0; k < c[s].to.size(); ++k) {
          StateIndex t = c[s].to[k];
          out[s] += c[s].p[k] * (target[t] ? Rational(1) : r[t]);
        }
      }
      return out;
    }
    case ObjectiveKind::Buchi: return chain_reach_dense(c, good_bottoms(c, target, true));
    case ObjectiveKind::CoBuchi: return chain_reach_dense(c, good_bottoms(c, target, false));
    case ObjectiveKind::ReachWithin: break;
  }
  throw PreconditionError("the oracle does not support this objective");
}

// Owned states of one player and a mixed-radix counter over their choices.
struct Odometer {
  std::vector<StateIndex> states;
  std::vector<std::size_t> digit;

  Odometer(const Game& g, Owner o) {
    for (StateIndex s = 0; s < g.size(); ++s) {
      if (g.owner(s) == o) states.push_back(s);
    }
    digit.assign(states.size(), 0);
  }
  void write(const Game& g, std::vector<StateIndex>& choice) const {
    for (std::size_t k = 0; k < states.size(); ++k) {
      choice[states[k]] = g.successors(states[k])[digit[k]];
    }
  }
  // False once the counter wraps around.
  bool next(const Game& g) {
    for (std::size_t k = 0; k < states.size(); ++k) {
      if (++digit[k] < g.successors(states[k]).size()) return true;
      digit[k] = 0;
    }
    return false;
  }
};

// Maximal end components of the subgraph on `within`. Random states must
// keep all successors inside; owned states need one successor inside.
std::vector<std::vector<StateIndex>> mecs(const Game& g, StateSet within) {
  const std::size_t n = g.size();
  for (;;) {
    std::vector<std::vector<StateIndex>> adj(n);
    for (StateIndex s = 0; s < n; ++s) {
      if (!within[s]) continue;
      for (StateIndex t : g.successors(s)) {
        if (within[t]) adj[s].push_back(t);
      }
    }
    const auto reach = closure(adj);
    auto same = [&](StateIndex a, StateIndex b) { return reach[a][b] && reach[b][a]; };
    bool removed = false;
    StateSet next = within;
    for (StateIndex s = 0; s < n; ++s) {
      if (!within[s]) continue;
      bool keep;
      if (g.owner(s) == Owner::Random) {
        keep = true;
        for (StateIndex t : g.successors(s)) keep = keep && within[t] && same(s, t);
      } else {
        keep = false;
        for (StateIndex t : g.successors(s)) keep = keep || (within[t] && same(s, t));
      }
      if (!keep) {
        next[s] = false;
        removed = true;
      }
    }
    within = next;
    if (removed) continue;
    std::vector<std::vector<StateIndex>> out;
    StateSet done(n, false);
    for (StateIndex s = 0; s < n; ++s) {
      if (!within[s] || done[s]) continue;
      std::vector<StateIndex> comp;
      for (StateIndex t = 0; t < n; ++t) {
        if (within[t] && same(s, t)) {
          comp.push_back(t);
          done[t] = true;
        }
      }
      out.push_back(std::move(comp));
    }
    return out;
  }
}

// Maximal probability of reaching `goal` when `active` controls every
// owned state, by strategy iteration with strict switching.
std::vector<Rational> max_reach(const Game& g, Owner active, const StateSet& goal) {
  std::vector<StateIndex> choice(g.size(), 0);
  for (StateIndex s = 0; s < g.size(); ++s) {
    if (g.owner(s) != Owner::Random) choice[s] = g.successors(s)[0];
  }
  std::vector<Rational> v = chain_reach_dense(induced_chain(g, choice), goal);
  for (;;) {
    bool switched = false;
    for (StateIndex s = 0; s < g.size(); ++s) {
      if (g.owner(s) != active || goal[s]) continue;
      StateIndex best = choice[s];
      for (StateIndex t : g.successors(s)) {
        if (v[t] > v[best]) best = t;
      }
      if (best != choice[s]) {
        choice[s] = best;
        switched = true;
      }
    }
    if (!switched) return v;
    auto w = chain_reach_dense(induced_chain(g, choice), goal);
    for (StateIndex s = 0; s < g.size(); ++s) {
      if (w[s] < v[s]) throw std::logic_error("strategy iteration decreased a value");
    }
    v = std::move(w);
  }
}

}  // namespace

std::size_t md_pair_count(const Game& g, std::size_t max_count) {
  std::size_t count = 1;
  for (StateIndex s = 0; s < g.size(); ++s) {
    if (g.owner(s) == Owner::Random) continue;
    count *= g.successors(s).size();
    if (count > max_count) return max_count + 1;
  }
  return count;
}

ValueVector md_enumeration_oracle(const Game& g, ObjectiveKind kind, const StateSet& target,
                                  std::size_t pair_bound) {
  if (kind == ObjectiveKind::ReachWithin) {
    throw PreconditionError("the oracle does not support step-bounded reachability");
  }
  if (target.size() != g.size()) throw PreconditionError("target set does not match the game");
  if (md_pair_count(g, pair_bound) > pair_bound) {
    throw PreconditionError("more than " + std::to_string(pair_bound) + " MD strategy pairs");
  }
  const std::size_t n = g.size();
  std::vector<StateIndex> choice(n, 0);
  Odometer sigma(g, Owner::Max);
  std::vector<Rational> best(n, Rational(0));
  bool first_sigma = true;
  do {
    sigma.write(g, choice);
    Odometer pi(g, Owner::Min);
    std::vector<Rational> worst(n, Rational(1));
    do {
      pi.write(g, choice);
      const auto r = chain_objective(induced_chain(g, choice), kind, target);
      for (StateIndex s = 0; s < n; ++s) {
        if (r[s] < worst[s]) worst[s] = r[s];
      }
    } while (pi.next(g));
    for (StateIndex s = 0; s < n; ++s) {
      if (first_sigma || worst[s] > best[s]) best[s] = worst[s];
    }
    first_sigma = false;
  } while (sigma.next(g));
  return ValueVector::from_exact(std::move(best));
}

ValueVector mdp_buchi_exact(const Game& g, const StateSet& buchi) {
  bool has_max = false;
  bool has_min = false;
  for (StateIndex s = 0; s < g.size(); ++s) {
    has_max = has_max || g.owner(s) == Owner::Max;
    has_min = has_min || g.owner(s) == Owner::Min;
  }
  if (has_max && has_min) throw PreconditionError("both players own states");
  if (buchi.size() != g.size()) throw PreconditionError("Buchi set does not match the game");
  const std::size_t n = g.size();
  if (!has_min) {
    StateSet good(n, false);
    for (const auto& comp : mecs(g, StateSet(n, true))) {
      bool accepting = false;
      for (StateIndex s : comp) accepting = accepting || buchi[s];
      if (!accepting) continue;
      for (StateIndex s : comp) good[s] = true;
    }
    return ValueVector::from_exact(max_reach(g, Owner::Max, good));
  }
  // Min escapes Buchi by settling in an end component free of Buchi states.
  StateSet off(n, false);
  for (StateIndex s = 0; s < n; ++s) off[s] = !buchi[s];
  StateSet bad(n, false);
  for (const auto& comp : mecs(g, off)) {
    for (StateIndex s : comp) bad[s] = true;
  }
  auto v = max_reach(g, Owner::Min, bad);
  for (auto& x : v) x = 1 - x;
  return ValueVector::from_exact(std::move(v));
}

}  // namespace ssg
