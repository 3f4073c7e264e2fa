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
#include "ssg/strategy.hpp"
#include "ssg/transforms.hpp"
#include "ssg/valuation.hpp"

namespace ssg {
namespace {

// Strategy pair from the value peeling: Max plays the rank-based optimal
// strategy of the final round on never-dropping states, Min keeps the
// round value on states whose value dropped.
ThresholdVerdict from_peeling(const Game& g, const StateSet& target, StateIndex initial,
                              const std::string& reason, const Rational& value) {
  const auto rec = reach_peeling(g, target);
  ThresholdVerdict v;
  v.reason = reason;
  v.value = value;
  if (rec.drop_index[initial] == kNoIndex) {
    const Game& last = rec.round_games.back();
    const MDStrategy inner = optimal_max_md_no_decrease(last, target);
    MDStrategy sigma = first_choice(g, Player::Max);
    for (StateIndex s = 0; s < g.size(); ++s) {
      if (g.owner(s) == Owner::Max && g.has_edge(s, inner.choice[s])) {
        sigma.choice[s] = inner.choice[s];
      }
    }
    v.winner = Winner::Max;
    v.strategy = std::move(sigma);
    return v;
  }
  MDStrategy pi = first_choice(g, Player::Min);
  for (StateIndex s = 0; s < g.size(); ++s) {
    if (g.owner(s) != Owner::Min) continue;
    const int idx = rec.drop_index[s];
    const auto& vals = idx == kNoIndex ? rec.values : rec.round_values[idx];
    const Game& round = rec.round_games[idx == kNoIndex ? 0 : idx];
    for (StateIndex t : round.successors(s)) {
      if (vals[t] == vals[s] && (idx == kNoIndex || rec.drop_index[t] == idx)) {
        pi.choice[s] = t;
        break;
      }
    }
  }
  check_md(g, pi);
  v.winner = Winner::Min;
  v.strategy = std::move(pi);
  return v;
}

}  // namespace

ThresholdVerdict threshold_decide(const Game& g, const StateSet& target, StateIndex initial,
                                  const Rational& c, bool strict) {
  if (c < 0 || c > 1) throw PreconditionError("threshold must lie in [0, 1]");
  if (initial >= g.size()) throw PreconditionError("initial state out of range");
  const auto sol = solve_reach(g, target);
  const Rational& value = sol.values[initial];
  ThresholdVerdict v;
  v.value = value;
  if (value < c) {
    v.winner = Winner::Min;
    v.strategy = optimal_min_md(g, target);
    v.reason = "value<c";
    return v;
  }
  if (value > c) {
    MDStrategy sigma{Player::Max, sol.choice};
    v.winner = Winner::Max;
    v.strategy = std::move(sigma);
    v.reason = "value>c-finite-horizon";
    return v;
  }
  if (strict) {
    v.winner = Winner::Min;
    v.strategy = optimal_min_md(g, target);
    v.reason = "case-4";
    return v;
  }
  if (c == 0) {
    v.winner = Winner::Max;
    v.strategy = first_choice(g, Player::Max);
    v.reason = "trivial-zero";
    return v;
  }
  bool decreasing = false;
  for (StateIndex s = 0; s < g.size() && !decreasing; ++s) {
    if (g.owner(s) != Owner::Max || target[s]) continue;
    for (StateIndex t : g.successors(s)) decreasing = decreasing || sol.values[t] < sol.values[s];
  }
  if (!decreasing) {
    v.winner = Winner::Max;
    v.strategy = optimal_max_md_no_decrease(g, target);
    v.reason = "case-1";
    return v;
  }
  if (c == 1) return from_peeling(g, target, initial, "case-3", value);
  if (rvi(g, target) == g) return from_peeling(g, target, initial, "case-2", value);
  v.winner = Winner::OutOfScope;
  v.reason = "none-applicable";
  return v;
}

}  // namespace ssg
