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

#include "ssg/valuation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ssg/chain.hpp"
#include "ssg/graph.hpp"
#include "ssg/qualitative.hpp"

namespace ssg {

SolveMode SolveMode::iterate(double tol) {
  if (!(tol > 0)) throw PreconditionError("tolerance must be positive");
  return {Kind::Iterate, tol};
}

double ValueVector::as_double(StateIndex s) const {
  return precision == Precision::Exact ? exact[s].get_d() : approx[s];
}

const Rational& ValueVector::at(StateIndex s) const {
  if (precision != Precision::Exact) throw std::logic_error("value vector is approximate");
  return exact[s];
}

ValueVector ValueVector::from_exact(std::vector<Rational> v) {
  ValueVector out;
  out.precision = Precision::Exact;
  out.exact = std::move(v);
  return out;
}

namespace {

void check_target(const Game& g, const StateSet& target) {
  if (target.size() != g.size()) throw PreconditionError("target mask size mismatch");
}

// States from which Min can keep the play away from the target forever
// once Max follows `choice`.
StateSet min_safe_states(const Game& g, const StateSet& target,
                         const std::vector<StateIndex>& choice) {
  const std::size_t n = g.size();
  StateSet in = target;
  bool changed = true;
  while (changed) {
    changed = false;
    for (StateIndex s = 0; s < n; ++s) {
      if (in[s]) continue;
      bool add = false;
      switch (g.owner(s)) {
        case Owner::Max: add = in[choice[s]]; break;
        case Owner::Random:
          for (StateIndex t : g.successors(s)) add = add || in[t];
          break;
        case Owner::Min:
          add = true;
          for (StateIndex t : g.successors(s)) add = add && in[t];
          break;
      }
      if (add) {
        in[s] = true;
        changed = true;
      }
    }
  }
  in.flip();
  return in;
}

// Min's best response to the Max choices in `choice`, by strategy
// iteration; updates the Min entries of `choice` in place.
std::vector<Rational> min_best_response(const Game& g, const StateSet& target,
                                        std::vector<StateIndex>& choice) {
  const StateSet zero = min_safe_states(g, target, choice);
  std::vector<Rational> values;
  std::vector<Rational> previous;
  while (true) {
    values = solve_chain_reach(chain_rows(g, choice), target, zero);
    if (!previous.empty()) {
      bool strict = false;
      for (StateIndex s = 0; s < g.size(); ++s) {
        if (values[s] > previous[s]) throw std::logic_error("min strategy iteration went up");
        strict = strict || values[s] < previous[s];
      }
      if (!strict) throw std::logic_error("min strategy iteration stalled");
    }
    bool improved = false;
    for (StateIndex s = 0; s < g.size(); ++s) {
      if (g.owner(s) != Owner::Min || target[s] || zero[s]) continue;
      const Rational* best = &values[choice[s]];
      StateIndex pick = choice[s];
      for (StateIndex t : g.successors(s)) {
        if (values[t] < *best) {
          best = &values[t];
          pick = t;
        }
      }
      if (pick != choice[s]) {
        choice[s] = pick;
        improved = true;
      }
    }
    if (!improved) break;
    previous = values;
  }
  // Inside the zero region Min keeps the play there.
  for (StateIndex s = 0; s < g.size(); ++s) {
    if (g.owner(s) != Owner::Min || !zero[s] || target[s]) continue;
    for (StateIndex t : g.successors(s)) {
      if (zero[t]) {
        choice[s] = t;
        break;
      }
    }
  }
  return values;
}

}  // namespace

ReachSolution solve_reach(const Game& g, const StateSet& target) {
  require_valid(g);
  check_target(g, target);
  const std::size_t n = g.size();
  const StateSet positive = attractor(g, target, Player::Max, true).set;
  std::vector<StateIndex> choice(n);
  for (StateIndex s = 0; s < n; ++s) choice[s] = g.successors(s)[0];
  std::vector<Rational> values;
  std::vector<Rational> previous;
  while (true) {
    values = min_best_response(g, target, choice);
    if (!previous.empty()) {
      bool strict = false;
      for (StateIndex s = 0; s < n; ++s) {
        if (values[s] < previous[s]) throw std::logic_error("max strategy iteration went down");
        strict = strict || values[s] > previous[s];
      }
      if (!strict) throw std::logic_error("max strategy iteration stalled");
    }
    bool improved = false;
    for (StateIndex s = 0; s < n; ++s) {
      if (g.owner(s) != Owner::Max || target[s] || !positive[s]) continue;
      const Rational* best = &values[choice[s]];
      StateIndex pick = choice[s];
      for (StateIndex t : g.successors(s)) {
        if (values[t] > *best) {
          best = &values[t];
          pick = t;
        }
      }
      if (pick != choice[s]) {
        choice[s] = pick;
        improved = true;
      }
    }
    if (!improved) break;
    previous = values;
  }
  // Report a uniformly optimal Min choice: first successor of equal value.
  for (StateIndex s = 0; s < n; ++s) {
    if (g.owner(s) != Owner::Min) continue;
    for (StateIndex t : g.successors(s)) {
      if (values[t] == values[s]) {
        choice[s] = t;
        break;
      }
    }
  }
  return {std::move(values), std::move(choice)};
}

std::vector<Rational> bellman_step(const Game& g, const StateSet& target,
                                   const std::vector<Rational>& v) {
  check_target(g, target);
  auto out = bellman_step_plus(g, v);
  for (StateIndex s = 0; s < g.size(); ++s) {
    if (target[s]) out[s] = 1;
  }
  return out;
}

std::vector<Rational> bellman_step_plus(const Game& g, const std::vector<Rational>& v) {
  if (v.size() != g.size()) throw PreconditionError("value vector size mismatch");
  std::vector<Rational> out(g.size());
  for (StateIndex s = 0; s < g.size(); ++s) {
    auto succ = g.successors(s);
    switch (g.owner(s)) {
      case Owner::Max: {
        Rational best = v[succ[0]];
        for (StateIndex t : succ) {
          if (v[t] > best) best = v[t];
        }
        out[s] = best;
        break;
      }
      case Owner::Min: {
        Rational best = v[succ[0]];
        for (StateIndex t : succ) {
          if (v[t] < best) best = v[t];
        }
        out[s] = best;
        break;
      }
      case Owner::Random: {
        auto w = g.weights(s);
        Rational sum(0);
        for (std::size_t k = 0; k < succ.size(); ++k) sum += w[k] * v[succ[k]];
        out[s] = sum;
        break;
      }
    }
  }
  return out;
}

namespace {

struct FloatGame {
  std::vector<std::vector<StateIndex>> succ;
  std::vector<std::vector<double>> prob;
};

FloatGame to_float(const Game& g) {
  FloatGame f;
  f.succ.resize(g.size());
  f.prob.resize(g.size());
  for (StateIndex s = 0; s < g.size(); ++s) {
    auto succ = g.successors(s);
    f.succ[s].assign(succ.begin(), succ.end());
    for (const auto& w : g.weights(s)) f.prob[s].push_back(w.get_d());
  }
  return f;
}

void float_step(const Game& g, const FloatGame& f, const StateSet& target, const StateSet& zero,
                const std::vector<double>& v, std::vector<double>& out) {
  for (StateIndex s = 0; s < g.size(); ++s) {
    if (target[s]) {
      out[s] = 1;
      continue;
    }
    if (zero[s]) {
      out[s] = 0;
      continue;
    }
    const auto& succ = f.succ[s];
    switch (g.owner(s)) {
      case Owner::Max: {
        double best = 0;
        for (StateIndex t : succ) best = std::max(best, v[t]);
        out[s] = best;
        break;
      }
      case Owner::Min: {
        double best = 1;
        for (StateIndex t : succ) best = std::min(best, v[t]);
        out[s] = best;
        break;
      }
      case Owner::Random: {
        double sum = 0;
        for (std::size_t k = 0; k < succ.size(); ++k) sum += f.prob[s][k] * v[succ[k]];
        out[s] = std::min(1.0, sum);
        break;
      }
    }
  }
}

// Caps the upper bound on end components in which Min can stay forever
// using moves that look optimal for the lower bound. Inside such a
// component the play only leaves through a Max exit, so the best exit
// bounds the value.
void deflate(const Game& g, const StateSet& candidates, const std::vector<double>& lower,
             std::vector<double>& upper) {
  constexpr double kSlack = 1e-12;
  auto allowed = [&](StateIndex s, StateIndex t) {
    if (g.owner(s) != Owner::Min) return true;
    double best = 1;
    for (StateIndex u : g.successors(s)) best = std::min(best, lower[u]);
    return lower[t] <= best + kSlack;
  };
  for (const auto& comp : end_components(g, candidates, allowed)) {
    StateSet inside(g.size(), false);
    for (StateIndex s : comp) inside[s] = true;
    double exit = 0;
    for (StateIndex s : comp) {
      if (g.owner(s) != Owner::Max) continue;
      for (StateIndex t : g.successors(s)) {
        if (!inside[t]) exit = std::max(exit, upper[t]);
      }
    }
    for (StateIndex s : comp) upper[s] = std::min(upper[s], exit);
  }
}

struct Bounds {
  std::vector<double> lower;
  std::vector<double> upper;
  double gap;
};

Bounds iterate_reach(const Game& g, const StateSet& target, double tol) {
  constexpr std::size_t kMaxIterations = 10'000'000;
  const std::size_t n = g.size();
  StateSet zero = attractor(g, target, Player::Max, true).set;
  zero.flip();
  StateSet candidates(n, false);
  for (StateIndex s = 0; s < n; ++s) candidates[s] = !zero[s] && !target[s];
  const FloatGame f = to_float(g);
  std::vector<double> lower(n, 0.0), upper(n, 0.0), scratch(n, 0.0);
  for (StateIndex s = 0; s < n; ++s) {
    lower[s] = target[s] ? 1.0 : 0.0;
    upper[s] = zero[s] ? 0.0 : 1.0;
  }
  for (std::size_t it = 0; it < kMaxIterations; ++it) {
    double gap = 0;
    for (StateIndex s = 0; s < n; ++s) gap = std::max(gap, upper[s] - lower[s]);
    if (gap <= tol) return {std::move(lower), std::move(upper), gap};
    float_step(g, f, target, zero, lower, scratch);
    for (StateIndex s = 0; s < n; ++s) lower[s] = std::max(lower[s], scratch[s]);
    float_step(g, f, target, zero, upper, scratch);
    for (StateIndex s = 0; s < n; ++s) upper[s] = std::min(upper[s], scratch[s]);
    deflate(g, candidates, lower, upper);
  }
  throw std::runtime_error("value iteration did not reach the tolerance");
}

ValueVector approx_vector(std::vector<double> v, double bound) {
  ValueVector out;
  out.precision = Precision::Approx;
  out.approx = std::move(v);
  out.error_bound = bound;
  return out;
}

ValueVector complement(ValueVector v) {
  if (v.precision == Precision::Exact) {
    for (auto& x : v.exact) x = 1 - x;
  } else {
    for (auto& x : v.approx) x = 1 - x;
  }
  return v;
}

}  // namespace

ValueVector value_reach(const Game& g, const StateSet& target, SolveMode mode) {
  if (mode.kind == SolveMode::Kind::Exact) {
    return ValueVector::from_exact(solve_reach(g, target).values);
  }
  if (!(mode.tol > 0)) throw PreconditionError("tolerance must be positive");
  require_valid(g);
  check_target(g, target);
  auto b = iterate_reach(g, target, mode.tol);
  return approx_vector(std::move(b.lower), b.gap);
}

ValueVector value_safety(const Game& g, const StateSet& target, SolveMode mode) {
  return complement(value_reach(swap_players(g), target, mode));
}

ValueVector value_reach_within(const Game& g, const StateSet& target, std::size_t n) {
  require_valid(g);
  check_target(g, target);
  std::vector<Rational> v(g.size(), Rational(0));
  for (StateIndex s = 0; s < g.size(); ++s) {
    if (target[s]) v[s] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) v = bellman_step(g, target, v);
  return ValueVector::from_exact(std::move(v));
}

std::size_t epsilon_horizon(const Game& g, const StateSet& target, StateIndex s,
                            const Rational& eps) {
  if (eps <= 0) throw PreconditionError("eps must be positive");
  const auto value = solve_reach(g, target).values;
  std::vector<Rational> v(g.size(), Rational(0));
  for (StateIndex u = 0; u < g.size(); ++u) {
    if (target[u]) v[u] = 1;
  }
  const Rational goal = value[s] - eps;
  std::size_t n = 0;
  // Iterates converge to the value, so the loop ends on finite games.
  while (!(v[s] > goal)) {
    v = bellman_step(g, target, v);
    ++n;
  }
  return n;
}

ValueVector value_reach_plus(const Game& g, const StateSet& target, SolveMode mode) {
  auto reach = value_reach(g, target, mode);
  if (reach.precision == Precision::Exact) {
    return ValueVector::from_exact(bellman_step_plus(g, reach.exact));
  }
  std::vector<Rational> as_rational(reach.approx.begin(), reach.approx.end());
  auto stepped = bellman_step_plus(g, as_rational);
  std::vector<double> out;
  for (const auto& x : stepped) out.push_back(x.get_d());
  return approx_vector(std::move(out), reach.error_bound);
}

ValueVector value_buchi(const Game& g, const StateSet& buchi, SolveMode mode) {
  require_valid(g);
  check_target(g, buchi);
  const auto region = almost_sure_buchi(g, buchi).max_wins;
  return value_reach(g, region, mode);
}

ValueVector value_cobuchi(const Game& g, const StateSet& buchi, SolveMode mode) {
  return complement(value_buchi(swap_players(g), buchi, mode));
}

ValueVector value_of(const Game& g, ObjectiveKind kind, const StateSet& target,
                     std::size_t horizon, SolveMode mode) {
  switch (kind) {
    case ObjectiveKind::Reach: return value_reach(g, target, mode);
    case ObjectiveKind::ReachWithin: return value_reach_within(g, target, horizon);
    case ObjectiveKind::ReachPlus: return value_reach_plus(g, target, mode);
    case ObjectiveKind::Safety: return value_safety(g, target, mode);
    case ObjectiveKind::Buchi: return value_buchi(g, target, mode);
    case ObjectiveKind::CoBuchi: return value_cobuchi(g, target, mode);
  }
  throw std::logic_error("unknown objective kind");
}

IntervalValues interval_values(const LazyGame& base, ObjectiveKind kind, const std::string& tag,
                               std::size_t depth) {
  const bool flipped = kind == ObjectiveKind::Safety || kind == ObjectiveKind::CoBuchi;
  if (!flipped && kind != ObjectiveKind::Reach && kind != ObjectiveKind::Buchi) {
    throw PreconditionError("interval values support reach, safety, buchi and cobuchi");
  }
  IntervalValues out;
  out.depth = depth;
  out.lower_game = truncate(base, depth, flipped ? SinkMode::Optimistic : SinkMode::Pessimistic);
  out.upper_game = truncate(base, depth, flipped ? SinkMode::Pessimistic : SinkMode::Optimistic);
  out.lower = value_of(out.lower_game.game, kind, out.lower_game.tagged(tag));
  out.upper = value_of(out.upper_game.game, kind, out.upper_game.tagged(tag));
  return out;
}

}  // namespace ssg
