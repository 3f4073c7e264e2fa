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

#ifndef SSG_VALUATION_HPP_
#define SSG_VALUATION_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "ssg/game.hpp"
#include "ssg/objective.hpp"

namespace ssg {

struct SolveMode {
  enum class Kind { Exact, Iterate };
  Kind kind = Kind::Exact;
  double tol = 0;

  static SolveMode exact() { return {}; }
  // Throws PreconditionError unless tol > 0.
  static SolveMode iterate(double tol);
};

enum class Precision { Exact, Approx };

struct ValueVector {
  Precision precision = Precision::Exact;
  std::vector<Rational> exact;
  std::vector<double> approx;
  // Sup-norm bound on the distance to the true vector in Approx mode.
  double error_bound = 0;

  std::size_t size() const { return precision == Precision::Exact ? exact.size() : approx.size(); }
  double as_double(StateIndex s) const;
  // Throws std::logic_error for approximate vectors.
  const Rational& at(StateIndex s) const;

  static ValueVector from_exact(std::vector<Rational> v);
};

// Exact reach values together with an optimal choice for every owned state.
// The Max choices come from strategy iteration; the Min choices pick the
// first successor of equal value.
struct ReachSolution {
  std::vector<Rational> values;
  std::vector<StateIndex> choice;
};
ReachSolution solve_reach(const Game& g, const StateSet& target);

// One application of the Bellman operator; target states map to 1.
std::vector<Rational> bellman_step(const Game& g, const StateSet& target,
                                   const std::vector<Rational>& v);
// Same operator without the target override: the value of moving once and
// then being scored by v.
std::vector<Rational> bellman_step_plus(const Game& g, const std::vector<Rational>& v);

ValueVector value_reach(const Game& g, const StateSet& target, SolveMode mode = {});
ValueVector value_safety(const Game& g, const StateSet& target, SolveMode mode = {});
ValueVector value_reach_within(const Game& g, const StateSet& target, std::size_t n);
// Least n such that the n-step reach value at s exceeds the reach value
// minus eps. Throws PreconditionError unless eps > 0.
std::size_t epsilon_horizon(const Game& g, const StateSet& target, StateIndex s,
                            const Rational& eps);
ValueVector value_reach_plus(const Game& g, const StateSet& target, SolveMode mode = {});
ValueVector value_buchi(const Game& g, const StateSet& buchi, SolveMode mode = {});
ValueVector value_cobuchi(const Game& g, const StateSet& buchi, SolveMode mode = {});

// Value of any objective kind; dispatches to the functions above.
ValueVector value_of(const Game& g, ObjectiveKind kind, const StateSet& target,
                     std::size_t horizon = 0, SolveMode mode = {});

struct IntervalValues {
  Truncation lower_game;
  Truncation upper_game;
  ValueVector lower;
  ValueVector upper;
  std::size_t depth = 0;

  // Interval at the lazy game's initial state.
  Rational lower_at_initial() const { return lower.at(0); }
  Rational upper_at_initial() const { return upper.at(0); }
};

// Exact bounds from the two truncations of `base` at `depth`. The target
// set is the states tagged `tag`. For Reach and Buchi the lower bound
// uses the Pessimistic sink; for Safety and CoBuchi it uses the Optimistic
// one, since a target sink hurts the maximizer there.
IntervalValues interval_values(const LazyGame& base, ObjectiveKind kind, const std::string& tag,
                               std::size_t depth);

}  // namespace ssg

#endif  // SSG_VALUATION_HPP_
