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

#ifndef SSG_STRATEGY_HPP_
#define SSG_STRATEGY_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ssg/game.hpp"

namespace ssg {

// Memoryless deterministic strategy. choice[s] is meaningful exactly for
// the owner's states.
struct MDStrategy {
  Player owner = Player::Max;
  std::vector<StateIndex> choice;

  bool operator==(const MDStrategy&) const = default;
};

// Throws PreconditionError unless the strategy picks an edge at every state
// of its owner.
void check_md(const Game& g, const MDStrategy& m);

// First successor at every owned state.
MDStrategy first_choice(const Game& g, Player owner);

// The game with the strategy's owner replaced by the fixed choices.
Game apply(const Game& g, const MDStrategy& m);

// Finite-memory randomized strategy given as a probabilistic transducer.
// Modes are numbered from 0; mode 0 is initial. update is indexed by
// (mode, observed state) and move by (mode, owned state). An empty update
// row keeps the mode.
struct TransducerStrategy {
  struct Row {
    std::vector<std::size_t> to;  // modes, or successor states for moves
    std::vector<Rational> prob;
  };
  Player owner = Player::Max;
  std::vector<std::string> modes;
  std::vector<std::vector<Row>> update;  // [mode][state]
  std::vector<std::vector<Row>> move;    // [mode][state]
};

// Throws PreconditionError on bad distributions or moves that are not edges.
void check_transducer(const Game& g, const TransducerStrategy& t);

TransducerStrategy to_transducer(const Game& g, const MDStrategy& m);
// The MD strategy realized by a one-mode Dirac transducer, if it is one.
std::optional<MDStrategy> to_md(const TransducerStrategy& t);

// Min picks the first successor whose reach value equals its own.
MDStrategy optimal_min_md(const Game& g, const StateSet& target);

// Max picks, among successors of equal value, the one of least rank in the
// backward layering from the target through value-preserving edges.
// Throws PreconditionError naming every value-decreasing Max edge.
MDStrategy optimal_max_md_no_decrease(const Game& g, const StateSet& target);

// Reach+ variants. On target states Min leaves the target when its Reach+
// value is below 1 and Max stays in the target or keeps the value.
MDStrategy reachplus_min_md(const Game& g, const StateSet& target);
// Throws PreconditionError naming every Max edge that decreases the Reach+
// value outside the target.
MDStrategy reachplus_max_md(const Game& g, const StateSet& target);

struct BuchiStrategies {
  MDStrategy max;  // winning on max_wins
  MDStrategy min;  // winning on min_wins
  StateSet max_wins;
  StateSet min_wins;
};
BuchiStrategies buchi_md_pair(const Game& g, const StateSet& buchi);

enum class Winner { Max, Min, OutOfScope };

const char* winner_name(Winner w);

struct ThresholdVerdict {
  Winner winner = Winner::OutOfScope;
  std::optional<MDStrategy> strategy;
  // One of: value<c, value>c-finite-horizon, case-1, case-2, case-3,
  // case-4, trivial-zero, none-applicable.
  std::string reason;
  Rational value;
};

// Decides whether Max can force Reach(target) from `initial` with
// probability >= c (or > c when strict). Throws PreconditionError if c is
// outside [0, 1].
ThresholdVerdict threshold_decide(const Game& g, const StateSet& target, StateIndex initial,
                                  const Rational& c, bool strict);

// Text form: "strategy max|min md" then "choose <state> <successor>" lines;
// transducers use "strategy max|min transducer", "modes ...", "update" and
// "move" rows with rational weights.
void write_md(std::ostream& out, const Game& g, const MDStrategy& m);
void write_transducer(std::ostream& out, const Game& g, const TransducerStrategy& t);
// Reads either form; MD files are converted to one-mode transducers.
// Throws ParseError.
TransducerStrategy read_strategy(std::istream& in, const Game& g);
MDStrategy read_md(std::istream& in, const Game& g);

}  // namespace ssg

#endif  // SSG_STRATEGY_HPP_
