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

#ifndef SSG_QUALITATIVE_HPP_
#define SSG_QUALITATIVE_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "ssg/game.hpp"

namespace ssg {

// Index value for states that are never removed.
inline constexpr int kNoIndex = -1;

struct WinningPartition {
  StateSet max_wins;
  StateSet min_wins;
  // Number of value computations performed.
  std::size_t rounds = 0;
  // Removal round per state, kNoIndex exactly on max_wins.
  std::vector<int> index;
};

// Attractor for Max where Random states need one successor in the set.
StateSet positive_reach_set(const Game& g, const StateSet& target);

// Value-peeling for Reach(target) with probability 1.
WinningPartition almost_sure_reach(const Game& g, const StateSet& target);

// Iterated removal of states losing Reach+ of the surviving Buchi states.
WinningPartition almost_sure_buchi(const Game& g, const StateSet& buchi);

// Complement of the attractor of target for Min, with Random helping Min.
WinningPartition almost_sure_safety(const Game& g, const StateSet& target);

using Edge = std::pair<StateIndex, StateIndex>;

// Full record of the reach value peeling. Round games keep the original
// state indexing; a Max state that loses every edge gets a self-loop.
struct ReachPeeling {
  // Values in the input game.
  std::vector<Rational> values;
  // round_games[0] is the input with Min value-increasing edges removed.
  std::vector<Game> round_games;
  std::vector<std::vector<Rational>> round_values;
  // Max edges removed after each round for decreasing the value.
  std::vector<std::vector<Edge>> deleted;
  // First round whose value is below the input value, or kNoIndex.
  std::vector<int> drop_index;
  std::size_t rounds = 0;
};
ReachPeeling reach_peeling(const Game& g, const StateSet& target);

// Full record of the Buchi peeling. Round games keep the original
// indexing: removed states become self-loops, Max edges into removed
// states are dropped, and Max states left without edges get a self-loop.
struct BuchiPeeling {
  WinningPartition partition;
  std::vector<Game> round_games;
  // Surviving states at the start of each round.
  std::vector<StateSet> round_alive;
  // Reach+ values of the surviving Buchi states in each round game.
  std::vector<std::vector<Rational>> round_plus_values;
  // Closure layer of each removed state (0 for a value below 1), or -1.
  std::vector<int> layer;
  // For Min states in a layer above 0: a successor one layer lower.
  std::vector<StateIndex> descent;
};
BuchiPeeling buchi_peeling(const Game& g, const StateSet& buchi);

}  // namespace ssg

#endif  // SSG_QUALITATIVE_HPP_
