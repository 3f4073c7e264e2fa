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

#ifndef SSG_GAME_HPP_
#define SSG_GAME_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ssg/errors.hpp"
#include "ssg/rational.hpp"

namespace ssg {

enum class Owner : std::uint8_t { Max, Min, Random };
enum class Player : std::uint8_t { Max, Min };

using StateIndex = std::uint32_t;

// Membership mask indexed by StateIndex.
using StateSet = std::vector<bool>;

const char* owner_name(Owner o);
const char* player_name(Player p);
Owner owner_of(Player p);
Player opponent(Player p);

// Finite turn-based stochastic game. Immutable once built.
class Game {
 public:
  Game() = default;

  std::size_t size() const { return owners_.size(); }
  const std::string& id(StateIndex s) const { return ids_[s]; }
  Owner owner(StateIndex s) const { return owners_[s]; }
  std::span<const StateIndex> successors(StateIndex s) const { return succ_[s]; }
  // Aligned with successors(); empty for Max and Min states.
  std::span<const Rational> weights(StateIndex s) const { return weights_[s]; }

  std::optional<StateIndex> find(std::string_view id) const;
  // Throws std::out_of_range naming the id.
  StateIndex index(std::string_view id) const;

  bool has_edge(StateIndex from, StateIndex to) const;
  std::size_t edge_count() const;

  // Same ids, owners, ordered successor lists and weights.
  bool operator==(const Game& other) const;

 private:
  friend class GameBuilder;
  std::vector<std::string> ids_;
  std::vector<Owner> owners_;
  std::vector<std::vector<StateIndex>> succ_;
  std::vector<std::vector<Rational>> weights_;
  std::unordered_map<std::string, StateIndex> by_id_;
};

class GameBuilder {
 public:
  // Throws std::invalid_argument on an empty or duplicate id.
  StateIndex add_state(std::string id, Owner owner);
  void add_edge(StateIndex from, StateIndex to);
  void add_edge(StateIndex from, StateIndex to, Rational weight);
  std::optional<StateIndex> find(std::string_view id) const;
  std::size_t size() const { return game_.size(); }
  // No validation happens here; see validate().
  Game build() &&;

 private:
  Game game_;
};

struct Violation {
  enum class Kind {
    DeadEnd,
    WeightSum,
    NonPositiveWeight,
    WeightCount,
    DanglingSuccessor,
    DuplicateSuccessor,
  };
  Kind kind;
  StateIndex state;
  std::string message;
  // Set for WeightSum.
  std::optional<Rational> weight_sum;
};

const char* violation_name(Violation::Kind k);

std::vector<Violation> validate(const Game& g);
// Throws InvalidGame listing every violation.
void require_valid(const Game& g);

// Helpers over StateSet.
StateSet make_set(const Game& g, const std::vector<std::string>& ids);
StateSet empty_set(const Game& g);
StateSet full_set(const Game& g);
std::vector<std::string> set_ids(const Game& g, const StateSet& s);
std::size_t set_count(const StateSet& s);

// Max and Min exchange ownership; ids, edges and weights are kept.
Game swap_players(const Game& g);

// Keeps only edges for which keep(from, to) holds. Random states keep all
// edges regardless of the predicate.
Game filter_owned_edges(const Game& g, const std::function<bool(StateIndex, StateIndex)>& keep);

// Replaces every state of the given player by a Random state that moves to
// choice[s] with probability 1. choice must name an edge for each such state.
Game fix_choices(const Game& g, Player player, const std::vector<StateIndex>& choice);

// Countable, finitely branching game given by a successor generator.
struct Expansion {
  Owner owner = Owner::Max;
  std::vector<std::string> successors;
  // Required for Random states, aligned with successors.
  std::vector<Rational> weights;
  // Free-form labels such as "target" or "buchi".
  std::vector<std::string> tags;
};

class LazyGame {
 public:
  using Expander = std::function<Expansion(const std::string&)>;

  LazyGame(std::string initial, Expander expand,
           std::optional<std::size_t> branching_bound = std::nullopt)
      : initial_(std::move(initial)), expand_(std::move(expand)), bound_(branching_bound) {}

  const std::string& initial() const { return initial_; }
  std::optional<std::size_t> branching_bound() const { return bound_; }
  // Checked expansion; throws DivergenceError on empty or over-bound lists
  // and InvalidGame on misaligned weights.
  Expansion expand(const std::string& id) const;

 private:
  std::string initial_;
  Expander expand_;
  std::optional<std::size_t> bound_;
};

enum class SinkMode : std::uint8_t { Pessimistic, Optimistic };

struct Truncation {
  Game game;
  std::size_t depth = 0;
  SinkMode mode = SinkMode::Pessimistic;
  StateIndex sink = 0;
  // Ids at distance depth + 1 whose edges were redirected to the sink.
  std::vector<std::string> frontier;
  // Tag name to member states of the expanded part.
  std::map<std::string, StateSet> tags;

  // States carrying the tag; the sink is included exactly in Optimistic mode.
  StateSet tagged(const std::string& tag) const;
};

// Breadth-first expansion of every state within depth steps of the initial
// state. Edges to unexpanded states lead to one absorbing Random sink.
Truncation truncate(const LazyGame& base, std::size_t depth, SinkMode mode);

}  // namespace ssg

#endif  // SSG_GAME_HPP_
