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

#ifndef SSG_OBJECTIVE_HPP_
#define SSG_OBJECTIVE_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ssg/game.hpp"

namespace ssg {

enum class ObjectiveKind { Reach, ReachWithin, ReachPlus, Safety, Buchi, CoBuchi };

const char* objective_name(ObjectiveKind k);

struct Objective {
  ObjectiveKind kind = ObjectiveKind::Reach;
  // Step bound for ReachWithin; position 0 is the initial state.
  std::size_t horizon = 0;
  std::vector<std::string> target;

  bool operator==(const Objective&) const = default;
};

// Reach <-> Safety, Buchi <-> CoBuchi. Throws PreconditionError otherwise.
Objective dual(const Objective& obj);

// Parses "reach", "safety", "buchi", "cobuchi", "reachplus" or "reach<=N".
// The target list is comma separated. Throws std::invalid_argument.
Objective parse_objective(std::string_view kind, std::string_view targets);

enum class Verdict { SatisfiedForever, ViolatedForever, Undecided };

const char* verdict_name(Verdict v);

// An objective whose target set has been checked against a game.
class BoundObjective {
 public:
  // Throws std::out_of_range for unknown target ids.
  BoundObjective(const Game& g, const Objective& obj);
  BoundObjective(const Game& g, ObjectiveKind kind, StateSet target, std::size_t horizon = 0);

  const Game& game() const { return *game_; }
  ObjectiveKind kind() const { return kind_; }
  std::size_t horizon() const { return horizon_; }
  const StateSet& target() const { return target_; }
  // Graph distance to the target set, or -1 if unreachable.
  long distance(StateIndex s) const { return distance_[s]; }
  bool absorbing(StateIndex s) const;

 private:
  void init();

  const Game* game_;
  ObjectiveKind kind_;
  std::size_t horizon_;
  StateSet target_;
  std::vector<long> distance_;
};

// Finite play prefix; consecutive states must be edges of the game.
class PlayPrefix {
 public:
  // Throws std::invalid_argument on an empty or inconsistent sequence.
  PlayPrefix(const Game& g, std::vector<StateIndex> states);
  const std::vector<StateIndex>& states() const { return states_; }

 private:
  std::vector<StateIndex> states_;
};

// Whether every (resp. no) infinite extension of the prefix satisfies the
// objective. Buchi and CoBuchi decide only once an absorbing state is hit.
Verdict decided(const BoundObjective& obj, const PlayPrefix& prefix);

// Incremental form of decided() for play sampling.
class VerdictTracker {
 public:
  explicit VerdictTracker(const BoundObjective& obj) : obj_(&obj) {}
  // Feeds the next state of the play and returns the verdict so far.
  Verdict push(StateIndex s);
  Verdict verdict() const { return verdict_; }
  std::size_t length() const { return length_; }

 private:
  const BoundObjective* obj_;
  Verdict verdict_ = Verdict::Undecided;
  std::size_t length_ = 0;
};

}  // namespace ssg

#endif  // SSG_OBJECTIVE_HPP_
