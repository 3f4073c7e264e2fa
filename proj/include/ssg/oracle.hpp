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

#ifndef SSG_ORACLE_HPP_
#define SSG_ORACLE_HPP_

#include <cstddef>

#include "ssg/game.hpp"
#include "ssg/objective.hpp"
#include "ssg/valuation.hpp"

namespace ssg {

// Brute-force reference solvers. They share no code with the main solvers
// beyond the game representation, so agreement is an independent check.

// Number of MD strategy pairs, saturated at max_count + 1.
std::size_t md_pair_count(const Game& g, std::size_t max_count);

// Exact value by enumerating every MD pair and solving each induced Markov
// chain with a dense rational elimination. Supports Reach, ReachPlus,
// Safety, Buchi and CoBuchi. Throws PreconditionError when the number of
// pairs exceeds pair_bound or for ReachWithin.
ValueVector md_enumeration_oracle(const Game& g, ObjectiveKind kind, const StateSet& target,
                                  std::size_t pair_bound = 1000000);

// Exact Buchi value of a game in which Max or Min owns no state, through
// maximal end components and maximal reachability by strategy iteration.
// Throws PreconditionError when both players own states.
ValueVector mdp_buchi_exact(const Game& g, const StateSet& buchi);

}  // namespace ssg

#endif  // SSG_ORACLE_HPP_
