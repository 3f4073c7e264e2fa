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

#ifndef SSG_TRANSFORMS_HPP_
#define SSG_TRANSFORMS_HPP_

#include <vector>

#include "ssg/game.hpp"

namespace ssg {

// Removes every Min edge s -> t whose target value exceeds the value of s,
// with values taken for Reach(target).
Game rvi(const Game& g, const StateSet& target);

enum class EdgeClass { Increasing, Decreasing, Preserving };

const char* edge_class_name(EdgeClass c);

struct ClassifiedEdge {
  StateIndex from;
  StateIndex to;
  EdgeClass cls;
};

enum class ValueBasis { Reach, ReachPlus };

// Classifies every edge by comparing endpoint values. For the Reach basis
// it throws std::logic_error if a Max edge increases or a Min edge
// decreases the value, which would mean the values are wrong. Reach+ values
// admit Min edges into the target that decrease, so no check is made there.
std::vector<ClassifiedEdge> classify_transitions(const Game& g, const StateSet& target,
                                                 ValueBasis basis = ValueBasis::Reach);

// Same classification against given values, without the ownership check.
std::vector<ClassifiedEdge> classify_with(const Game& g, const std::vector<Rational>& values);

}  // namespace ssg

#endif  // SSG_TRANSFORMS_HPP_
