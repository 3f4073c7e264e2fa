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

#ifndef SSG_GRAPH_HPP_
#define SSG_GRAPH_HPP_

#include <cstddef>
#include <functional>
#include <vector>

#include "ssg/game.hpp"

namespace ssg {

// Attractor of `goal` for `player`: states of that player need one
// successor inside, Random states need one successor inside when
// random_helps, and all opponent states need every successor inside.
// rank[s] is the layer at which s joined (0 for goal), or -1.
struct Attractor {
  StateSet set;
  std::vector<int> rank;
};
Attractor attractor(const Game& g, const StateSet& goal, Player player, bool random_helps);

// Strongly connected components of the subgraph of `adjacency` induced by
// `within`. Every component is emitted after all components it can reach.
std::vector<std::vector<StateIndex>> scc_decomposition(
    const std::vector<std::vector<StateIndex>>& adjacency, const StateSet& within);

// Maximal end components of the game restricted to `within`, where
// `allowed(s, t)` says whether an owned state s may use edge s -> t.
// Random states must keep all their successors inside a component; owned
// states need one allowed successor inside. Singletons count only when
// they can stay put.
std::vector<std::vector<StateIndex>> end_components(
    const Game& g, const StateSet& within,
    const std::function<bool(StateIndex, StateIndex)>& allowed);

// States from which some state of `goal` is reachable along game edges.
StateSet backward_reachable(const Game& g, const StateSet& goal);

}  // namespace ssg

#endif  // SSG_GRAPH_HPP_
