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

#ifndef SSG_CHAIN_HPP_
#define SSG_CHAIN_HPP_

#include <vector>

#include "ssg/game.hpp"

namespace ssg {

// One row of a finite Markov chain.
struct ChainRow {
  std::vector<StateIndex> next;
  std::vector<Rational> prob;
};

// Chain induced by fixing choice[s] at every Max and Min state.
std::vector<ChainRow> chain_rows(const Game& g, const std::vector<StateIndex>& choice);

// Exact probability of reaching `target`. States in `zero` are treated as
// absorbing with value 0. Solved one strongly connected component at a
// time in reverse topological order.
std::vector<Rational> solve_chain_reach(const std::vector<ChainRow>& rows, const StateSet& target,
                                        const StateSet& zero);

}  // namespace ssg

#endif  // SSG_CHAIN_HPP_
