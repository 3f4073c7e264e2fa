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

#ifndef SSG_TESTS_SUPPORT_HPP_
#define SSG_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "ssg/game.hpp"

namespace ssg::testing {

// Random valid game with `n` states. Every state gets 1..max_out distinct
// successors; Random states get integer weights 1..4, normalized.
inline Game random_game(std::mt19937_64& rng, std::size_t n, std::size_t max_out = 3) {
  std::uniform_int_distribution<int> owner_dist(0, 2);
  std::uniform_int_distribution<std::size_t> out_dist(1, std::min(max_out, n));
  std::uniform_int_distribution<int> weight_dist(1, 4);
  GameBuilder b;
  for (std::size_t s = 0; s < n; ++s) {
    b.add_state("q" + std::to_string(s), static_cast<Owner>(owner_dist(rng)));
  }
  Game skeleton = GameBuilder(b).build();
  std::vector<StateIndex> all(n);
  for (std::size_t s = 0; s < n; ++s) all[s] = static_cast<StateIndex>(s);
  for (StateIndex s = 0; s < n; ++s) {
    std::vector<StateIndex> pool = all;
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(out_dist(rng));
    if (skeleton.owner(s) == Owner::Random) {
      std::vector<int> w(pool.size());
      int total = 0;
      for (auto& x : w) total += (x = weight_dist(rng));
      for (std::size_t k = 0; k < pool.size(); ++k) b.add_edge(s, pool[k], Rational(w[k]) / total);
    } else {
      for (StateIndex t : pool) b.add_edge(s, t);
    }
  }
  return std::move(b).build();
}

// One or two target states.
inline StateSet random_target(std::mt19937_64& rng, const Game& g) {
  StateSet t(g.size(), false);
  std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
  const std::size_t count = std::uniform_int_distribution<std::size_t>(1, 2)(rng);
  for (std::size_t k = 0; k < count; ++k) t[pick(rng)] = true;
  return t;
}

struct RandomInstance {
  Game game;
  StateSet target;
};

// The seeded family shared by the property suites: `count` games with
// min_states..max_states states.
inline std::vector<RandomInstance> random_family(std::uint64_t seed, std::size_t count,
                                                 std::size_t min_states, std::size_t max_states,
                                                 std::size_t max_out = 3) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size_dist(min_states, max_states);
  std::vector<RandomInstance> out;
  for (std::size_t k = 0; k < count; ++k) {
    Game g = random_game(rng, size_dist(rng), max_out);
    StateSet t = random_target(rng, g);
    out.push_back({std::move(g), std::move(t)});
  }
  return out;
}

}  // namespace ssg::testing

#endif  // SSG_TESTS_SUPPORT_HPP_
