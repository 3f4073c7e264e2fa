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

#ifndef SSG_SIMULATE_HPP_
#define SSG_SIMULATE_HPP_

#include <cstddef>
#include <cstdint>

#include "ssg/game.hpp"
#include "ssg/objective.hpp"
#include "ssg/strategy.hpp"

namespace ssg {

struct SimConfig {
  std::size_t samples = 10000;
  // Number of moves per play.
  std::size_t horizon = 1000;
  std::uint64_t seed = 0;
  // Trailing states inspected for undecided Buchi and CoBuchi plays.
  std::size_t buchi_window = 100;
  // 0 picks the hardware concurrency.
  unsigned workers = 0;
};

struct Estimate {
  double mean = 0;
  double half_width_95 = 0;
  double decided_fraction = 0;

  bool operator==(const Estimate&) const = default;
};

// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

// Counter-based draw in [0, 1) for (seed, play, step, stream). The same
// arguments give the same number on every platform.
double counter_uniform(std::uint64_t seed, std::uint64_t play, std::uint64_t step,
                       std::uint64_t stream);

// Monte Carlo estimate of the probability of the objective from s0 under
// the two strategies. Undecided plays score 0 for Reach-type objectives, 1
// for Safety, and by a visit to the target among the last buchi_window
// states for Buchi (the complement for CoBuchi). Throws PreconditionError
// on owner mismatch or a bad configuration.
Estimate sample_plays(const Game& g, StateIndex s0, const TransducerStrategy& sigma,
                      const TransducerStrategy& pi, const BoundObjective& obj,
                      const SimConfig& cfg);

}  // namespace ssg

#endif  // SSG_SIMULATE_HPP_
