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

#ifndef SSG_GALLERY_HPP_
#define SSG_GALLERY_HPP_

#include <cstddef>
#include <string>

#include "ssg/game.hpp"

namespace ssg {

// A finite example game with its reach target and Buchi set.
struct Example {
  Game game;
  StateSet target;
  StateSet buchi;
};

// The countable Buchi game with a Max ladder s0 s1 ... exiting to a chain
// r_k that reaches t with probability 1 - 2^-k, and a Min ladder of Buchi
// states sp0 sp1 ... exiting to rp_k that reaches t with probability 2^-k.
// The initial state i moves to s0 and sp0 with probability 1/2 each. Tags:
// "target" on t, "buchi" on t and every sp_k.
LazyGame build_fig2();

// Truncation of build_fig2() at the given depth. The Optimistic sink is a
// target and a Buchi state.
Example fig2_truncation(std::size_t depth, SinkMode mode = SinkMode::Pessimistic);

// Finite Max-only reconstruction of the transfinite-index example: Max
// ladders x{j}_p for j = 1..k that either climb or drop into the Random
// chain z{j-1}, chains z{j} that reach the target "bot" with probability
// 1/2 per step and otherwise descend, z0 draining into the absorbing
// "leak", and a Max state "botmax" with a direct edge to "bot" and an edge
// into the top ladder through "omega". Requires k >= 1.
Example build_ladder(std::size_t k);

// Birth-death chain w0 .. w{cap}: up with probability p, down with 1 - p.
// w0 (ruin) is the absorbing target and w{cap} is absorbing.
// Requires 0 < p < 1 and cap >= 2.
Example build_gamblers_ruin(const Rational& p, std::size_t cap);

// Unbounded gambler's ruin from wealth 1 as a lazy game; "target" tags w0.
LazyGame gamblers_ruin_lazy(const Rational& p);

// Pessimistic build_fig2 truncation plus a Min state "u" with edges to s0 and t.
Example build_fig2_with_u(std::size_t depth);

// Gallery game by name: fig2, ladder, ruin or fig2u. `param` is the depth,
// k or cap respectively; `p` is used by ruin only.
Example gallery_game(const std::string& name, std::size_t param, const Rational& p);

}  // namespace ssg

#endif  // SSG_GALLERY_HPP_
