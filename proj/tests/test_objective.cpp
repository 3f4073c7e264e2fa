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

#include <doctest.h>

#include "ssg/errors.hpp"
#include "ssg/gallery.hpp"
#include "ssg/objective.hpp"
#include "support.hpp"

using namespace ssg;

namespace {

PlayPrefix path(const Game& g, std::initializer_list<const char*> ids) {
  std::vector<StateIndex> s;
  for (const char* id : ids) s.push_back(g.index(id));
  return PlayPrefix(g, s);
}

}  // namespace

TEST_CASE("objective syntax") {
  CHECK(parse_objective("reach", "a,b").target == std::vector<std::string>{"a", "b"});
  CHECK(parse_objective("safety", "a").kind == ObjectiveKind::Safety);
  CHECK(parse_objective("buchi", "a").kind == ObjectiveKind::Buchi);
  CHECK(parse_objective("cobuchi", "a").kind == ObjectiveKind::CoBuchi);
  CHECK(parse_objective("reachplus", "a").kind == ObjectiveKind::ReachPlus);
  const Objective w = parse_objective("reach<=7", "a");
  CHECK(w.kind == ObjectiveKind::ReachWithin);
  CHECK(w.horizon == 7);
  CHECK_THROWS_AS(parse_objective("parity", "a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_objective("reach<=x", "a"), std::invalid_argument);
}

TEST_CASE("dual swaps Reach with Safety and Buchi with CoBuchi") {
  const Objective r = parse_objective("reach", "t");
  CHECK(dual(r).kind == ObjectiveKind::Safety);
  CHECK(dual(r).target == r.target);
  CHECK(dual(dual(r)) == r);
  const Objective b = parse_objective("buchi", "t");
  CHECK(dual(b).kind == ObjectiveKind::CoBuchi);
  CHECK(dual(dual(b)) == b);
  CHECK_THROWS_AS(dual(parse_objective("reachplus", "t")), PreconditionError);
  CHECK_THROWS_AS(dual(parse_objective("reach<=2", "t")), PreconditionError);
}

TEST_CASE("binding checks target ids") {
  const Game g = fig2_truncation(4).game;
  CHECK_THROWS_AS(BoundObjective(g, parse_objective("reach", "nope")), std::out_of_range);
  const BoundObjective ok(g, parse_objective("reach", "t"));
  CHECK(set_count(ok.target()) == 1);
}

TEST_CASE("prefix verdicts") {
  const Game g = fig2_truncation(6).game;
  SUBCASE("reach after a target visit at position 3") {
    const BoundObjective obj(g, parse_objective("reach", "t"));
    CHECK(decided(obj, path(g, {"s0", "s1", "r1", "t"})) == Verdict::SatisfiedForever);
    CHECK(decided(obj, path(g, {"s0", "s1", "r1"})) == Verdict::Undecided);
    CHECK(decided(obj, path(g, {"s0", "r0"})) == Verdict::ViolatedForever);
  }
  SUBCASE("reach within 2 steps fails after four non-target states") {
    const BoundObjective obj(g, parse_objective("reach<=2", "t"));
    CHECK(decided(obj, path(g, {"s0", "s1", "s2", "s3"})) == Verdict::ViolatedForever);
    CHECK(decided(obj, path(g, {"s1", "r1"})) == Verdict::Undecided);
    CHECK(decided(obj, path(g, {"s1", "r1", "t"})) == Verdict::SatisfiedForever);
  }
  SUBCASE("reach within 0 steps is decided by the first state") {
    const BoundObjective obj(g, parse_objective("reach<=0", "t"));
    CHECK(decided(obj, path(g, {"t"})) == Verdict::SatisfiedForever);
    CHECK(decided(obj, path(g, {"r1"})) == Verdict::ViolatedForever);
  }
  SUBCASE("safety after a target visit") {
    const BoundObjective obj(g, parse_objective("safety", "t"));
    CHECK(decided(obj, path(g, {"r1", "t"})) == Verdict::ViolatedForever);
    CHECK(decided(obj, path(g, {"r1", "r0"})) == Verdict::SatisfiedForever);
    CHECK(decided(obj, path(g, {"s0", "s1"})) == Verdict::Undecided);
  }
  SUBCASE("Buchi decides only at absorbing states") {
    const BoundObjective obj(g, parse_objective("buchi", "t,sp0,sp1,sp2,sp3,sp4"));
    CHECK(decided(obj, path(g, {"sp0", "sp1", "rp1", "rp0"})) == Verdict::ViolatedForever);
    CHECK(decided(obj, path(g, {"sp0", "sp1", "rp1", "t"})) == Verdict::SatisfiedForever);
    CHECK(decided(obj, path(g, {"sp0", "sp1", "sp2"})) == Verdict::Undecided);
    const BoundObjective co(g, parse_objective("cobuchi", "t,sp0,sp1,sp2,sp3,sp4"));
    CHECK(decided(co, path(g, {"sp0", "sp1", "rp1", "rp0"})) == Verdict::SatisfiedForever);
  }
  SUBCASE("reach+ ignores the initial state") {
    const BoundObjective obj(g, parse_objective("reachplus", "t"));
    CHECK(decided(obj, path(g, {"t"})) == Verdict::Undecided);
    CHECK(decided(obj, path(g, {"t", "t"})) == Verdict::SatisfiedForever);
  }
}

TEST_CASE("prefixes must follow edges") {
  const Game g = fig2_truncation(4).game;
  CHECK_THROWS_AS(PlayPrefix(g, {}), std::invalid_argument);
  CHECK_THROWS_AS(PlayPrefix(g, {g.index("s0"), g.index("t")}), std::invalid_argument);
}

TEST_CASE("verdicts are monotone along random plays and never flip") {
  std::mt19937_64 rng(11);
  const char* kinds[] = {"reach", "reach<=3", "reachplus", "safety", "buchi", "cobuchi"};
  for (int k = 0; k < 60; ++k) {
    const Game g = testing::random_game(rng, 7);
    const StateSet t = testing::random_target(rng, g);
    for (const char* kind : kinds) {
      const BoundObjective obj(g, kind == std::string("reach<=3") ? ObjectiveKind::ReachWithin
                                  : parse_objective(kind, "").kind,
                               t, 3);
      std::vector<StateIndex> play{static_cast<StateIndex>(rng() % g.size())};
      VerdictTracker tracker(obj);
      Verdict first = Verdict::Undecided;
      for (int step = 0; step < 25; ++step) {
        const Verdict batch = decided(obj, PlayPrefix(g, play));
        const Verdict inc = tracker.push(play.back());
        CHECK(batch == inc);
        if (first == Verdict::Undecided) first = batch;
        if (first != Verdict::Undecided) CHECK(batch == first);
        auto succ = g.successors(play.back());
        play.push_back(succ[rng() % succ.size()]);
      }
    }
  }
}
