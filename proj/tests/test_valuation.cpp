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

#include <cmath>

#include "ssg/errors.hpp"
#include "ssg/gallery.hpp"
#include "ssg/valuation.hpp"
#include "support.hpp"

using namespace ssg;

namespace {

std::vector<Rational> zeros(const Game& g) { return std::vector<Rational>(g.size(), Rational(0)); }

Rational ruin_closed_form(const Rational& p, std::size_t cap, std::size_t w) {
  const Rational q = 1 - p;
  if (p == q) return 1 - Rational(w) / Rational(cap);
  const Rational rho = q / p;
  Rational rw(1);
  Rational rc(1);
  for (std::size_t k = 0; k < cap; ++k) {
    if (k < w) rw *= rho;
    rc *= rho;
  }
  return (rw - rc) / (1 - rc);
}

}  // namespace

TEST_CASE("bellman step examples") {
  SUBCASE("first iterate from zero is the target indicator") {
    const Example ex = build_gamblers_ruin(Rational(1, 2), 4);
    const auto v = bellman_step(ex.game, ex.target, zeros(ex.game));
    for (StateIndex s = 0; s < ex.game.size(); ++s) CHECK(v[s] == (ex.target[s] ? 1 : 0));
  }
  SUBCASE("r2 with v(r1) = 1/2 and v(t) = 1 gives 3/4") {
    const Example ex = fig2_truncation(6);
    auto v = zeros(ex.game);
    v[ex.game.index("r1")] = Rational(1, 2);
    v[ex.game.index("t")] = 1;
    CHECK(bellman_step(ex.game, ex.target, v)[ex.game.index("r2")] == Rational(3, 4));
  }
  SUBCASE("weighted average at a Random state") {
    GameBuilder b;
    auto r = b.add_state("r", Owner::Random);
    auto z = b.add_state("z", Owner::Max);
    auto o = b.add_state("o", Owner::Max);
    b.add_edge(r, z, Rational(1, 3));
    b.add_edge(r, o, Rational(2, 3));
    b.add_edge(z, z);
    b.add_edge(o, o);
    const Game g = std::move(b).build();
    std::vector<Rational> v{0, 0, 1};
    CHECK(bellman_step(g, make_set(g, {"o"}), v)[r] == Rational(2, 3));
  }
}

TEST_CASE("reach values on the r chains") {
  const Example ex = fig2_truncation(24);
  const auto v = value_reach(ex.game, ex.target);
  REQUIRE(v.precision == Precision::Exact);
  for (int i = 0; i <= 20; ++i) {
    CHECK(v.at(ex.game.index("r" + std::to_string(i))) == 1 - pow2(-i));
  }
  for (int i = 1; i <= 20; ++i) {
    CHECK(v.at(ex.game.index("rp" + std::to_string(i))) == pow2(-i));
  }
  CHECK(v.at(ex.game.index("rp0")) == 0);
}

TEST_CASE("target equal to all states gives value 1") {
  std::mt19937_64 rng(3);
  const Game g = testing::random_game(rng, 9);
  const auto v = value_reach(g, full_set(g));
  for (StateIndex s = 0; s < g.size(); ++s) CHECK(v.at(s) == 1);
}

TEST_CASE("safety is one minus the opponent's reach with roles swapped") {
  for (const auto& inst : testing::random_family(101, 100, 10, 10)) {
    const auto safe = value_safety(inst.game, inst.target);
    const auto reach = value_reach(swap_players(inst.game), inst.target);
    for (StateIndex s = 0; s < inst.game.size(); ++s) CHECK(safe.at(s) + reach.at(s) == 1);
  }
}

TEST_CASE("an absorbing non-target state is safe") {
  const Example ex = fig2_truncation(6);
  CHECK(value_safety(ex.game, ex.target).at(ex.game.index("r0")) == 1);
}

TEST_CASE("gambler's ruin safety at wealth 1 matches the closed form") {
  const Rational p(3, 5);
  const Example ex = build_gamblers_ruin(p, 30);
  const Rational ruin = ruin_closed_form(p, 30, 1);
  const auto safe = value_safety(ex.game, ex.target);
  CHECK(safe.at(1) == 1 - ruin);
  const auto approx = value_safety(ex.game, ex.target, SolveMode::iterate(1e-12));
  CHECK(std::abs(approx.as_double(1) - (1 - ruin.get_d())) < 1e-9);
}

TEST_CASE("bounded reachability") {
  const Example ex = fig2_truncation(14);
  const Game& g = ex.game;
  SUBCASE("zero steps give the indicator") {
    const auto v = value_reach_within(g, ex.target, 0);
    for (StateIndex s = 0; s < g.size(); ++s) CHECK(v.at(s) == (ex.target[s] ? 1 : 0));
  }
  SUBCASE("values at s0 grow and reach 1 - 2^-k once s0..s_k r_k t fits") {
    const StateIndex s0 = g.index("s0");
    Rational prev(0);
    for (std::size_t n = 0; n <= 14; ++n) {
      const Rational cur = value_reach_within(g, ex.target, n).at(s0);
      CHECK(cur >= prev);
      prev = cur;
    }
    for (int k = 1; k <= 6; ++k) {
      // k ladder moves, one exit, then the chain r_k .. r_1 may take k coin flips.
      const std::size_t horizon = static_cast<std::size_t>(2 * k + 1);
      CHECK(value_reach_within(g, ex.target, horizon).at(s0) >= 1 - pow2(-k));
    }
  }
  SUBCASE("long horizons on games whose only cycles are absorbing equal the value") {
    for (const Example& other : {fig2_truncation(8), build_ladder(3)}) {
      const auto a = value_reach(other.game, other.target);
      const auto b = value_reach_within(other.game, other.target, other.game.size());
      for (StateIndex s = 0; s < other.game.size(); ++s) CHECK(a.at(s) == b.at(s));
    }
  }
}

TEST_CASE("epsilon horizon") {
  const Example ex = fig2_truncation(16);
  const Game& g = ex.game;
  CHECK(epsilon_horizon(g, ex.target, g.index("t"), Rational(1, 100)) == 0);
  CHECK(epsilon_horizon(g, ex.target, g.index("s3"), Rational(1)) == 0);
  CHECK(epsilon_horizon(g, ex.target, g.index("s3"), Rational(2)) == 0);
  CHECK_THROWS_AS(epsilon_horizon(g, ex.target, 0, Rational(0)), PreconditionError);
  const StateIndex s0 = g.index("s0");
  const Rational eps = pow2(-5);
  const std::size_t n = epsilon_horizon(g, ex.target, s0, eps);
  const Rational val = value_reach(g, ex.target).at(s0);
  CHECK(val > 1 - eps);
  CHECK(value_reach_within(g, ex.target, n).at(s0) > val - eps);
  REQUIRE(n > 0);
  CHECK_FALSE(value_reach_within(g, ex.target, n - 1).at(s0) > val - eps);
}

TEST_CASE("Buchi values") {
  SUBCASE("every state Buchi gives 1") {
    std::mt19937_64 rng(5);
    const Game g = testing::random_game(rng, 10);
    const auto v = value_buchi(g, full_set(g));
    for (StateIndex s = 0; s < g.size(); ++s) CHECK(v.at(s) == 1);
  }
  SUBCASE("empty Buchi set gives 0") {
    const Example ex = fig2_truncation(6);
    const auto v = value_buchi(ex.game, empty_set(ex.game));
    for (StateIndex s = 0; s < ex.game.size(); ++s) CHECK(v.at(s) == 0);
  }
  SUBCASE("the value at i tends to one half") {
    for (std::size_t d = 4; d <= 12; ++d) {
      const Example ex = fig2_truncation(d);
      const Rational v = value_buchi(ex.game, ex.buchi).at(0);
      CHECK(v < Rational(1, 2));
      CHECK(Rational(1, 2) - v <= pow2(-static_cast<int>(d) + 1));
    }
  }
  SUBCASE("Buchi is bounded by reach off the target") {
    for (const auto& inst : testing::random_family(202, 60, 4, 10)) {
      const auto b = value_buchi(inst.game, inst.target);
      const auto r = value_reach(inst.game, inst.target);
      for (StateIndex s = 0; s < inst.game.size(); ++s) {
        if (!inst.target[s]) CHECK(b.at(s) <= r.at(s));
      }
    }
  }
  SUBCASE("co-Buchi is the dual") {
    for (const auto& inst : testing::random_family(203, 40, 4, 10)) {
      const auto c = value_cobuchi(inst.game, inst.target);
      const auto b = value_buchi(swap_players(inst.game), inst.target);
      for (StateIndex s = 0; s < inst.game.size(); ++s) CHECK(c.at(s) + b.at(s) == 1);
    }
  }
}

TEST_CASE("iteration agrees with the exact solver within its tolerance") {
  for (const double tol : {1e-4, 1e-8}) {
    for (const auto& inst : testing::random_family(303, 100, 2, 12)) {
      const auto exact = value_reach(inst.game, inst.target);
      const auto approx = value_reach(inst.game, inst.target, SolveMode::iterate(tol));
      REQUIRE(approx.precision == Precision::Approx);
      CHECK(approx.error_bound <= tol);
      for (StateIndex s = 0; s < inst.game.size(); ++s) {
        const double e = exact.at(s).get_d();
        CHECK(approx.as_double(s) <= e + 1e-12);
        CHECK(e - approx.as_double(s) <= tol + 1e-12);
      }
    }
  }
  CHECK_THROWS_AS(SolveMode::iterate(0), PreconditionError);
  CHECK_THROWS_AS(SolveMode::iterate(-1), PreconditionError);
}

TEST_CASE("Bellman iterates from the indicator rise monotonically to the value") {
  for (const auto& inst : testing::random_family(404, 30, 3, 9)) {
    const auto value = value_reach(inst.game, inst.target);
    std::vector<Rational> v(inst.game.size(), Rational(0));
    for (StateIndex s = 0; s < inst.game.size(); ++s) v[s] = inst.target[s] ? 1 : 0;
    for (int k = 0; k < 30; ++k) {
      const auto next = bellman_step(inst.game, inst.target, v);
      for (StateIndex s = 0; s < inst.game.size(); ++s) {
        CHECK(next[s] >= v[s]);
        CHECK(next[s] <= value.at(s));
      }
      v = next;
    }
  }
}

TEST_CASE("value_of dispatches on the objective kind") {
  const Example ex = fig2_truncation(8);
  const Game& g = ex.game;
  CHECK(value_of(g, ObjectiveKind::Reach, ex.target).exact == value_reach(g, ex.target).exact);
  CHECK(value_of(g, ObjectiveKind::ReachWithin, ex.target, 3).exact ==
        value_reach_within(g, ex.target, 3).exact);
  CHECK(value_of(g, ObjectiveKind::Buchi, ex.buchi).exact == value_buchi(g, ex.buchi).exact);
  const auto plus = value_reach_plus(g, ex.buchi);
  // Reach+ differs from Reach on Buchi states that can leave the set.
  CHECK(plus.at(g.index("sp1")) < 1);
  CHECK(plus.at(g.index("t")) == 1);
}

TEST_CASE("interval values") {
  SUBCASE("depth 0 gives no information") {
    const auto iv = interval_values(gamblers_ruin_lazy(Rational(3, 5)), ObjectiveKind::Reach,
                                    "target", 0);
    CHECK(iv.lower_at_initial() == 0);
    CHECK(iv.upper_at_initial() == 1);
  }
  SUBCASE("gambler's ruin lower bounds converge to 2/3") {
    Rational prev_lo(0);
    Rational prev_hi(1);
    for (std::size_t d = 1; d <= 40; d += 3) {
      const auto iv = interval_values(gamblers_ruin_lazy(Rational(3, 5)), ObjectiveKind::Reach,
                                      "target", d);
      const Rational lo = iv.lower_at_initial();
      const Rational hi = iv.upper_at_initial();
      CHECK(lo <= Rational(2, 3));
      CHECK(hi >= Rational(2, 3));
      CHECK(lo >= prev_lo);
      CHECK(hi <= prev_hi);
      CHECK(Rational(Rational(2, 3) - lo).get_d() <= 3 * std::pow(2.0 / 3.0, static_cast<double>(d)));
      // Plays that drift upward always meet the frontier, and the optimistic
      // sink counts them as hits.
      CHECK(hi == 1);
      prev_lo = lo;
      prev_hi = hi;
    }
  }
  SUBCASE("Buchi at i, depth 12, contains one half with width at most 2^-10") {
    const auto iv = interval_values(build_fig2(), ObjectiveKind::Buchi, "buchi", 12);
    CHECK(iv.lower_at_initial() <= Rational(1, 2));
    CHECK(iv.upper_at_initial() >= Rational(1, 2));
    CHECK(iv.upper_at_initial() - iv.lower_at_initial() <= pow2(-10));
  }
  SUBCASE("Safety bounds swap the sinks") {
    const auto iv = interval_values(gamblers_ruin_lazy(Rational(3, 5)), ObjectiveKind::Safety,
                                    "target", 10);
    CHECK(iv.lower_at_initial() <= Rational(1, 3));
    CHECK(iv.upper_at_initial() >= Rational(1, 3));
  }
  SUBCASE("Pessimistic reach never exceeds Optimistic reach") {
    for (std::size_t d = 0; d <= 10; ++d) {
      const auto iv = interval_values(build_fig2(), ObjectiveKind::Reach, "target", d);
      const Game& lo = iv.lower_game.game;
      const Game& hi = iv.upper_game.game;
      for (StateIndex s = 0; s < lo.size(); ++s) {
        if (s == iv.lower_game.sink) continue;
        CHECK(iv.lower.at(s) <= iv.upper.at(hi.index(lo.id(s))));
      }
    }
  }
}

TEST_CASE("gambler's ruin closed form, exact") {
  for (const Rational& p : {Rational(3, 5), Rational(1, 2), Rational(11, 20)}) {
    const Example ex = build_gamblers_ruin(p, 30);
    const auto v = value_reach(ex.game, ex.target);
    for (std::size_t w = 0; w <= 30; ++w) {
      CHECK(v.at(static_cast<StateIndex>(w)) == ruin_closed_form(p, 30, w));
    }
  }
}
