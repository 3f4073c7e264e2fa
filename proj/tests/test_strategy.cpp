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

#include <sstream>

#include "ssg/errors.hpp"
#include "ssg/gallery.hpp"
#include "ssg/oracle.hpp"
#include "ssg/qualitative.hpp"
#include "ssg/strategy.hpp"
#include "ssg/valuation.hpp"
#include "support.hpp"

using namespace ssg;

namespace {

Game coins_game(Owner chooser) {
  // c picks between coins hitting t with probability 1/4 and 1/2.
  GameBuilder b;
  auto c = b.add_state("c", chooser);
  auto q = b.add_state("q", Owner::Random);
  auto h = b.add_state("h", Owner::Random);
  auto t = b.add_state("t", Owner::Max);
  auto z = b.add_state("z", Owner::Max);
  b.add_edge(c, h);
  b.add_edge(c, q);
  b.add_edge(q, t, Rational(1, 4));
  b.add_edge(q, z, Rational(3, 4));
  b.add_edge(h, t, Rational(1, 2));
  b.add_edge(h, z, Rational(1, 2));
  b.add_edge(t, t);
  b.add_edge(z, z);
  return std::move(b).build();
}

// Value at s of the one-player game left after fixing the verdict's strategy.
Rational residual_value(const Game& g, const StateSet& target, const MDStrategy& m, StateIndex s) {
  return value_reach(apply(g, m), target).at(s);
}

}  // namespace

TEST_CASE("MD strategies are checked against the game") {
  const Game g = coins_game(Owner::Min);
  MDStrategy m = first_choice(g, Player::Min);
  CHECK_NOTHROW(check_md(g, m));
  m.choice[0] = g.index("t");
  CHECK_THROWS_AS(check_md(g, m), PreconditionError);
  CHECK_THROWS_AS(check_md(g, MDStrategy{Player::Min, {}}), PreconditionError);
}

TEST_CASE("MD to transducer and back is the identity on choices") {
  for (const auto& inst : testing::random_family(31, 30, 2, 10)) {
    for (Player p : {Player::Max, Player::Min}) {
      const MDStrategy m = optimal_min_md(inst.game, inst.target);
      const MDStrategy f = p == Player::Min ? m : first_choice(inst.game, Player::Max);
      const TransducerStrategy t = to_transducer(inst.game, f);
      CHECK(t.modes.size() == 1);
      for (StateIndex s = 0; s < inst.game.size(); ++s) {
        const auto& row = t.move[0][s];
        if (row.to.empty()) continue;
        CHECK(row.to.size() == 1);
        CHECK(row.prob[0] == 1);
      }
      const auto back = to_md(t);
      REQUIRE(back);
      for (StateIndex s = 0; s < inst.game.size(); ++s) {
        if (inst.game.owner(s) == owner_of(p)) CHECK(back->choice[s] == f.choice[s]);
      }
    }
  }
}

TEST_CASE("optimal Min choice") {
  SUBCASE("picks the 1/4 coin") {
    const Game g = coins_game(Owner::Min);
    const StateSet t = make_set(g, {"t"});
    CHECK(value_reach(g, t).at(0) == Rational(1, 4));
    CHECK(optimal_min_md(g, t).choice[0] == g.index("q"));
  }
  SUBCASE("u moves to s0, the strict minimizer on a truncation") {
    for (std::size_t d = 4; d <= 10; ++d) {
      const Example ex = build_fig2_with_u(d);
      const Game& g = ex.game;
      const auto v = value_reach(g, ex.target);
      CHECK(v.at(g.index("u")) == v.at(g.index("s0")));
      CHECK(v.at(g.index("s0")) < 1);
      CHECK(optimal_min_md(g, ex.target).choice[g.index("u")] == g.index("s0"));
      CHECK(positive_reach_set(g, ex.target)[g.index("u")]);
    }
  }
  SUBCASE("the values with u converge to 1") {
    Rational prev(0);
    for (std::size_t d = 4; d <= 14; ++d) {
      const Example ex = build_fig2_with_u(d);
      const Rational u = value_reach(ex.game, ex.target).at(ex.game.index("u"));
      CHECK(u > prev);
      CHECK(1 - u <= pow2(-static_cast<int>(d) + 4));
      prev = u;
    }
  }
  SUBCASE("re-solving with the choice fixed keeps every value") {
    for (const auto& inst : testing::random_family(32, 100, 2, 12)) {
      const MDStrategy m = optimal_min_md(inst.game, inst.target);
      CHECK(value_reach(apply(inst.game, m), inst.target).exact ==
            value_reach(inst.game, inst.target).exact);
      const ReachSolution sol = solve_reach(inst.game, inst.target);
      const MDStrategy sigma{Player::Max, sol.choice};
      CHECK(value_reach(apply(inst.game, sigma), inst.target).exact == sol.values);
    }
  }
}

TEST_CASE("optimal Max choice without decreasing edges") {
  SUBCASE("rejects games with decreasing Max edges and names them") {
    const Game g = coins_game(Owner::Max);
    try {
      optimal_max_md_no_decrease(g, make_set(g, {"t"}));
      FAIL("expected a precondition error");
    } catch (const PreconditionError& e) {
      CHECK(std::string(e.what()).find("c -> q") != std::string::npos);
    }
  }
  SUBCASE("rank tie-break prefers the successor closer to the target") {
    // a can loop through b forever or step straight to t; both have value 1.
    GameBuilder b;
    auto a = b.add_state("a", Owner::Max);
    auto bb = b.add_state("b", Owner::Max);
    auto t = b.add_state("t", Owner::Max);
    b.add_edge(a, bb);
    b.add_edge(a, t);
    b.add_edge(bb, a);
    b.add_edge(t, t);
    const Game g = std::move(b).build();
    const StateSet target = make_set(g, {"t"});
    const MDStrategy m = optimal_max_md_no_decrease(g, target);
    CHECK(m.choice[a] == t);
    CHECK(m.choice[bb] == a);
    CHECK(value_reach(apply(g, m), target).at(a) == 1);
  }
  SUBCASE("on the final peeling round game it attains every value") {
    std::size_t checked = 0;
    for (const auto& inst : testing::random_family(33, 100, 2, 12)) {
      const auto rec = reach_peeling(inst.game, inst.target);
      const Game& last = rec.round_games.back();
      const MDStrategy m = optimal_max_md_no_decrease(last, inst.target);
      CHECK(value_reach(apply(last, m), inst.target).exact == value_reach(last, inst.target).exact);
      ++checked;
    }
    CHECK(checked == 100);
  }
  SUBCASE("ladder residual game reaches the bottom almost surely") {
    for (std::size_t k = 1; k <= 6; ++k) {
      const Example ex = build_ladder(k);
      const auto rec = reach_peeling(ex.game, ex.target);
      const Game& last = rec.round_games.back();
      const MDStrategy m = optimal_max_md_no_decrease(last, ex.target);
      const auto v = value_reach(apply(last, m), ex.target);
      CHECK(v.at(ex.game.index("botmax")) == 1);
      CHECK(m.choice[ex.game.index("botmax")] == ex.game.index("bot"));
      CHECK(v.exact == value_reach(last, ex.target).exact);
    }
  }
}

TEST_CASE("Reach+ constructions") {
  SUBCASE("single absorbing target") {
    GameBuilder b;
    auto a = b.add_state("a", Owner::Max);
    auto t = b.add_state("t", Owner::Min);
    b.add_edge(a, t);
    b.add_edge(t, t);
    const Game g = std::move(b).build();
    const StateSet target = make_set(g, {"t"});
    CHECK(value_reach_plus(g, target).at(t) == 1);
    CHECK(reachplus_min_md(g, target).choice[t] == t);
    CHECK(reachplus_max_md(swap_players(g), target).choice[t] == t);
  }
  SUBCASE("Min on a value-1 target state takes the first successor") {
    const Example ex = fig2_truncation(6, SinkMode::Optimistic);
    const Game& g = ex.game;
    // In the optimistic game every Buchi state has Reach+ value 1 except
    // where Min can exit early; sp5 only sees the sink and rp5.
    const auto plus = value_reach_plus(g, ex.buchi);
    const MDStrategy m = reachplus_min_md(g, ex.buchi);
    for (StateIndex s = 0; s < g.size(); ++s) {
      if (g.owner(s) == Owner::Min && ex.buchi[s] && plus.at(s) == 1) {
        CHECK(m.choice[s] == g.successors(s)[0]);
      }
    }
  }
  SUBCASE("Min exits the Buchi ladder where the value is smallest") {
    const Example ex = fig2_truncation(10);
    const Game& g = ex.game;
    const auto plus = value_reach_plus(g, ex.buchi);
    const MDStrategy m = reachplus_min_md(g, ex.buchi);
    const StateIndex sp3 = g.index("sp3");
    CHECK(plus.at(sp3) < 1);
    CHECK(plus.at(sp3) != value_reach(g, ex.buchi).at(sp3));
    CHECK(value_reach_plus(apply(g, m), ex.buchi).exact == plus.exact);
  }
  SUBCASE("re-solve equality on random games") {
    std::size_t max_checked = 0;
    for (const auto& inst : testing::random_family(34, 100, 2, 12)) {
      const auto plus = value_reach_plus(inst.game, inst.target);
      const MDStrategy pi = reachplus_min_md(inst.game, inst.target);
      CHECK(value_reach_plus(apply(inst.game, pi), inst.target).exact == plus.exact);
      try {
        const MDStrategy sigma = reachplus_max_md(inst.game, inst.target);
        CHECK(value_reach_plus(apply(inst.game, sigma), inst.target).exact == plus.exact);
        ++max_checked;
      } catch (const PreconditionError&) {
        // Some Max edge decreases the Reach+ value.
      }
    }
    CHECK(max_checked >= 10);
  }
}

TEST_CASE("Buchi strategy pair") {
  auto check_pair = [](const Game& g, const StateSet& buchi) {
    const BuchiStrategies b = buchi_md_pair(g, buchi);
    const auto part = almost_sure_buchi(g, buchi);
    CHECK(b.max_wins == part.max_wins);
    // sigma-hat keeps plays in max-wins.
    for (StateIndex s = 0; s < g.size(); ++s) {
      if (!b.max_wins[s]) continue;
      if (g.owner(s) == Owner::Max) {
        CHECK(b.max_wins[b.max.choice[s]]);
      } else {
        for (StateIndex t : g.successors(s)) CHECK(b.max_wins[t]);
      }
    }
    const auto under_sigma = mdp_buchi_exact(apply(g, b.max), buchi);
    const auto under_pi = mdp_buchi_exact(apply(g, b.min), buchi);
    for (StateIndex s = 0; s < g.size(); ++s) {
      if (b.max_wins[s]) CHECK(under_sigma.at(s) == 1);
      if (b.min_wins[s]) CHECK(under_pi.at(s) < 1);
    }
  };
  SUBCASE("every state Buchi") {
    std::mt19937_64 rng(35);
    const Game g = testing::random_game(rng, 9);
    const auto b = buchi_md_pair(g, full_set(g));
    CHECK(set_count(b.min_wins) == 0);
    check_pair(g, full_set(g));
  }
  SUBCASE("truncations: pi-hat keeps the value at i below 1") {
    for (std::size_t d = 2; d <= 12; ++d) {
      const Example ex = fig2_truncation(d);
      check_pair(ex.game, ex.buchi);
      const auto b = buchi_md_pair(ex.game, ex.buchi);
      CHECK(mdp_buchi_exact(apply(ex.game, b.min), ex.buchi).at(0) < 1);
    }
  }
  SUBCASE("ladder: sigma-hat takes the direct edge at the bottom") {
    for (std::size_t k = 1; k <= 4; ++k) {
      const Example ex = build_ladder(k);
      const auto b = buchi_md_pair(ex.game, ex.buchi);
      CHECK(b.max.choice[ex.game.index("botmax")] == ex.game.index("bot"));
      check_pair(ex.game, ex.buchi);
    }
  }
  SUBCASE("random games") {
    for (const auto& inst : testing::random_family(36, 100, 2, 12)) check_pair(inst.game, inst.target);
  }
}

TEST_CASE("threshold decisions") {
  SUBCASE("r3 against 9/10 is a Min win") {
    const Example ex = fig2_truncation(8);
    const auto v = threshold_decide(ex.game, ex.target, ex.game.index("r3"), Rational(9, 10), false);
    CHECK(v.winner == Winner::Min);
    CHECK(v.reason == "value<c");
    CHECK(v.value == Rational(7, 8));
  }
  SUBCASE("strict 0 from a positive state is a Max win") {
    const Example ex = fig2_truncation(8);
    const auto v = threshold_decide(ex.game, ex.target, ex.game.index("s0"), Rational(0), true);
    CHECK(v.winner == Winner::Max);
    REQUIRE(v.strategy);
    CHECK(residual_value(ex.game, ex.target, *v.strategy, ex.game.index("s0")) > 0);
  }
  SUBCASE("ladder, threshold 1, from a ladder state is a Min win") {
    for (std::size_t k = 1; k <= 4; ++k) {
      const Example ex = build_ladder(k);
      const auto v = threshold_decide(ex.game, ex.target, ex.game.index("x1_0"), Rational(1), false);
      CHECK(v.winner == Winner::Min);
      const auto w = threshold_decide(ex.game, ex.target, ex.game.index("botmax"), Rational(1), false);
      CHECK(w.winner == Winner::Max);
      CHECK(w.reason == "case-3");
    }
  }
  SUBCASE("thresholds outside [0, 1] are rejected") {
    const Example ex = fig2_truncation(4);
    CHECK_THROWS_AS(threshold_decide(ex.game, ex.target, 0, Rational(3, 2), false),
                    PreconditionError);
    CHECK_THROWS_AS(threshold_decide(ex.game, ex.target, 0, Rational(-1), false),
                    PreconditionError);
  }
  SUBCASE("verdicts are certified and in scope where the cases apply") {
    std::mt19937_64 rng(37);
    for (const auto& inst : testing::random_family(38, 100, 2, 10)) {
      const Game& g = inst.game;
      const auto values = value_reach(g, inst.target);
      const StateIndex s = static_cast<StateIndex>(rng() % g.size());
      const Rational val = values.at(s);
      const Rational half(1, 2);
      for (const Rational& c : {val, Rational(0), Rational(1), half}) {
        for (bool strict : {false, true}) {
          const auto v = threshold_decide(g, inst.target, s, c, strict);
          if (strict || c == 0 || c == 1) CHECK(v.winner != Winner::OutOfScope);
          if (v.winner == Winner::OutOfScope) {
            CHECK(v.reason == "none-applicable");
            continue;
          }
          REQUIRE(v.strategy);
          const Rational r = residual_value(g, inst.target, *v.strategy, s);
          if (v.winner == Winner::Max) {
            // Min's best reply still meets the threshold.
            CHECK((strict ? r > c : r >= c));
          } else {
            // Max's best reply misses it.
            CHECK((strict ? r <= c : r < c));
          }
        }
      }
    }
  }
}

TEST_CASE("strategy files") {
  const Example ex = fig2_truncation(5);
  const Game& g = ex.game;
  SUBCASE("MD round trip") {
    const MDStrategy m = optimal_min_md(g, ex.target);
    std::ostringstream os;
    write_md(os, g, m);
    CHECK(os.str().rfind("strategy min md\n", 0) == 0);
    std::istringstream is(os.str());
    const MDStrategy back = read_md(is, g);
    for (StateIndex s = 0; s < g.size(); ++s) {
      if (g.owner(s) == Owner::Min) CHECK(back.choice[s] == m.choice[s]);
    }
  }
  SUBCASE("transducer round trip") {
    TransducerStrategy t;
    t.owner = Player::Max;
    t.modes = {"go", "stop"};
    t.update.assign(2, std::vector<TransducerStrategy::Row>(g.size()));
    t.move.assign(2, std::vector<TransducerStrategy::Row>(g.size()));
    for (std::size_t m = 0; m < 2; ++m) {
      for (StateIndex s = 0; s < g.size(); ++s) {
        if (g.owner(s) != Owner::Max) continue;
        auto succ = g.successors(s);
        if (succ.size() == 2) {
          t.move[m][s] = {{succ[0], succ[1]}, {Rational(1, 3), Rational(2, 3)}};
        } else {
          t.move[m][s] = {{succ[0]}, {Rational(1)}};
        }
      }
    }
    t.update[0][g.index("s1")] = {{0, 1}, {Rational(1, 2), Rational(1, 2)}};
    std::ostringstream os;
    write_transducer(os, g, t);
    std::istringstream is(os.str());
    const TransducerStrategy back = read_strategy(is, g);
    CHECK(back.modes == t.modes);
    std::ostringstream again;
    write_transducer(again, g, back);
    CHECK(again.str() == os.str());
    CHECK_FALSE(to_md(back));
  }
  SUBCASE("malformed files") {
    auto fails = [&](const std::string& text) {
      std::istringstream is(text);
      CHECK_THROWS_AS(read_strategy(is, g), ParseError);
    };
    fails("strategy max\n");
    fails("strategy max md\nchoose s0 t\n");
    fails("strategy max md\nchoose sp0 sp1\n");
    fails("strategy max md\nchoose s0 s1\nchoose s0 r0\n");
    fails("strategy max transducer\nupdate a s0 a 1/1\n");
    fails("strategy max transducer\nmodes a\nmove a s0 s1 1/2\n");
  }
}
