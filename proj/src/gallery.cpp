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

#include "ssg/gallery.hpp"

#include <charconv>

#include "ssg/errors.hpp"

namespace ssg {
namespace {

// Splits "sp12" into ("sp", 12). Returns false if there is no number.
bool split_id(const std::string& id, std::string& prefix, std::size_t& k) {
  std::size_t pos = 0;
  while (pos < id.size() && (id[pos] < '0' || id[pos] > '9')) ++pos;
  if (pos == 0 || pos == id.size()) return false;
  prefix = id.substr(0, pos);
  auto [end, ec] = std::from_chars(id.data() + pos, id.data() + id.size(), k);
  return ec == std::errc() && end == id.data() + id.size();
}

std::string name(const std::string& prefix, std::size_t k) { return prefix + std::to_string(k); }

Expansion fig2_expand(const std::string& id) {
  const Rational half(1, 2);
  if (id == "i") return {Owner::Random, {"s0", "sp0"}, {half, half}, {}};
  if (id == "t") return {Owner::Max, {"t"}, {}, {"target", "buchi"}};
  std::string prefix;
  std::size_t k = 0;
  if (!split_id(id, prefix, k)) throw std::out_of_range("unknown state '" + id + "'");
  if (prefix == "s") return {Owner::Max, {name("s", k + 1), name("r", k)}, {}, {}};
  if (prefix == "sp") {
    if (k == 0) return {Owner::Min, {"sp1"}, {}, {"buchi"}};
    return {Owner::Min, {name("sp", k + 1), name("rp", k)}, {}, {"buchi"}};
  }
  if (prefix == "r") {
    if (k == 0) return {Owner::Random, {"r0"}, {Rational(1)}, {}};
    return {Owner::Random, {"t", name("r", k - 1)}, {half, half}, {}};
  }
  if (prefix == "rp") {
    if (k == 0) return {Owner::Random, {"rp0"}, {Rational(1)}, {}};
    const Rational hit = pow2(-static_cast<int>(k));
    return {Owner::Random, {"t", "rp0"}, {hit, 1 - hit}, {}};
  }
  throw std::out_of_range("unknown state '" + id + "'");
}

Example from_truncation(const Truncation& tr) {
  return {tr.game, tr.tagged("target"), tr.tagged("buchi")};
}

}  // namespace

LazyGame build_fig2() { return LazyGame("i", fig2_expand, 2); }

Example fig2_truncation(std::size_t depth, SinkMode mode) {
  return from_truncation(truncate(build_fig2(), depth, mode));
}

Example build_ladder(std::size_t k) {
  if (k == 0) throw PreconditionError("ladder needs k >= 1");
  const std::size_t len = k + 2;
  const Rational half(1, 2);
  GameBuilder b;
  const StateIndex bot = b.add_state("bot", Owner::Random);
  const StateIndex botmax = b.add_state("botmax", Owner::Max);
  const StateIndex omega = b.add_state("omega", Owner::Max);
  const StateIndex leak = b.add_state("leak", Owner::Random);
  std::vector<std::vector<StateIndex>> x(k + 1);
  std::vector<std::vector<StateIndex>> z(k);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t p = 0; p < len; ++p) {
      z[j].push_back(b.add_state("z" + std::to_string(j) + "_" + std::to_string(p), Owner::Random));
    }
  }
  for (std::size_t j = 1; j <= k; ++j) {
    for (std::size_t p = 0; p < len; ++p) {
      x[j].push_back(b.add_state("x" + std::to_string(j) + "_" + std::to_string(p), Owner::Max));
    }
  }
  b.add_edge(bot, bot, Rational(1));
  b.add_edge(leak, leak, Rational(1));
  b.add_edge(botmax, bot);
  b.add_edge(botmax, omega);
  b.add_edge(omega, x[k][0]);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t p = 0; p < len; ++p) {
      b.add_edge(z[j][p], bot, half);
      if (p > 0) {
        b.add_edge(z[j][p], z[j][p - 1], half);
      } else {
        b.add_edge(z[j][p], j == 0 ? leak : x[j][0], half);
      }
    }
  }
  for (std::size_t j = 1; j <= k; ++j) {
    for (std::size_t p = 0; p < len; ++p) {
      if (p + 1 < len) b.add_edge(x[j][p], x[j][p + 1]);
      b.add_edge(x[j][p], z[j - 1][p]);
    }
  }
  Game g = std::move(b).build();
  StateSet target = make_set(g, {"bot"});
  return {std::move(g), target, target};
}

Example build_gamblers_ruin(const Rational& p, std::size_t cap) {
  if (p <= 0 || p >= 1) throw PreconditionError("win probability must lie in (0, 1)");
  if (cap < 2) throw PreconditionError("cap must be at least 2");
  GameBuilder b;
  for (std::size_t w = 0; w <= cap; ++w) b.add_state(name("w", w), Owner::Random);
  for (std::size_t w = 0; w <= cap; ++w) {
    const auto s = static_cast<StateIndex>(w);
    if (w == 0 || w == cap) {
      b.add_edge(s, s, Rational(1));
    } else {
      b.add_edge(s, s + 1, p);
      b.add_edge(s, s - 1, 1 - p);
    }
  }
  Game g = std::move(b).build();
  StateSet target = make_set(g, {"w0"});
  return {std::move(g), target, target};
}

LazyGame gamblers_ruin_lazy(const Rational& p) {
  if (p <= 0 || p >= 1) throw PreconditionError("win probability must lie in (0, 1)");
  return LazyGame(
      "w1",
      [p](const std::string& id) -> Expansion {
        std::string prefix;
        std::size_t w = 0;
        if (!split_id(id, prefix, w) || prefix != "w") {
          throw std::out_of_range("unknown state '" + id + "'");
        }
        if (w == 0) return {Owner::Random, {"w0"}, {Rational(1)}, {"target"}};
        return {Owner::Random, {name("w", w + 1), name("w", w - 1)}, {p, 1 - p}, {}};
      },
      2);
}

Example build_fig2_with_u(std::size_t depth) {
  if (depth < 4) throw PreconditionError("depth must be at least 4 so that t is expanded");
  const Truncation tr = truncate(build_fig2(), depth, SinkMode::Pessimistic);
  const Game& base = tr.game;
  GameBuilder b;
  for (StateIndex s = 0; s < base.size(); ++s) b.add_state(base.id(s), base.owner(s));
  for (StateIndex s = 0; s < base.size(); ++s) {
    auto succ = base.successors(s);
    auto w = base.weights(s);
    for (std::size_t k = 0; k < succ.size(); ++k) {
      if (base.owner(s) == Owner::Random) {
        b.add_edge(s, succ[k], w[k]);
      } else {
        b.add_edge(s, succ[k]);
      }
    }
  }
  const StateIndex u = b.add_state("u", Owner::Min);
  b.add_edge(u, base.index("s0"));
  b.add_edge(u, base.index("t"));
  Game g = std::move(b).build();
  StateSet target = tr.tagged("target");
  StateSet buchi = tr.tagged("buchi");
  target.push_back(false);
  buchi.push_back(false);
  return {std::move(g), std::move(target), std::move(buchi)};
}

Example gallery_game(const std::string& which, std::size_t param, const Rational& p) {
  if (which == "fig2") return fig2_truncation(param);
  if (which == "ladder") return build_ladder(param);
  if (which == "ruin") return build_gamblers_ruin(p, param);
  if (which == "fig2u") return build_fig2_with_u(param);
  throw PreconditionError("unknown gallery game '" + which + "'");
}

}  // namespace ssg
