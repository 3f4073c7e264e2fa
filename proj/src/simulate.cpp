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

#include "ssg/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace ssg {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double counter_uniform(std::uint64_t seed, std::uint64_t play, std::uint64_t step,
                       std::uint64_t stream) {
  std::uint64_t h = mix64(seed);
  h = mix64(h ^ play);
  h = mix64(h ^ step);
  h = mix64(h ^ stream);
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

namespace {

enum Stream : std::uint64_t { kChance = 0, kMaxMove = 1, kMaxMemory = 2, kMinMove = 3, kMinMemory = 4 };

// Cumulative double weights for sampling.
struct Cumulative {
  std::vector<std::size_t> to;
  std::vector<double> cum;

  std::size_t draw(double u) const {
    for (std::size_t k = 0; k + 1 < cum.size(); ++k) {
      if (u < cum[k]) return to[k];
    }
    return to.back();
  }
};

Cumulative cumulative(const std::vector<std::size_t>& to, const std::vector<Rational>& prob) {
  Cumulative c;
  c.to = to;
  Rational acc(0);
  for (const auto& p : prob) {
    acc += p;
    c.cum.push_back(acc.get_d());
  }
  return c;
}

struct CompiledTransducer {
  std::vector<std::vector<Cumulative>> update;  // empty row keeps the mode
  std::vector<std::vector<Cumulative>> move;
};

CompiledTransducer compile(const TransducerStrategy& t) {
  CompiledTransducer c;
  c.update.resize(t.modes.size());
  c.move.resize(t.modes.size());
  for (std::size_t m = 0; m < t.modes.size(); ++m) {
    for (const auto& row : t.update[m]) c.update[m].push_back(cumulative(row.to, row.prob));
    for (const auto& row : t.move[m]) c.move[m].push_back(cumulative(row.to, row.prob));
  }
  return c;
}

struct PlayOutcome {
  double score;
  bool decided;
};

}  // namespace

Estimate sample_plays(const Game& g, StateIndex s0, const TransducerStrategy& sigma,
                      const TransducerStrategy& pi, const BoundObjective& obj,
                      const SimConfig& cfg) {
  if (sigma.owner != Player::Max || pi.owner != Player::Min) {
    throw PreconditionError("sigma must belong to Max and pi to Min");
  }
  if (&obj.game() != &g) throw PreconditionError("objective is bound to a different game");
  if (cfg.samples == 0 || cfg.horizon == 0 || cfg.buchi_window == 0 ||
      cfg.buchi_window > cfg.horizon) {
    throw PreconditionError("need samples, horizon >= buchi-window >= 1");
  }
  if (s0 >= g.size()) throw PreconditionError("initial state out of range");
  check_transducer(g, sigma);
  check_transducer(g, pi);
  const CompiledTransducer cs = compile(sigma);
  const CompiledTransducer cp = compile(pi);
  std::vector<Cumulative> chance(g.size());
  for (StateIndex s = 0; s < g.size(); ++s) {
    if (g.owner(s) != Owner::Random) continue;
    auto succ = g.successors(s);
    auto w = g.weights(s);
    chance[s] = cumulative(std::vector<std::size_t>(succ.begin(), succ.end()),
                           std::vector<Rational>(w.begin(), w.end()));
  }
  const bool tail = obj.kind() == ObjectiveKind::Buchi || obj.kind() == ObjectiveKind::CoBuchi;

  auto run = [&](std::uint64_t play) -> PlayOutcome {
    VerdictTracker tracker(obj);
    std::size_t max_mode = 0;
    std::size_t min_mode = 0;
    StateIndex s = s0;
    std::size_t last_hit = 0;
    bool hit = false;
    for (std::size_t step = 0;; ++step) {
      if (tracker.push(s) != Verdict::Undecided) break;
      if (obj.target()[s]) {
        hit = true;
        last_hit = step;
      }
      if (step == cfg.horizon) break;
      StateIndex next;
      switch (g.owner(s)) {
        case Owner::Random:
          next = static_cast<StateIndex>(chance[s].draw(counter_uniform(cfg.seed, play, step, kChance)));
          break;
        case Owner::Max:
          next = static_cast<StateIndex>(
              cs.move[max_mode][s].draw(counter_uniform(cfg.seed, play, step, kMaxMove)));
          break;
        default:
          next = static_cast<StateIndex>(
              cp.move[min_mode][s].draw(counter_uniform(cfg.seed, play, step, kMinMove)));
          break;
      }
      // Memory observes the state just left.
      if (!cs.update[max_mode][s].to.empty()) {
        max_mode = cs.update[max_mode][s].draw(counter_uniform(cfg.seed, play, step, kMaxMemory));
      }
      if (!cp.update[min_mode][s].to.empty()) {
        min_mode = cp.update[min_mode][s].draw(counter_uniform(cfg.seed, play, step, kMinMemory));
      }
      s = next;
    }
    switch (tracker.verdict()) {
      case Verdict::SatisfiedForever: return {1.0, true};
      case Verdict::ViolatedForever: return {0.0, true};
      case Verdict::Undecided: break;
    }
    if (tail) {
      const std::size_t end = tracker.length() - 1;
      const bool recent = hit && end - last_hit < cfg.buchi_window;
      const bool buchi = obj.kind() == ObjectiveKind::Buchi;
      return {(recent == buchi) ? 1.0 : 0.0, false};
    }
    return {obj.kind() == ObjectiveKind::Safety ? 1.0 : 0.0, false};
  };

  std::vector<PlayOutcome> outcomes(cfg.samples);
  unsigned workers = cfg.workers ? cfg.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, cfg.samples));
  if (workers <= 1) {
    for (std::size_t k = 0; k < cfg.samples; ++k) outcomes[k] = run(k);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t k = w; k < cfg.samples; k += workers) outcomes[k] = run(k);
      });
    }
    for (auto& th : pool) th.join();
  }
  // Merge in sample order.
  double sum = 0;
  std::size_t decided = 0;
  for (const auto& o : outcomes) {
    sum += o.score;
    decided += o.decided ? 1 : 0;
  }
  Estimate e;
  const double n = static_cast<double>(cfg.samples);
  e.mean = sum / n;
  e.half_width_95 = 1.96 * std::sqrt(e.mean * (1 - e.mean) / n);
  e.decided_fraction = static_cast<double>(decided) / n;
  return e;
}

}  // namespace ssg
