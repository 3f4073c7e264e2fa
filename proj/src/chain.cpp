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

#include "ssg/chain.hpp"

#include <deque>

#include "ssg/graph.hpp"

namespace ssg {

std::vector<ChainRow> chain_rows(const Game& g, const std::vector<StateIndex>& choice) {
  std::vector<ChainRow> rows(g.size());
  for (StateIndex s = 0; s < g.size(); ++s) {
    if (g.owner(s) == Owner::Random) {
      auto succ = g.successors(s);
      auto w = g.weights(s);
      rows[s].next.assign(succ.begin(), succ.end());
      rows[s].prob.assign(w.begin(), w.end());
    } else {
      rows[s].next = {choice[s]};
      rows[s].prob = {Rational(1)};
    }
  }
  return rows;
}

namespace {

// Dense exact solve of A x = b, A square and non-singular.
std::vector<Rational> gauss(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::logic_error("singular system in chain solve");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    Rational inv = 1 / a[col][col];
    for (std::size_t k = col; k < n; ++k) a[col][k] *= inv;
    b[col] *= inv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      Rational f = a[row][col];
      for (std::size_t k = col; k < n; ++k) {
        if (a[col][k] != 0) a[row][k] -= f * a[col][k];
      }
      b[row] -= f * b[col];
    }
  }
  return b;
}

}  // namespace

std::vector<Rational> solve_chain_reach(const std::vector<ChainRow>& rows, const StateSet& target,
                                        const StateSet& zero) {
  const std::size_t n = rows.size();
  std::vector<std::vector<StateIndex>> pred(n);
  for (StateIndex s = 0; s < n; ++s) {
    if (target[s] || zero[s]) continue;
    for (StateIndex t : rows[s].next) pred[t].push_back(s);
  }
  StateSet live(n, false);
  std::deque<StateIndex> queue;
  for (StateIndex s = 0; s < n; ++s) {
    if (target[s]) {
      live[s] = true;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    StateIndex t = queue.front();
    queue.pop_front();
    for (StateIndex s : pred[t]) {
      if (!live[s]) {
        live[s] = true;
        queue.push_back(s);
      }
    }
  }
  std::vector<Rational> value(n, Rational(0));
  StateSet unknown(n, false);
  std::vector<std::vector<StateIndex>> adj(n);
  for (StateIndex s = 0; s < n; ++s) {
    if (target[s]) value[s] = 1;
    if (live[s] && !target[s]) {
      unknown[s] = true;
      adj[s] = rows[s].next;
    }
  }
  std::vector<int> local(n, -1);
  for (const auto& comp : scc_decomposition(adj, unknown)) {
    if (comp.size() == 1) {
      const StateIndex s = comp[0];
      Rational rest(0), self(0);
      for (std::size_t k = 0; k < rows[s].next.size(); ++k) {
        StateIndex t = rows[s].next[k];
        if (t == s) {
          self += rows[s].prob[k];
        } else {
          rest += rows[s].prob[k] * value[t];
        }
      }
      value[s] = rest / (1 - self);
      continue;
    }
    for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<int>(i);
    const std::size_t m = comp.size();
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m, Rational(0)));
    std::vector<Rational> b(m, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
      const StateIndex s = comp[i];
      a[i][i] += 1;
      for (std::size_t k = 0; k < rows[s].next.size(); ++k) {
        StateIndex t = rows[s].next[k];
        if (local[t] >= 0) {
          a[i][local[t]] -= rows[s].prob[k];
        } else {
          b[i] += rows[s].prob[k] * value[t];
        }
      }
    }
    auto x = gauss(std::move(a), std::move(b));
    for (std::size_t i = 0; i < m; ++i) {
      value[comp[i]] = x[i];
      local[comp[i]] = -1;
    }
  }
  return value;
}

}  // namespace ssg
