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

#include "ssg/transforms.hpp"

#include <stdexcept>

#include "ssg/valuation.hpp"

namespace ssg {

Game rvi(const Game& g, const StateSet& target) {
  const auto values = solve_reach(g, target).values;
  return filter_owned_edges(g, [&](StateIndex s, StateIndex t) {
    return g.owner(s) != Owner::Min || !(values[s] < values[t]);
  });
}

const char* edge_class_name(EdgeClass c) {
  switch (c) {
    case EdgeClass::Increasing: return "increasing";
    case EdgeClass::Decreasing: return "decreasing";
    case EdgeClass::Preserving: return "preserving";
  }
  return "?";
}

std::vector<ClassifiedEdge> classify_with(const Game& g, const std::vector<Rational>& values) {
  std::vector<ClassifiedEdge> out;
  for (StateIndex s = 0; s < g.size(); ++s) {
    for (StateIndex t : g.successors(s)) {
      EdgeClass c = EdgeClass::Preserving;
      if (values[s] > values[t]) {
        c = EdgeClass::Decreasing;
      } else if (values[s] < values[t]) {
        c = EdgeClass::Increasing;
      }
      out.push_back({s, t, c});
    }
  }
  return out;
}

std::vector<ClassifiedEdge> classify_transitions(const Game& g, const StateSet& target,
                                                 ValueBasis basis) {
  auto values = solve_reach(g, target).values;
  if (basis == ValueBasis::ReachPlus) {
    return classify_with(g, bellman_step_plus(g, values));
  }
  auto out = classify_with(g, values);
  for (const auto& e : out) {
    // Target states score 1 whatever their successors are worth.
    if (target[e.from]) continue;
    const Owner o = g.owner(e.from);
    if ((o == Owner::Max && e.cls == EdgeClass::Increasing) ||
        (o == Owner::Min && e.cls == EdgeClass::Decreasing)) {
      throw std::logic_error("edge " + g.id(e.from) + " -> " + g.id(e.to) + " is " +
                             edge_class_name(e.cls) + " for its owner");
    }
  }
  return out;
}

}  // namespace ssg
