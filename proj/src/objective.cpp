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

#include "ssg/objective.hpp"

#include <deque>
#include <stdexcept>

namespace ssg {

const char* objective_name(ObjectiveKind k) {
  switch (k) {
    case ObjectiveKind::Reach: return "reach";
    case ObjectiveKind::ReachWithin: return "reach-within";
    case ObjectiveKind::ReachPlus: return "reachplus";
    case ObjectiveKind::Safety: return "safety";
    case ObjectiveKind::Buchi: return "buchi";
    case ObjectiveKind::CoBuchi: return "cobuchi";
  }
  return "?";
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::SatisfiedForever: return "satisfied";
    case Verdict::ViolatedForever: return "violated";
    case Verdict::Undecided: return "undecided";
  }
  return "?";
}

Objective dual(const Objective& obj) {
  Objective d = obj;
  switch (obj.kind) {
    case ObjectiveKind::Reach: d.kind = ObjectiveKind::Safety; break;
    case ObjectiveKind::Safety: d.kind = ObjectiveKind::Reach; break;
    case ObjectiveKind::Buchi: d.kind = ObjectiveKind::CoBuchi; break;
    case ObjectiveKind::CoBuchi: d.kind = ObjectiveKind::Buchi; break;
    default:
      throw PreconditionError(std::string("objective '") + objective_name(obj.kind) +
                              "' has no dual");
  }
  return d;
}

Objective parse_objective(std::string_view kind, std::string_view targets) {
  Objective obj;
  if (kind == "reach") {
    obj.kind = ObjectiveKind::Reach;
  } else if (kind == "safety") {
    obj.kind = ObjectiveKind::Safety;
  } else if (kind == "buchi") {
    obj.kind = ObjectiveKind::Buchi;
  } else if (kind == "cobuchi") {
    obj.kind = ObjectiveKind::CoBuchi;
  } else if (kind == "reachplus") {
    obj.kind = ObjectiveKind::ReachPlus;
  } else if (kind.substr(0, 7) == "reach<=") {
    std::string digits(kind.substr(7));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("malformed step bound in '" + std::string(kind) + "'");
    }
    obj.kind = ObjectiveKind::ReachWithin;
    obj.horizon = std::stoul(digits);
  } else {
    throw std::invalid_argument("unknown objective '" + std::string(kind) + "'");
  }
  std::size_t pos = 0;
  while (pos <= targets.size() && !targets.empty()) {
    auto comma = targets.find(',', pos);
    auto part = targets.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                     : comma - pos);
    if (part.empty()) throw std::invalid_argument("empty id in target list");
    obj.target.emplace_back(part);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return obj;
}

BoundObjective::BoundObjective(const Game& g, const Objective& obj)
    : game_(&g), kind_(obj.kind), horizon_(obj.horizon), target_(make_set(g, obj.target)) {
  init();
}

BoundObjective::BoundObjective(const Game& g, ObjectiveKind kind, StateSet target,
                               std::size_t horizon)
    : game_(&g), kind_(kind), horizon_(horizon), target_(std::move(target)) {
  if (target_.size() != g.size()) throw std::invalid_argument("target mask size mismatch");
  init();
}

void BoundObjective::init() {
  const Game& g = *game_;
  std::vector<std::vector<StateIndex>> pred(g.size());
  for (StateIndex s = 0; s < g.size(); ++s) {
    for (StateIndex t : g.successors(s)) pred[t].push_back(s);
  }
  distance_.assign(g.size(), -1);
  std::deque<StateIndex> queue;
  for (StateIndex s = 0; s < g.size(); ++s) {
    if (target_[s]) {
      distance_[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    StateIndex t = queue.front();
    queue.pop_front();
    for (StateIndex s : pred[t]) {
      if (distance_[s] < 0) {
        distance_[s] = distance_[t] + 1;
        queue.push_back(s);
      }
    }
  }
}

bool BoundObjective::absorbing(StateIndex s) const {
  auto succ = game_->successors(s);
  return succ.size() == 1 && succ[0] == s;
}

PlayPrefix::PlayPrefix(const Game& g, std::vector<StateIndex> states)
    : states_(std::move(states)) {
  if (states_.empty()) throw std::invalid_argument("empty play prefix");
  for (StateIndex s : states_) {
    if (s >= g.size()) throw std::invalid_argument("play prefix names an unknown state");
  }
  for (std::size_t k = 0; k + 1 < states_.size(); ++k) {
    if (!g.has_edge(states_[k], states_[k + 1])) {
      throw std::invalid_argument("play prefix step " + g.id(states_[k]) + " -> " +
                                  g.id(states_[k + 1]) + " is not an edge");
    }
  }
}

Verdict VerdictTracker::push(StateIndex s) {
  const std::size_t pos = length_++;
  if (verdict_ != Verdict::Undecided) return verdict_;
  const BoundObjective& o = *obj_;
  const bool in_t = o.target()[s];
  const long dist = o.distance(s);
  switch (o.kind()) {
    case ObjectiveKind::Reach:
      if (in_t) {
        verdict_ = Verdict::SatisfiedForever;
      } else if (dist < 0) {
        verdict_ = Verdict::ViolatedForever;
      }
      break;
    case ObjectiveKind::ReachWithin:
      if (in_t && pos <= o.horizon()) {
        verdict_ = Verdict::SatisfiedForever;
      } else if (dist < 0 || pos + static_cast<std::size_t>(dist) > o.horizon()) {
        verdict_ = Verdict::ViolatedForever;
      }
      break;
    case ObjectiveKind::ReachPlus:
      if (pos >= 1 && in_t) {
        verdict_ = Verdict::SatisfiedForever;
      } else if (pos >= 1 && dist < 0) {
        verdict_ = Verdict::ViolatedForever;
      } else if (pos == 0) {
        bool any = false;
        for (StateIndex t : o.game().successors(s)) any = any || o.distance(t) >= 0;
        if (!any) verdict_ = Verdict::ViolatedForever;
      }
      break;
    case ObjectiveKind::Safety:
      if (in_t) {
        verdict_ = Verdict::ViolatedForever;
      } else if (dist < 0) {
        verdict_ = Verdict::SatisfiedForever;
      }
      break;
    case ObjectiveKind::Buchi:
      if (o.absorbing(s)) verdict_ = in_t ? Verdict::SatisfiedForever : Verdict::ViolatedForever;
      break;
    case ObjectiveKind::CoBuchi:
      if (o.absorbing(s)) verdict_ = in_t ? Verdict::ViolatedForever : Verdict::SatisfiedForever;
      break;
  }
  return verdict_;
}

Verdict decided(const BoundObjective& obj, const PlayPrefix& prefix) {
  VerdictTracker tracker(obj);
  for (StateIndex s : prefix.states()) tracker.push(s);
  return tracker.verdict();
}

}  // namespace ssg
