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

#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "ssg/strategy.hpp"

namespace ssg {
namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream is(line.substr(0, line.find('#')));
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

StateIndex state_at(const Game& g, const std::string& id, std::size_t line) {
  auto s = g.find(id);
  if (!s) throw ParseError(line, "unknown state '" + id + "'");
  return *s;
}

Rational weight_at(const std::string& text, std::size_t line) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, e.what());
  }
}

}  // namespace

void write_md(std::ostream& out, const Game& g, const MDStrategy& m) {
  check_md(g, m);
  out << "strategy " << player_name(m.owner) << " md\n";
  const Owner mine = owner_of(m.owner);
  for (StateIndex s = 0; s < g.size(); ++s) {
    if (g.owner(s) == mine) out << "choose " << g.id(s) << ' ' << g.id(m.choice[s]) << '\n';
  }
}

void write_transducer(std::ostream& out, const Game& g, const TransducerStrategy& t) {
  check_transducer(g, t);
  out << "strategy " << player_name(t.owner) << " transducer\nmodes";
  for (const auto& m : t.modes) out << ' ' << m;
  out << '\n';
  for (std::size_t m = 0; m < t.modes.size(); ++m) {
    for (StateIndex s = 0; s < g.size(); ++s) {
      const auto& u = t.update[m][s];
      if (u.to.empty()) continue;
      out << "update " << t.modes[m] << ' ' << g.id(s);
      for (std::size_t k = 0; k < u.to.size(); ++k) {
        out << ' ' << t.modes[u.to[k]] << ' ' << format_rational(u.prob[k]);
      }
      out << '\n';
    }
  }
  for (std::size_t m = 0; m < t.modes.size(); ++m) {
    for (StateIndex s = 0; s < g.size(); ++s) {
      const auto& mv = t.move[m][s];
      if (mv.to.empty()) continue;
      out << "move " << t.modes[m] << ' ' << g.id(s);
      for (std::size_t k = 0; k < mv.to.size(); ++k) {
        out << ' ' << g.id(static_cast<StateIndex>(mv.to[k])) << ' '
            << format_rational(mv.prob[k]);
      }
      out << '\n';
    }
  }
}

TransducerStrategy read_strategy(std::istream& in, const Game& g) {
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::string> header;
  while (header.empty() && std::getline(in, line)) {
    ++lineno;
    header = tokens(line);
  }
  if (header.size() != 3 || header[0] != "strategy" ||
      (header[1] != "max" && header[1] != "min") ||
      (header[2] != "md" && header[2] != "transducer")) {
    throw ParseError(lineno, "expected 'strategy max|min md|transducer'");
  }
  const Player owner = header[1] == "max" ? Player::Max : Player::Min;
  const Owner mine = owner_of(owner);

  if (header[2] == "md") {
    MDStrategy m{owner, std::vector<StateIndex>(g.size(), 0)};
    std::vector<bool> seen(g.size(), false);
    while (std::getline(in, line)) {
      ++lineno;
      auto tok = tokens(line);
      if (tok.empty()) continue;
      if (tok[0] != "choose" || tok.size() != 3) {
        throw ParseError(lineno, "expected 'choose <state> <successor>'");
      }
      StateIndex s = state_at(g, tok[1], lineno);
      StateIndex t = state_at(g, tok[2], lineno);
      if (g.owner(s) != mine) throw ParseError(lineno, "state '" + tok[1] + "' is not owned");
      if (!g.has_edge(s, t)) throw ParseError(lineno, tok[1] + " -> " + tok[2] + " is not an edge");
      if (seen[s]) throw ParseError(lineno, "second choice for '" + tok[1] + "'");
      seen[s] = true;
      m.choice[s] = t;
    }
    for (StateIndex s = 0; s < g.size(); ++s) {
      if (g.owner(s) == mine && !seen[s]) {
        throw ParseError(0, "no choice for state '" + g.id(s) + "'");
      }
    }
    return to_transducer(g, m);
  }

  TransducerStrategy t;
  t.owner = owner;
  std::unordered_map<std::string, std::size_t> mode_index;
  while (std::getline(in, line)) {
    ++lineno;
    auto tok = tokens(line);
    if (tok.empty()) continue;
    if (tok[0] == "modes") {
      if (!t.modes.empty()) throw ParseError(lineno, "modes declared twice");
      if (tok.size() < 2) throw ParseError(lineno, "expected at least one mode");
      for (std::size_t k = 1; k < tok.size(); ++k) {
        if (!mode_index.emplace(tok[k], t.modes.size()).second) {
          throw ParseError(lineno, "duplicate mode '" + tok[k] + "'");
        }
        t.modes.push_back(tok[k]);
      }
      t.update.assign(t.modes.size(), std::vector<TransducerStrategy::Row>(g.size()));
      t.move.assign(t.modes.size(), std::vector<TransducerStrategy::Row>(g.size()));
      continue;
    }
    if (tok[0] != "update" && tok[0] != "move") {
      throw ParseError(lineno, "unknown keyword '" + tok[0] + "'");
    }
    if (t.modes.empty()) throw ParseError(lineno, "rows must follow the modes line");
    if (tok.size() < 5 || (tok.size() - 3) % 2 != 0) {
      throw ParseError(lineno, "expected '" + tok[0] + " <mode> <state> (<to> <p/q>)+'");
    }
    auto mode = mode_index.find(tok[1]);
    if (mode == mode_index.end()) throw ParseError(lineno, "unknown mode '" + tok[1] + "'");
    StateIndex s = state_at(g, tok[2], lineno);
    TransducerStrategy::Row row;
    for (std::size_t k = 3; k < tok.size(); k += 2) {
      if (tok[0] == "update") {
        auto to = mode_index.find(tok[k]);
        if (to == mode_index.end()) throw ParseError(lineno, "unknown mode '" + tok[k] + "'");
        row.to.push_back(to->second);
      } else {
        row.to.push_back(state_at(g, tok[k], lineno));
      }
      row.prob.push_back(weight_at(tok[k + 1], lineno));
    }
    auto& table = tok[0] == "update" ? t.update : t.move;
    if (!table[mode->second][s].to.empty()) {
      throw ParseError(lineno, "second " + tok[0] + " row for this mode and state");
    }
    table[mode->second][s] = std::move(row);
  }
  if (t.modes.empty()) throw ParseError(0, "transducer without modes");
  try {
    check_transducer(g, t);
  } catch (const PreconditionError& e) {
    throw ParseError(0, e.what());
  }
  return t;
}

MDStrategy read_md(std::istream& in, const Game& g) {
  auto t = read_strategy(in, g);
  auto m = to_md(t);
  if (!m) throw ParseError(0, "strategy is not memoryless deterministic");
  return *m;
}

}  // namespace ssg
