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

#include "ssg/game_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace ssg {
namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream is(body);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

struct PendingEdge {
  std::size_t line;
  StateIndex from;
  std::string to;
  std::optional<Rational> weight;
};

}  // namespace

GameFile parse_game(std::istream& in) {
  GameBuilder b;
  GameFile file;
  std::vector<PendingEdge> edges;
  std::vector<Owner> owners;
  std::vector<std::string> ids;
  std::vector<std::pair<std::size_t, std::string>> targets;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto tok = tokens(line);
    if (tok.empty()) continue;
    const std::string& kw = tok[0];
    if (kw == "state") {
      if (tok.size() != 3) throw ParseError(lineno, "expected 'state <id> max|min|rand'");
      Owner o;
      if (tok[2] == "max") {
        o = Owner::Max;
      } else if (tok[2] == "min") {
        o = Owner::Min;
      } else if (tok[2] == "rand") {
        o = Owner::Random;
      } else {
        throw ParseError(lineno, "unknown owner '" + tok[2] + "'");
      }
      if (b.find(tok[1])) throw ParseError(lineno, "duplicate state '" + tok[1] + "'");
      b.add_state(tok[1], o);
      owners.push_back(o);
      ids.push_back(tok[1]);
      file.state_lines.push_back(lineno);
    } else if (kw == "edge") {
      if (tok.size() != 3 && tok.size() != 4) {
        throw ParseError(lineno, "expected 'edge <src> <dst> [p/q]'");
      }
      auto from = b.find(tok[1]);
      if (!from) throw ParseError(lineno, "edge from undeclared state '" + tok[1] + "'");
      PendingEdge e{lineno, *from, tok[2], std::nullopt};
      if (tok.size() == 4) {
        try {
          e.weight = parse_rational(tok[3]);
        } catch (const std::invalid_argument& ex) {
          throw ParseError(lineno, ex.what());
        }
      }
      edges.push_back(std::move(e));
    } else if (kw == "target") {
      if (tok.size() != 2) throw ParseError(lineno, "expected 'target <id>'");
      targets.emplace_back(lineno, tok[1]);
    } else {
      throw ParseError(lineno, "unknown keyword '" + kw + "'");
    }
  }
  // Successors may be declared after the edge that mentions them.
  for (const auto& e : edges) {
    auto to = b.find(e.to);
    if (!to) throw ParseError(e.line, "edge to undeclared state '" + e.to + "'");
    const bool random = owners[e.from] == Owner::Random;
    const std::string& from_id = ids[e.from];
    if (random && !e.weight) {
      throw ParseError(e.line, "edge from random state '" + from_id + "' needs a weight");
    }
    if (!random && e.weight) {
      throw ParseError(e.line, "edge from owned state '" + from_id + "' takes no weight");
    }
    if (random) {
      b.add_edge(e.from, *to, *e.weight);
    } else {
      b.add_edge(e.from, *to);
    }
  }
  for (const auto& [ln, id] : targets) {
    if (!b.find(id)) throw ParseError(ln, "target names undeclared state '" + id + "'");
    file.targets.push_back(id);
  }
  file.game = std::move(b).build();
  return file;
}

GameFile parse_game_string(const std::string& text) {
  std::istringstream is(text);
  return parse_game(is);
}

GameFile read_game_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return parse_game(in);
}

void write_game(std::ostream& out, const Game& g, const StateSet& targets) {
  for (StateIndex s = 0; s < g.size(); ++s) {
    out << "state " << g.id(s) << ' ' << owner_name(g.owner(s)) << '\n';
  }
  for (StateIndex s = 0; s < g.size(); ++s) {
    auto succ = g.successors(s);
    auto w = g.weights(s);
    for (std::size_t k = 0; k < succ.size(); ++k) {
      out << "edge " << g.id(s) << ' ' << g.id(succ[k]);
      if (g.owner(s) == Owner::Random) out << ' ' << format_rational(w[k]);
      out << '\n';
    }
  }
  for (StateIndex s = 0; s < targets.size(); ++s) {
    if (targets[s]) out << "target " << g.id(s) << '\n';
  }
}

}  // namespace ssg
