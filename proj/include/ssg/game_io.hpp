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

#ifndef SSG_GAME_IO_HPP_
#define SSG_GAME_IO_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "ssg/game.hpp"

namespace ssg {

// Parsed game file. The game is not validated; call validate() on it.
struct GameFile {
  Game game;
  std::vector<std::string> targets;
  // 1-based declaration line per state, for diagnostics.
  std::vector<std::size_t> state_lines;
};

// Line format:
//   state <id> max|min|rand
//   edge <src> <dst>            (owned source)
//   edge <src> <dst> <p/q>      (random source)
//   target <id>
// '#' starts a comment. Throws ParseError.
GameFile parse_game(std::istream& in);
GameFile parse_game_string(const std::string& text);
GameFile read_game_file(const std::string& path);

void write_game(std::ostream& out, const Game& g, const StateSet& targets);

}  // namespace ssg

#endif  // SSG_GAME_IO_HPP_
