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

#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "ssg/errors.hpp"
#include "ssg/gallery.hpp"
#include "ssg/game_io.hpp"
#include "ssg/objective.hpp"
#include "ssg/qualitative.hpp"
#include "ssg/simulate.hpp"
#include "ssg/strategy.hpp"
#include "ssg/transforms.hpp"
#include "ssg/valuation.hpp"

namespace ssg::cli {
namespace {

// One output item: `line` for the lines format, `fields` for the others.
struct Record {
  std::string line;
  std::vector<std::pair<std::string, std::string>> fields;
};

void emit(std::ostream& out, const std::string& format, const std::vector<Record>& rows) {
  if (format == "lines") {
    for (const auto& r : rows) out << r.line << '\n';
    return;
  }
  if (format == "json-lines") {
    for (const auto& r : rows) {
      nlohmann::ordered_json j;
      for (const auto& [k, v] : r.fields) j[k] = v;
      out << j.dump() << '\n';
    }
    return;
  }
  // Table: one header per run of records with the same keys.
  std::size_t start = 0;
  while (start < rows.size()) {
    std::size_t end = start;
    auto same_keys = [&](const Record& a, const Record& b) {
      if (a.fields.size() != b.fields.size()) return false;
      for (std::size_t k = 0; k < a.fields.size(); ++k) {
        if (a.fields[k].first != b.fields[k].first) return false;
      }
      return true;
    };
    while (end < rows.size() && same_keys(rows[start], rows[end])) ++end;
    const auto& head = rows[start].fields;
    std::vector<std::size_t> width(head.size());
    for (std::size_t c = 0; c < head.size(); ++c) width[c] = head[c].first.size();
    for (std::size_t r = start; r < end; ++r) {
      for (std::size_t c = 0; c < head.size(); ++c) {
        width[c] = std::max(width[c], rows[r].fields[c].second.size());
      }
    }
    auto print_row = [&](auto cell) {
      std::string line;
      for (std::size_t c = 0; c < head.size(); ++c) {
        std::string text = cell(c);
        if (c + 1 < head.size()) text.resize(width[c] + 2, ' ');
        line += text;
      }
      out << line << '\n';
    };
    print_row([&](std::size_t c) { return head[c].first; });
    for (std::size_t r = start; r < end; ++r) {
      print_row([&](std::size_t c) { return rows[r].fields[c].second; });
    }
    start = end;
  }
}

GameFile load(const std::string& path, bool require) {
  GameFile f = path == "-" ? parse_game(std::cin) : read_game_file(path);
  if (require) require_valid(f.game);
  return f;
}

std::string join(const std::vector<std::string>& items) {
  std::string s;
  for (const auto& it : items) s += (s.empty() ? "" : ",") + it;
  return s;
}

struct GameArgs {
  std::string path;
  std::string objective = "reach";
  std::string target;
  std::string format = "lines";
};

void add_game_args(CLI::App* cmd, GameArgs& a, bool with_objective) {
  cmd->add_option("game", a.path, "Game file, or - for standard input")->required();
  if (with_objective) {
    cmd->add_option("--objective", a.objective, "reach|safety|buchi|cobuchi|reachplus|reach<=N");
    cmd->add_option("--target", a.target, "Comma-separated target ids (default: file targets)");
  }
  cmd->add_option("--format", a.format, "Output format")
      ->check(CLI::IsMember({"table", "lines", "json-lines"}));
}

// Loads the game and binds the objective to it.
struct Setup {
  GameFile file;
  Objective objective;
  StateSet target;
};

Setup setup(const GameArgs& a) {
  Setup s{load(a.path, true), {}, {}};
  const std::string targets = a.target.empty() ? join(s.file.targets) : a.target;
  s.objective = parse_objective(a.objective, targets);
  s.target = BoundObjective(s.file.game, s.objective).target();
  return s;
}

StateIndex state_or_first(const Game& g, const std::string& id) {
  return id.empty() ? 0 : g.index(id);
}

void write_to(const std::string& path, std::ostream& out,
              const std::function<void(std::ostream&)>& body) {
  if (path.empty() || path == "-") {
    body(out);
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::invalid_argument("cannot write '" + path + "'");
  body(f);
}

std::string index_text(int k) { return k == kNoIndex ? "bot" : std::to_string(k); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Solver for turn-based stochastic games", "ssg"};
  app.require_subcommand(1);

  GameArgs ga;

  auto* validate_cmd = app.add_subcommand("validate", "Check a game file");
  add_game_args(validate_cmd, ga, false);

  std::string mode = "exact";
  double tol = 1e-9;
  auto* solve_cmd = app.add_subcommand("solve", "Print the value of every state");
  add_game_args(solve_cmd, ga, true);
  solve_cmd->add_option("--mode", mode)->check(CLI::IsMember({"exact", "iterate"}));
  solve_cmd->add_option("--tol", tol, "Gap bound for --mode iterate");

  bool almost_sure = false;
  bool positive = false;
  auto* win_cmd = app.add_subcommand("winning-set", "Qualitative winning partition");
  add_game_args(win_cmd, ga, true);
  auto* as_flag = win_cmd->add_flag("--almost-sure", almost_sure, "Probability 1 (default)");
  win_cmd->add_flag("--positive", positive, "Positive probability (reach only)")->excludes(as_flag);

  std::string player = "max";
  std::string out_path;
  auto* strat_cmd = app.add_subcommand("strategy", "Synthesize an MD strategy");
  add_game_args(strat_cmd, ga, true);
  strat_cmd->add_option("--player", player)->check(CLI::IsMember({"max", "min"}));
  strat_cmd->add_option("--out", out_path, "Strategy file (default: standard output)");

  bool do_rvi = false;
  bool do_classify = false;
  auto* trans_cmd = app.add_subcommand("transform", "Value-preserving game transforms");
  add_game_args(trans_cmd, ga, true);
  auto* rvi_flag = trans_cmd->add_flag("--rvi", do_rvi, "Drop Min value-increasing edges");
  trans_cmd->add_flag("--classify", do_classify, "Print the class of every edge")->excludes(rvi_flag);
  trans_cmd->add_option("--out", out_path, "Output game file (default: standard output)");

  SimConfig sim;
  std::string state_id;
  std::string sigma_path;
  std::string pi_path;
  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo estimate under two strategies");
  add_game_args(sim_cmd, ga, true);
  sim_cmd->add_option("--state", state_id, "Initial state (default: first declared)");
  sim_cmd->add_option("--samples", sim.samples);
  sim_cmd->add_option("--horizon", sim.horizon);
  sim_cmd->add_option("--seed", sim.seed);
  sim_cmd->add_option("--window", sim.buchi_window, "Trailing window for Buchi scoring");
  sim_cmd->add_option("--sigma", sigma_path, "Max strategy file (default: first successor)");
  sim_cmd->add_option("--pi", pi_path, "Min strategy file (default: first successor)");

  std::string gallery_name;
  std::size_t param = 0;
  std::string prob = "3/5";
  std::string mark = "target";
  std::string emit_path;
  auto* gal_cmd = app.add_subcommand("gallery", "Write an example game");
  gal_cmd->add_option("name", gallery_name)
      ->required()
      ->check(CLI::IsMember({"fig2", "ladder", "ruin", "fig2u"}));
  gal_cmd->add_option("--param", param, "Depth for fig2/fig2u, k for ladder, cap for ruin");
  gal_cmd->add_option("--prob", prob, "Win probability for ruin");
  gal_cmd->add_option("--mark", mark, "Set written as targets")
      ->check(CLI::IsMember({"target", "buchi"}));
  gal_cmd->add_option("--emit", emit_path, "Output file (default: standard output)");

  std::string threshold;
  bool strict = false;
  auto* dec_cmd = app.add_subcommand("decide", "Threshold reachability decision");
  add_game_args(dec_cmd, ga, true);
  dec_cmd->add_option("--threshold", threshold, "Threshold p/q in [0, 1]")->required();
  dec_cmd->add_flag("--strict", strict, "Use > instead of >=");
  dec_cmd->add_option("--state", state_id, "Initial state (default: first declared)");
  dec_cmd->add_option("--out", out_path, "Write the winning strategy here");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  try {
    if (validate_cmd->parsed()) {
      const GameFile f = load(ga.path, false);
      const auto violations = validate(f.game);
      for (const auto& v : violations) {
        err << "line " << f.state_lines[v.state] << ": " << violation_name(v.kind) << ": "
            << v.message << '\n';
      }
      if (!violations.empty()) return kExitInput;
      emit(out, ga.format,
           {{"valid " + std::to_string(f.game.size()) + " states " +
                 std::to_string(f.game.edge_count()) + " edges",
             {{"valid", "true"},
              {"states", std::to_string(f.game.size())},
              {"edges", std::to_string(f.game.edge_count())}}}});
      return kExitOk;
    }

    if (solve_cmd->parsed()) {
      const Setup s = setup(ga);
      const Game& g = s.file.game;
      const SolveMode m = mode == "exact" ? SolveMode::exact() : SolveMode::iterate(tol);
      const ValueVector v = value_of(g, s.objective.kind, s.target, s.objective.horizon, m);
      std::vector<Record> rows;
      for (StateIndex st = 0; st < g.size(); ++st) {
        const std::string val = v.precision == Precision::Exact ? format_rational(v.at(st))
                                                                : format_double(v.as_double(st));
        Record r{g.id(st) + " " + val, {{"state", g.id(st)}, {"value", val}}};
        if (v.precision == Precision::Approx) {
          r.fields.emplace_back("error_bound", format_double(v.error_bound));
        }
        rows.push_back(std::move(r));
      }
      emit(out, ga.format, rows);
      return kExitOk;
    }

    if (win_cmd->parsed()) {
      const Setup s = setup(ga);
      const Game& g = s.file.game;
      WinningPartition part;
      if (positive) {
        if (s.objective.kind != ObjectiveKind::Reach) {
          throw PreconditionError("--positive supports the reach objective only");
        }
        part.max_wins = positive_reach_set(g, s.target);
        part.min_wins.resize(g.size());
        part.index.assign(g.size(), kNoIndex);
        for (StateIndex st = 0; st < g.size(); ++st) {
          part.min_wins[st] = !part.max_wins[st];
          if (part.min_wins[st]) part.index[st] = 0;
        }
        part.rounds = 1;
      } else {
        switch (s.objective.kind) {
          case ObjectiveKind::Reach: part = almost_sure_reach(g, s.target); break;
          case ObjectiveKind::Buchi: part = almost_sure_buchi(g, s.target); break;
          case ObjectiveKind::Safety: part = almost_sure_safety(g, s.target); break;
          default:
            throw PreconditionError("winning-set supports reach, safety and buchi");
        }
      }
      std::vector<Record> rows;
      for (StateIndex st = 0; st < g.size(); ++st) {
        const std::string who = part.max_wins[st] ? "max" : "min";
        const std::string idx = index_text(part.index[st]);
        rows.push_back({"state " + g.id(st) + " " + who + " index " + idx,
                        {{"state", g.id(st)}, {"winner", who}, {"index", idx}}});
      }
      rows.push_back({"rounds " + std::to_string(part.rounds),
                      {{"rounds", std::to_string(part.rounds)}}});
      emit(out, ga.format, rows);
      return kExitOk;
    }

    if (strat_cmd->parsed()) {
      const Setup s = setup(ga);
      const Game& g = s.file.game;
      const bool max = player == "max";
      MDStrategy m;
      switch (s.objective.kind) {
        case ObjectiveKind::Reach:
          m = max ? optimal_max_md_no_decrease(g, s.target) : optimal_min_md(g, s.target);
          break;
        case ObjectiveKind::ReachPlus:
          m = max ? reachplus_max_md(g, s.target) : reachplus_min_md(g, s.target);
          break;
        case ObjectiveKind::Buchi: {
          auto pair = buchi_md_pair(g, s.target);
          m = max ? pair.max : pair.min;
          break;
        }
        default:
          throw PreconditionError("strategy supports reach, reachplus and buchi");
      }
      write_to(out_path, out, [&](std::ostream& o) { write_md(o, g, m); });
      return kExitOk;
    }

    if (trans_cmd->parsed()) {
      const Setup s = setup(ga);
      const Game& g = s.file.game;
      if (s.objective.kind != ObjectiveKind::Reach) {
        throw PreconditionError("transforms use the reach objective");
      }
      if (do_classify) {
        std::vector<Record> rows;
        for (const auto& e : classify_transitions(g, s.target)) {
          const std::string cls = edge_class_name(e.cls);
          rows.push_back({"edge " + g.id(e.from) + " " + g.id(e.to) + " " + cls,
                          {{"from", g.id(e.from)}, {"to", g.id(e.to)}, {"class", cls}}});
        }
        emit(out, ga.format, rows);
        return kExitOk;
      }
      if (!do_rvi) throw PreconditionError("transform needs --rvi or --classify");
      const Game t = rvi(g, s.target);
      write_to(out_path, out, [&](std::ostream& o) { write_game(o, t, s.target); });
      return kExitOk;
    }

    if (sim_cmd->parsed()) {
      const Setup s = setup(ga);
      const Game& g = s.file.game;
      auto read = [&](const std::string& path, Player who) {
        if (path.empty()) return to_transducer(g, first_choice(g, who));
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open '" + path + "'");
        return read_strategy(in, g);
      };
      const TransducerStrategy sigma = read(sigma_path, Player::Max);
      const TransducerStrategy pi = read(pi_path, Player::Min);
      const BoundObjective obj(g, s.objective);
      const Estimate e = sample_plays(g, state_or_first(g, state_id), sigma, pi, obj, sim);
      const std::string mean = format_double(e.mean);
      const std::string half = format_double(e.half_width_95);
      const std::string dec = format_double(e.decided_fraction);
      if (ga.format == "lines") {
        out << "mean " << mean << "\nhalf-width " << half << "\ndecided-fraction " << dec << '\n';
      } else {
        emit(out, ga.format, {{"", {{"mean", mean}, {"half_width", half}, {"decided_fraction", dec}}}});
      }
      return kExitOk;
    }

    if (gal_cmd->parsed()) {
      std::size_t p = param;
      if (p == 0) p = gallery_name == "ladder" ? 3 : gallery_name == "ruin" ? 30 : 10;
      const Example ex = gallery_game(gallery_name, p, parse_rational(prob));
      const StateSet& marked = mark == "target" ? ex.target : ex.buchi;
      write_to(emit_path, out, [&](std::ostream& o) { write_game(o, ex.game, marked); });
      return kExitOk;
    }

    if (dec_cmd->parsed()) {
      const Setup s = setup(ga);
      const Game& g = s.file.game;
      if (s.objective.kind != ObjectiveKind::Reach) {
        throw PreconditionError("decide supports the reach objective only");
      }
      const Rational c = parse_rational(threshold);
      const ThresholdVerdict v =
          threshold_decide(g, s.target, state_or_first(g, state_id), c, strict);
      const std::string who = winner_name(v.winner);
      const std::string val = format_rational(v.value);
      if (ga.format == "lines") {
        out << "winner " << who << "\nreason " << v.reason << "\nvalue " << val << '\n';
      } else {
        emit(out, ga.format, {{"", {{"winner", who}, {"reason", v.reason}, {"value", val}}}});
      }
      if (v.strategy && !out_path.empty()) {
        write_to(out_path, out, [&](std::ostream& o) { write_md(o, g, *v.strategy); });
      }
      return v.winner == Winner::OutOfScope ? kExitOutOfScope : kExitOk;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InvalidGame& e) {
    err << "error: invalid game: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const DivergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace ssg::cli
