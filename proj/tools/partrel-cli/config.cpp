/*
Copyright 2026 The partrel Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "config.hpp"

#include <array>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <utility>

#include <CLI11.hpp>

namespace partrel_cli {

namespace {

constexpr std::array<std::pair<Command, const char*>, 6> kCommands{{
    {Command::Denumerant, "denumerant"},
    {Command::RelationGen, "relation-gen"},
    {Command::RelationVerify, "relation-verify"},
    {Command::Identities, "identities"},
    {Command::Conjecture, "conjecture"},
    {Command::PlotData, "plot-data"},
}};

template <typename T>
T field(const nlohmann::ordered_json& j, const char* key, T fallback) {
  if (!j.contains(key) || j.at(key).is_null()) return fallback;
  return j.at(key).get<T>();
}

}  // namespace

const char* command_name(Command c) {
  for (const auto& [cmd, name] : kCommands) {
    if (cmd == c) return name;
  }
  return "unknown";
}

std::optional<Command> command_from_name(const std::string& name) {
  for (const auto& [cmd, n] : kCommands) {
    if (name == n) return cmd;
  }
  return std::nullopt;
}

nlohmann::ordered_json to_json(const RunConfig& c) {
  nlohmann::ordered_json j;
  j["command"] = command_name(c.command);
  j["d"] = c.d;
  j["delta"] = c.delta ? nlohmann::ordered_json(*c.delta) : nlohmann::ordered_json(nullptr);
  j["s"] = c.s ? nlohmann::ordered_json(*c.s) : nlohmann::ordered_json(nullptr);
  j["s_range"] = {c.s_min, c.s_max};
  j["grid"] = {c.grid.lo, c.grid.hi, c.grid.step};
  j["seed"] = c.seed;
  j["format"] = c.format == Format::Json ? "json" : "csv";
  j["m"] = c.m ? nlohmann::ordered_json(*c.m) : nlohmann::ordered_json(nullptr);
  j["draws"] = c.draws;
  j["x"] = c.x;
  j["y"] = c.y;
  j["k"] = c.k;
  return j;
}

RunConfig config_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  RunConfig c;
  try {
    const auto cmd = command_from_name(j.at("command").get<std::string>());
    if (!cmd) throw std::invalid_argument("unknown command " + j.at("command").dump());
    c.command = *cmd;
    c.d = field(j, "d", std::vector<std::int64_t>{});
    if (j.contains("delta") && !j.at("delta").is_null()) {
      c.delta = j.at("delta").get<std::vector<std::int64_t>>();
    }
    if (j.contains("s") && !j.at("s").is_null()) c.s = j.at("s").get<std::int64_t>();
    const auto range = field(j, "s_range", std::vector<std::int64_t>{c.s_min, c.s_max});
    if (range.size() != 2) throw std::invalid_argument("s_range needs two entries");
    c.s_min = range[0];
    c.s_max = range[1];
    const auto grid = field(j, "grid", std::vector<double>{c.grid.lo, c.grid.hi, c.grid.step});
    if (grid.size() != 3) throw std::invalid_argument("grid needs three entries");
    c.grid = {grid[0], grid[1], grid[2]};
    c.seed = field(j, "seed", c.seed);
    const auto format = field(j, "format", std::string("json"));
    if (format != "json" && format != "csv") throw std::invalid_argument("format must be json or csv");
    c.format = format == "json" ? Format::Json : Format::Csv;
    if (j.contains("m") && !j.at("m").is_null()) c.m = j.at("m").get<std::size_t>();
    c.draws = field(j, "draws", c.draws);
    c.x = field(j, "x", std::vector<std::string>{});
    c.y = field(j, "y", std::vector<std::string>{});
    c.k = field(j, "k", c.k);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed config: ") + e.what());
  }
  return c;
}

std::optional<std::string> validate(const RunConfig& c) {
  if (c.command != Command::Conjecture && c.d.empty()) return "--d is required";
  if (c.delta && c.delta->size() != c.d.size()) return "--delta must have as many entries as --d";
  if (c.s_min < 0 || c.s_min > c.s_max) return "--s-range needs 0 <= lo <= hi";
  switch (c.command) {
    case Command::PlotData:
      if (!c.delta) return "plot-data requires --delta";
      if (!(c.grid.step > 0) || c.grid.lo > c.grid.hi) return "--grid needs lo <= hi and step > 0";
      if (c.format != Format::Csv) return "plot-data writes csv only";
      break;
    case Command::Denumerant:
      break;
    case Command::Conjecture:
      if (!c.x.empty() || !c.y.empty()) {
        if (c.x.size() != c.y.size()) return "--x and --y must have the same length";
        if (c.k >= c.x.size()) return "--k must be below the length of --x";
      } else if (c.m && (*c.m < 1 || *c.m > 8)) {
        return "--m must lie in 1..8";
      }
      if (c.format != Format::Json) return "conjecture writes json only";
      break;
    default:
      if (c.format != Format::Json) return std::string(command_name(c.command)) + " writes json only";
      break;
  }
  return std::nullopt;
}

ParseResult parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Restricted partition counts and their linear relations.", "partrel-cli"};
  app.set_version_flag("--version", "0.1.0");

  RunConfig config;
  std::string config_path;
  bool print_config = false;
  std::vector<std::int64_t> delta;
  std::vector<std::int64_t> s_range;
  std::vector<double> grid;
  std::int64_t s = 0;
  std::size_t m = 0;
  std::string format;

  app.add_option("--config", config_path, "Run the configuration stored in a JSON file");
  app.require_subcommand(0, 1);

  struct Sub {
    Command command;
    const char* help;
  };
  const std::array<Sub, 6> subs{{
      {Command::Denumerant, "Count solutions of s = d.x"},
      {Command::RelationGen, "Generate the relation vectors for (d, delta)"},
      {Command::RelationVerify, "Verify a relation at integers and as polynomials"},
      {Command::Identities, "Exact numeric and Bernoulli identities of a relation"},
      {Command::Conjecture, "Check the Bell-polynomial conjecture"},
      {Command::PlotData, "Continuous relation residual on a grid, as CSV"},
  }};
  for (const auto& sub : subs) {
    CLI::App* a = app.add_subcommand(command_name(sub.command), sub.help);
    a->add_flag("--print-config", print_config, "Print the parsed configuration as JSON and exit");
    a->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    if (sub.command != Command::Conjecture) {
      a->add_option("--d", config.d, "Generators, comma separated")->delimiter(',')->required();
      a->add_option("--delta", delta, "Multipliers, comma separated")->delimiter(',');
    }
    switch (sub.command) {
      case Command::Denumerant:
        a->add_option("--s", s, "Single value of s");
        a->add_option("--s-range", s_range, "lo,hi")->delimiter(',')->expected(2);
        break;
      case Command::RelationVerify:
        a->add_option("--s-range", s_range, "lo,hi (default 0,100)")->delimiter(',')->expected(2);
        break;
      case Command::PlotData:
        a->add_option("--grid", grid, "lo,hi,step (default 0,16,0.01)")
            ->delimiter(',')
            ->expected(3);
        break;
      case Command::Conjecture:
        a->add_option("--m", m, "Number of generators; default runs 2..5");
        a->add_option("--draws", config.draws, "Random draws per m");
        a->add_option("--seed", config.seed, "Random seed");
        a->add_option("--x", config.x, "Explicit x, comma separated rationals")->delimiter(',');
        a->add_option("--y", config.y, "Explicit y, comma separated rationals")->delimiter(',');
        a->add_option("--k", config.k, "Index k for explicit x, y");
        break;
      default:
        break;
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    ParseResult r;
    r.exit_code = app.exit(e, out, err);
    return r;
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    ParseResult r;
    r.exit_code = kExitUsage;
    return r;
  }

  ParseResult result;
  result.print_config = print_config;
  const auto usage = [&](const std::string& message) {
    err << "partrel-cli: " << message << "\n" << "Run with --help for more information.\n";
    result.exit_code = kExitUsage;
    return result;
  };

  if (!config_path.empty()) {
    if (!app.get_subcommands().empty()) return usage("--config cannot be combined with a command");
    std::ifstream in(config_path);
    if (!in) return usage("cannot read " + config_path);
    try {
      config = config_from_json(nlohmann::ordered_json::parse(in));
    } catch (const std::exception& e) {
      return usage(e.what());
    }
  } else {
    if (app.get_subcommands().empty()) return usage("a command is required");
    const CLI::App* chosen = app.get_subcommands().front();
    config.command = *command_from_name(chosen->get_name());
    const auto given = [chosen](const char* name) {
      const CLI::Option* opt = chosen->get_option_no_throw(name);
      return opt != nullptr && opt->count() > 0;
    };
    if (given("--delta")) config.delta = delta;
    if (given("--s")) config.s = s;
    if (given("--s-range")) {
      config.s_min = s_range[0];
      config.s_max = s_range[1];
    }
    if (given("--grid")) config.grid = {grid[0], grid[1], grid[2]};
    if (given("--m")) config.m = m;
    if (config.command == Command::PlotData) config.format = Format::Csv;
    if (!format.empty()) config.format = format == "json" ? Format::Json : Format::Csv;
  }

  if (auto problem = validate(config)) return usage(*problem);
  result.config = std::move(config);
  return result;
}

}  // namespace partrel_cli
