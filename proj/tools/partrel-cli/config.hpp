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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace partrel_cli {

enum class Command { Denumerant, RelationGen, RelationVerify, Identities, Conjecture, PlotData };
enum class Format { Json, Csv };

const char* command_name(Command c);
std::optional<Command> command_from_name(const std::string& name);

struct Grid {
  double lo = 0.0;
  double hi = 16.0;
  double step = 0.01;
  friend bool operator==(const Grid&, const Grid&) = default;
};

struct RunConfig {
  Command command = Command::Denumerant;
  std::vector<std::int64_t> d;
  std::optional<std::vector<std::int64_t>> delta;
  std::optional<std::int64_t> s;
  std::int64_t s_min = 0;
  std::int64_t s_max = 100;
  Grid grid;
  std::uint64_t seed = 1;
  Format format = Format::Json;
  // conjecture
  std::optional<std::size_t> m;
  std::size_t draws = 100;
  std::vector<std::string> x;
  std::vector<std::string> y;
  std::size_t k = 0;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

nlohmann::ordered_json to_json(const RunConfig& config);
/// Throws std::invalid_argument on a malformed document.
RunConfig config_from_json(const nlohmann::ordered_json& j);

/// Checks the cross-field requirements of a command; returns a message
/// describing the first problem, or nothing.
std::optional<std::string> validate(const RunConfig& config);

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitInvalidDelta = 2;
inline constexpr int kExitUsage = 64;

struct ParseResult {
  std::optional<RunConfig> config;  // empty when the process should exit
  int exit_code = kExitPass;
  bool print_config = false;
};

/// Command-line front end. Help goes to `out`; usage errors go to `err`
/// with exit code 64.
ParseResult parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace partrel_cli
