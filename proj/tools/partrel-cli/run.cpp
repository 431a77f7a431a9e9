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

#include "run.hpp"

#include <cstdio>
#include <memory>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "partrel/partrel.h"

namespace partrel_cli {

namespace {

using json = nlohmann::ordered_json;

// Carries a library status out of the helpers below.
struct LibraryError : std::runtime_error {
  LibraryError(pr_status s, const std::string& what) : std::runtime_error(what), status(s) {}
  pr_status status;
};

void check(pr_status status) {
  if (status != PR_OK) {
    throw LibraryError(status, std::string(pr_status_name(status)) + ": " + pr_last_error_message());
  }
}

struct ReportDeleter {
  void operator()(pr_report* r) const { pr_report_free(r); }
};
struct RelationDeleter {
  void operator()(pr_relation* r) const { pr_relation_free(r); }
};
struct ProfileDeleter {
  void operator()(pr_profile* p) const { pr_profile_free(p); }
};
struct StringDeleter {
  void operator()(char* s) const { pr_string_free(s); }
};

using Report = std::unique_ptr<pr_report, ReportDeleter>;
using Relation = std::unique_ptr<pr_relation, RelationDeleter>;
using Profile = std::unique_ptr<pr_profile, ProfileDeleter>;
using OwnedString = std::unique_ptr<char, StringDeleter>;

std::string take(char* raw) {
  OwnedString owned(raw);
  return owned.get();
}

std::vector<std::string> entry_values(const pr_report* r, std::size_t index) {
  std::size_t length = 0;
  check(pr_report_entry_length(r, index, &length));
  std::vector<std::string> out(length);
  for (std::size_t k = 0; k < length; ++k) {
    const char* v = nullptr;
    check(pr_report_entry_value(r, index, k, &v));
    out[k] = v;
  }
  return out;
}

std::optional<std::vector<std::string>> find_entry(const pr_report* r, const char* name) {
  std::size_t index = 0;
  if (pr_report_find(r, name, &index) != PR_OK) return std::nullopt;
  return entry_values(r, index);
}

json violations_of(const pr_report* r) {
  json out = json::array();
  for (std::size_t i = 0; i < pr_report_violation_count(r); ++i) {
    const char* key = nullptr;
    const char* detail = nullptr;
    check(pr_report_violation(r, i, &key, &detail));
    out.push_back({{"key", key}, {"detail", detail}});
  }
  return out;
}

std::vector<std::int64_t> effective_delta(const RunConfig& c) {
  return c.delta ? *c.delta : std::vector<std::int64_t>(c.d.size(), 1);
}

json input_of(const RunConfig& c) {
  json in;
  in["d"] = c.d;
  if (c.command == Command::Denumerant || c.command == Command::Conjecture) {
    in["delta"] = nullptr;
  } else {
    in["delta"] = effective_delta(c);
  }
  return in;
}

json envelope(const RunConfig& c, json result, const char* status) {
  json j;
  j["command"] = command_name(c.command);
  j["input"] = input_of(c);
  j["result"] = std::move(result);
  j["status"] = status;
  return j;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// Validates delta; on violations writes the report and returns false.
bool admissible(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto delta = effective_delta(c);
  pr_report* raw = nullptr;
  check(pr_validate_delta(c.d.data(), delta.data(), c.d.size(), &raw));
  Report report(raw);
  if (pr_report_passed(report.get())) return true;
  json violations = violations_of(report.get());
  for (const auto& v : violations) {
    err << "partrel-cli: invalid delta: " << v["detail"].get<std::string>() << "\n";
  }
  if (c.format == Format::Json) {
    emit(out, envelope(c, {{"violations", violations}}, "invalid_delta"));
  }
  return false;
}

Relation make_relation(const RunConfig& c) {
  const auto delta = effective_delta(c);
  pr_relation* raw = nullptr;
  check(pr_relation_create(c.d.data(), delta.data(), c.d.size(), &raw));
  return Relation(raw);
}

int run_denumerant(const RunConfig& c, std::ostream& out) {
  const auto count = [&](std::int64_t s) {
    char* raw = nullptr;
    check(pr_denumerant(c.d.data(), c.d.size(), s, &raw));
    return take(raw);
  };
  if (c.format == Format::Csv) {
    out << "s,count\n";
    if (c.s) {
      out << *c.s << "," << count(*c.s) << "\n";
    } else {
      for (std::int64_t s = c.s_min; s <= c.s_max; ++s) out << s << "," << count(s) << "\n";
    }
    return kExitPass;
  }
  json result;
  if (c.s) {
    result["s"] = *c.s;
    result["count"] = count(*c.s);
  } else {
    json values = json::array();
    for (std::int64_t s = c.s_min; s <= c.s_max; ++s) values.push_back({{"s", s}, {"count", count(s)}});
    result["values"] = std::move(values);
  }
  emit(out, envelope(c, std::move(result), "pass"));
  return kExitPass;
}

int run_relation_gen(const RunConfig& c, std::ostream& out) {
  const Relation relation = make_relation(c);
  const std::size_t m = pr_relation_size(relation.get());
  json terms = json::array();
  std::vector<std::int64_t> generators(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::int64_t multiplier = 0;
    int sign = 0;
    std::int64_t shift = 0;
    check(pr_relation_term(relation.get(), i, generators.data(), &multiplier, &sign, &shift));
    terms.push_back({{"index", i + 1},
                     {"generators", generators},
                     {"s_multiplier", multiplier},
                     {"sign", sign},
                     {"shift", shift}});
  }
  emit(out, envelope(c, {{"terms", terms}}, "pass"));
  return kExitPass;
}

int run_relation_verify(const RunConfig& c, std::ostream& out) {
  const Relation relation = make_relation(c);
  const std::size_t m = pr_relation_size(relation.get());
  bool passed = true;
  json result;

  pr_report* raw = nullptr;
  check(pr_relation_verify_integer(relation.get(), c.s_min, c.s_max, &raw));
  Report integer(raw);
  passed = passed && pr_report_passed(integer.get());
  result["integer"] = {{"s_range", {c.s_min, c.s_max}},
                       {"passed", pr_report_passed(integer.get()) != 0},
                       {"violations", violations_of(integer.get())}};

  check(pr_relation_verify_poly(relation.get(), &raw));
  Report poly(raw);
  passed = passed && pr_report_passed(poly.get());
  json terms = json::array();
  for (std::size_t i = 1; i <= m; ++i) {
    terms.push_back(*find_entry(poly.get(), ("term_" + std::to_string(i)).c_str()));
  }
  result["polynomial"] = {{"passed", pr_report_passed(poly.get()) != 0},
                          {"base", *find_entry(poly.get(), "base")},
                          {"terms", terms},
                          {"residual", *find_entry(poly.get(), "residual")}};

  check(pr_relation_verify_bernoulli(relation.get(), &raw));
  Report bernoulli(raw);
  passed = passed && pr_report_passed(bernoulli.get());
  result["bernoulli"] = {{"passed", pr_report_passed(bernoulli.get()) != 0},
                         {"values", *find_entry(bernoulli.get(), "bernoulli")}};

  emit(out, envelope(c, std::move(result), passed ? "pass" : "fail"));
  return passed ? kExitPass : kExitFailed;
}

int run_identities(const RunConfig& c, std::ostream& out) {
  const Relation relation = make_relation(c);
  pr_report* raw = nullptr;
  check(pr_relation_identities(relation.get(), &raw));
  Report ids(raw);
  check(pr_relation_verify_bernoulli(relation.get(), &raw));
  Report bernoulli(raw);

  json result;
  for (std::size_t i = 0; i < pr_report_entry_count(ids.get()); ++i) {
    const char* name = nullptr;
    check(pr_report_entry_name(ids.get(), i, &name));
    const auto values = entry_values(ids.get(), i);
    const std::string key = name;
    const bool is_list = key.ends_with("_terms") || key.ends_with("_summands");
    result[key] = is_list ? json(values) : json(values.front());
  }
  result["bernoulli"] = *find_entry(bernoulli.get(), "bernoulli");
  const bool passed = pr_report_passed(ids.get()) && pr_report_passed(bernoulli.get());
  emit(out, envelope(c, std::move(result), passed ? "pass" : "fail"));
  return passed ? kExitPass : kExitFailed;
}

int run_conjecture(const RunConfig& c, std::ostream& out) {
  if (!c.x.empty()) {
    std::vector<const char*> x;
    std::vector<const char*> y;
    for (const auto& v : c.x) x.push_back(v.c_str());
    for (const auto& v : c.y) y.push_back(v.c_str());
    char* raw = nullptr;
    check(pr_check_bell_conjecture(x.data(), y.data(), x.size(), c.k, &raw));
    const std::string value = take(raw);
    const bool zero = value == "0";
    json result{{"x", c.x}, {"y", c.y}, {"k", c.k}, {"value", value}};
    emit(out, envelope(c, std::move(result), zero ? "pass" : "fail"));
    return zero ? kExitPass : kExitFailed;
  }

  std::vector<std::size_t> sizes;
  if (c.m) {
    sizes.push_back(*c.m);
  } else {
    sizes = {2, 3, 4, 5};
  }
  bool passed = true;
  json suites = json::array();
  for (const std::size_t m : sizes) {
    pr_report* raw = nullptr;
    check(pr_conjecture_suite(m, c.draws, c.seed, &raw));
    Report suite(raw);
    passed = passed && pr_report_passed(suite.get());
    suites.push_back({{"m", m},
                      {"draws", find_entry(suite.get(), "draws")->front()},
                      {"evaluations", find_entry(suite.get(), "evaluations")->front()},
                      {"rejected_degenerate", find_entry(suite.get(), "rejected_degenerate")->front()},
                      {"counterexamples", violations_of(suite.get())}});
  }
  emit(out, envelope(c, {{"seed", c.seed}, {"suites", suites}}, passed ? "pass" : "fail"));
  return passed ? kExitPass : kExitFailed;
}

int run_plot_data(const RunConfig& c, std::ostream& out) {
  const Relation relation = make_relation(c);
  pr_profile* raw = nullptr;
  check(pr_relation_profile(relation.get(), c.grid.lo, c.grid.hi, c.grid.step, &raw));
  Profile profile(raw);
  out << "s,w,is_integer\n";
  char line[96];
  for (std::size_t i = 0; i < pr_profile_size(profile.get()); ++i) {
    double s = 0;
    double w = 0;
    int is_integer = 0;
    check(pr_profile_sample(profile.get(), i, &s, &w, &is_integer));
    std::snprintf(line, sizeof line, "%.12g,%.12g,%d\n", s, w, is_integer);
    out << line;
  }
  return kExitPass;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::Denumerant:
        return run_denumerant(config, out);
      case Command::Conjecture:
        return run_conjecture(config, out);
      default:
        break;
    }
    if (!admissible(config, out, err)) return kExitInvalidDelta;
    switch (config.command) {
      case Command::RelationGen:
        return run_relation_gen(config, out);
      case Command::RelationVerify:
        return run_relation_verify(config, out);
      case Command::Identities:
        return run_identities(config, out);
      case Command::PlotData:
        return run_plot_data(config, out);
      default:
        break;
    }
  } catch (const LibraryError& e) {
    err << "partrel-cli: " << e.what() << "\n";
    return e.status == PR_ERR_INVALID_DELTA ? kExitInvalidDelta : kExitUsage;
  }
  err << "partrel-cli: unhandled command\n";
  return kExitUsage;
}

}  // namespace partrel_cli
