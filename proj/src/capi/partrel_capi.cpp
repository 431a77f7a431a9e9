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

#include "partrel/partrel.h"

#include <cstdlib>
#include <cstring>
#include <algorithm>
#include <exception>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "partrel/bernoulli_bell.hpp"
#include "partrel/denumerant.hpp"
#include "partrel/error.hpp"
#include "partrel/quasipoly.hpp"
#include "partrel/relations.hpp"

struct pr_relation {
  partrel::Relation relation;
};

struct pr_report {
  bool passed = true;
  std::vector<std::pair<std::string, std::string>> violations;
  std::vector<std::pair<std::string, std::vector<std::string>>> entries;

  void add(std::string name, std::vector<std::string> values) {
    entries.emplace_back(std::move(name), std::move(values));
  }
  void add(std::string name, const partrel::Rational& value) {
    add(std::move(name), std::vector<std::string>{partrel::to_string(value)});
  }
  void add(std::string name, const partrel::RationalPolynomial& p) {
    std::vector<std::string> coeffs;
    for (const auto& c : p.coefficients()) {
      coeffs.push_back(partrel::to_string(c));
    }
    add(std::move(name), std::move(coeffs));
  }
};

struct pr_profile {
  std::vector<partrel::ProfileSample> samples;
};

namespace {

thread_local std::string last_error;

pr_status fail(pr_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

pr_status map_code(partrel::ErrorCode code) {
  switch (code) {
    case partrel::ErrorCode::InvalidArgument:
      return PR_ERR_INVALID_ARGUMENT;
    case partrel::ErrorCode::InvalidDelta:
      return PR_ERR_INVALID_DELTA;
    case partrel::ErrorCode::DegenerateInput:
      return PR_ERR_DEGENERATE_INPUT;
    case partrel::ErrorCode::DivisionUndefined:
      return PR_ERR_DIVISION_UNDEFINED;
  }
  return PR_ERR_INTERNAL;
}

// Runs body, translating exceptions into status codes.
template <typename Body>
pr_status guarded(Body&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const partrel::Error& e) {
    return fail(map_code(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(PR_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PR_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(PR_ERR_INTERNAL, "unknown exception");
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) {
    throw std::bad_alloc();
  }
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<std::int64_t> copy_ints(const int64_t* values, size_t m) {
  if (values == nullptr && m > 0) {
    throw partrel::Error(partrel::ErrorCode::InvalidArgument, "null array");
  }
  return std::vector<std::int64_t>(values, values + m);
}

partrel::GeneratorVector generators(const int64_t* d, size_t m) {
  return partrel::GeneratorVector(copy_ints(d, m));
}

template <typename T>
pr_status require(const T* p, const char* what) {
  return p == nullptr ? fail(PR_ERR_INVALID_ARGUMENT, std::string("null ") + what) : PR_OK;
}

template <typename T>
std::vector<std::string> strings_of(const std::vector<T>& values) {
  std::vector<std::string> out;
  for (const auto& v : values) {
    out.push_back(partrel::to_string(v));
  }
  return out;
}

}  // namespace

extern "C" {

const char* pr_version(void) { return "0.1.0"; }

const char* pr_status_name(pr_status status) {
  switch (status) {
    case PR_OK:
      return "ok";
    case PR_ERR_INVALID_ARGUMENT:
      return "invalid_argument";
    case PR_ERR_INVALID_DELTA:
      return "invalid_delta";
    case PR_ERR_DEGENERATE_INPUT:
      return "degenerate_input";
    case PR_ERR_DIVISION_UNDEFINED:
      return "division_undefined";
    case PR_ERR_INDEX_OUT_OF_RANGE:
      return "index_out_of_range";
    case PR_ERR_INTERNAL:
      return "internal";
  }
  return "unknown";
}

const char* pr_last_error_message(void) { return last_error.c_str(); }

void pr_string_free(char* str) { std::free(str); }

pr_status pr_denumerant(const int64_t* d, size_t m, int64_t s, char** count_out) {
  if (auto st = require(count_out, "output"); st != PR_OK) return st;
  return guarded([&] {
    *count_out = duplicate(partrel::to_string(partrel::denumerant(s, generators(d, m))));
    return PR_OK;
  });
}

pr_status pr_brute_force_count(const int64_t* d, size_t m, int64_t s, char** count_out) {
  if (auto st = require(count_out, "output"); st != PR_OK) return st;
  return guarded([&] {
    *count_out = duplicate(partrel::to_string(partrel::brute_force_count(s, generators(d, m))));
    return PR_OK;
  });
}

// ---- reports ---------------------------------------------------------------

int pr_report_passed(const pr_report* report) { return report != nullptr && report->passed; }

size_t pr_report_violation_count(const pr_report* report) {
  return report == nullptr ? 0 : report->violations.size();
}

pr_status pr_report_violation(const pr_report* report, size_t index, const char** key,
                              const char** detail) {
  if (auto st = require(report, "report"); st != PR_OK) return st;
  if (index >= report->violations.size()) {
    return fail(PR_ERR_INDEX_OUT_OF_RANGE, "violation index out of range");
  }
  if (key != nullptr) *key = report->violations[index].first.c_str();
  if (detail != nullptr) *detail = report->violations[index].second.c_str();
  return PR_OK;
}

size_t pr_report_entry_count(const pr_report* report) {
  return report == nullptr ? 0 : report->entries.size();
}

pr_status pr_report_entry_name(const pr_report* report, size_t index, const char** name) {
  if (auto st = require(report, "report"); st != PR_OK) return st;
  if (auto st = require(name, "output"); st != PR_OK) return st;
  if (index >= report->entries.size()) {
    return fail(PR_ERR_INDEX_OUT_OF_RANGE, "entry index out of range");
  }
  *name = report->entries[index].first.c_str();
  return PR_OK;
}

pr_status pr_report_entry_length(const pr_report* report, size_t index, size_t* length) {
  if (auto st = require(report, "report"); st != PR_OK) return st;
  if (auto st = require(length, "output"); st != PR_OK) return st;
  if (index >= report->entries.size()) {
    return fail(PR_ERR_INDEX_OUT_OF_RANGE, "entry index out of range");
  }
  *length = report->entries[index].second.size();
  return PR_OK;
}

pr_status pr_report_entry_value(const pr_report* report, size_t index, size_t k,
                                const char** value) {
  if (auto st = require(report, "report"); st != PR_OK) return st;
  if (auto st = require(value, "output"); st != PR_OK) return st;
  if (index >= report->entries.size() || k >= report->entries[index].second.size()) {
    return fail(PR_ERR_INDEX_OUT_OF_RANGE, "entry value index out of range");
  }
  *value = report->entries[index].second[k].c_str();
  return PR_OK;
}

pr_status pr_report_find(const pr_report* report, const char* name, size_t* index) {
  if (auto st = require(report, "report"); st != PR_OK) return st;
  if (auto st = require(name, "name"); st != PR_OK) return st;
  if (auto st = require(index, "output"); st != PR_OK) return st;
  for (size_t i = 0; i < report->entries.size(); ++i) {
    if (report->entries[i].first == name) {
      *index = i;
      return PR_OK;
    }
  }
  return fail(PR_ERR_INDEX_OUT_OF_RANGE, std::string("no entry named ") + name);
}

void pr_report_free(pr_report* report) { delete report; }

// ---- relations ---------------------------------------------------------------

pr_status pr_validate_delta(const int64_t* d, const int64_t* delta, size_t m, pr_report** out) {
  if (auto st = require(out, "output"); st != PR_OK) return st;
  return guarded([&] {
    const auto violations =
        partrel::validate_delta(generators(d, m), partrel::DeltaVector(copy_ints(delta, m)));
    auto report = std::make_unique<pr_report>();
    for (const auto& v : violations) {
      report->violations.emplace_back(
          v.rule == partrel::DeltaRule::Collinear ? "collinear" : "non_coprime", v.message());
    }
    report->passed = violations.empty();
    *out = report.release();
    return PR_OK;
  });
}

pr_status pr_relation_create(const int64_t* d, const int64_t* delta, size_t m,
                             pr_relation** out) {
  if (auto st = require(out, "output"); st != PR_OK) return st;
  return guarded([&] {
    *out = new pr_relation{
        partrel::generate_relation(generators(d, m), partrel::DeltaVector(copy_ints(delta, m)))};
    return PR_OK;
  });
}

void pr_relation_free(pr_relation* relation) { delete relation; }

size_t pr_relation_size(const pr_relation* relation) {
  return relation == nullptr ? 0 : relation->relation.size();
}

pr_status pr_relation_term(const pr_relation* relation, size_t i, int64_t* raw_out,
                           int64_t* s_multiplier, int* sign, int64_t* shift) {
  if (auto st = require(relation, "relation"); st != PR_OK) return st;
  if (i >= relation->relation.size()) {
    return fail(PR_ERR_INDEX_OUT_OF_RANGE, "term index out of range");
  }
  const auto& term = relation->relation.terms()[i];
  if (raw_out != nullptr) {
    const auto raw = term.raw_generators();
    std::copy(raw.begin(), raw.end(), raw_out);
  }
  if (s_multiplier != nullptr) *s_multiplier = term.s_multiplier();
  if (sign != nullptr) *sign = term.sign();
  if (shift != nullptr) *shift = term.shift();
  return PR_OK;
}

pr_status pr_relation_verify_integer(const pr_relation* relation, int64_t s_min, int64_t s_max,
                                     pr_report** out) {
  if (auto st = require(relation, "relation"); st != PR_OK) return st;
  if (auto st = require(out, "output"); st != PR_OK) return st;
  return guarded([&] {
    const auto result = partrel::verify_relation_integer(relation->relation, s_min, s_max);
    auto report = std::make_unique<pr_report>();
    for (const auto& v : result.violations) {
      report->violations.emplace_back(std::to_string(v.s), partrel::to_string(v.residual));
    }
    report->passed = result.passed();
    report->add("s_min", std::vector<std::string>{std::to_string(s_min)});
    report->add("s_max", std::vector<std::string>{std::to_string(s_max)});
    *out = report.release();
    return PR_OK;
  });
}

pr_status pr_relation_verify_poly(const pr_relation* relation, pr_report** out) {
  if (auto st = require(relation, "relation"); st != PR_OK) return st;
  if (auto st = require(out, "output"); st != PR_OK) return st;
  return guarded([&] {
    const auto result = partrel::verify_poly_relation(relation->relation);
    auto report = std::make_unique<pr_report>();
    report->add("base", result.base);
    for (size_t i = 0; i < result.terms.size(); ++i) {
      report->add("term_" + std::to_string(i + 1), result.terms[i]);
    }
    report->add("residual", result.residual);
    report->passed = result.passed();
    if (!result.passed()) {
      report->violations.emplace_back("residual", result.residual.to_string());
    }
    *out = report.release();
    return PR_OK;
  });
}

pr_status pr_relation_verify_bernoulli(const pr_relation* relation, pr_report** out) {
  if (auto st = require(relation, "relation"); st != PR_OK) return st;
  if (auto st = require(out, "output"); st != PR_OK) return st;
  return guarded([&] {
    const auto values = partrel::verify_bernoulli_relations(relation->relation);
    auto report = std::make_unique<pr_report>();
    for (size_t k = 0; k < values.size(); ++k) {
      if (values[k] != 0) {
        report->violations.emplace_back("k=" + std::to_string(k), partrel::to_string(values[k]));
      }
    }
    report->passed = report->violations.empty();
    report->add("bernoulli", strings_of(values));
    *out = report.release();
    return PR_OK;
  });
}

pr_status pr_relation_identities(const pr_relation* relation, pr_report** out) {
  if (auto st = require(relation, "relation"); st != PR_OK) return st;
  if (auto st = require(out, "output"); st != PR_OK) return st;
  return guarded([&] {
    const auto ids = partrel::numeric_identities(relation->relation);
    auto report = std::make_unique<pr_report>();
    auto check = [&](const char* name, const std::optional<partrel::Rational>& value) {
      if (!value) return;
      report->add(name, *value);
      if (*value != 1) {
        report->violations.emplace_back(name, partrel::to_string(*value));
      }
    };
    check("sigma_sum_ratio", ids.sigma_sum_ratio);
    check("lead_term", ids.lead_term);
    check("second_term", ids.second_term);
    check("third_term", ids.third_term);
    report->add("sigma1_terms", strings_of(ids.sigma1_terms));
    report->add("sigma2_terms", strings_of(ids.sigma2_terms));
    report->add("lead_summands", strings_of(ids.lead_summands));
    if (ids.second_prefactor) {
      report->add("second_prefactor", *ids.second_prefactor);
      report->add("second_summands", strings_of(ids.second_summands));
    }
    if (ids.third_prefactor) {
      report->add("third_prefactor", *ids.third_prefactor);
      report->add("third_summands", strings_of(ids.third_summands));
    }
    report->passed = ids.all_one();
    *out = report.release();
    return PR_OK;
  });
}

pr_status pr_relation_profile(const pr_relation* relation, double s_lo, double s_hi, double step,
                              pr_profile** out) {
  if (auto st = require(relation, "relation"); st != PR_OK) return st;
  if (auto st = require(out, "output"); st != PR_OK) return st;
  return guarded([&] {
    *out = new pr_profile{
        partrel::relation_continuous_profile(relation->relation, s_lo, s_hi, step)};
    return PR_OK;
  });
}

size_t pr_profile_size(const pr_profile* profile) {
  return profile == nullptr ? 0 : profile->samples.size();
}

pr_status pr_profile_sample(const pr_profile* profile, size_t index, double* s, double* w,
                            int* is_integer) {
  if (auto st = require(profile, "profile"); st != PR_OK) return st;
  if (index >= profile->samples.size()) {
    return fail(PR_ERR_INDEX_OUT_OF_RANGE, "profile index out of range");
  }
  const auto& sample = profile->samples[index];
  if (s != nullptr) *s = sample.s;
  if (w != nullptr) *w = sample.w;
  if (is_integer != nullptr) *is_integer = sample.is_integer ? 1 : 0;
  return PR_OK;
}

void pr_profile_free(pr_profile* profile) { delete profile; }

// ---- quasipolynomial and Bernoulli/Bell ---------------------------------------

pr_status pr_check_parity(const int64_t* d, size_t m, int64_t s_max, pr_report** out) {
  if (auto st = require(out, "output"); st != PR_OK) return st;
  return guarded([&] {
    const auto result = partrel::check_parity(partrel::build_quasipoly(generators(d, m)), s_max);
    auto report = std::make_unique<pr_report>();
    for (const auto& v : result.violations) {
      report->violations.emplace_back(std::to_string(v.s), v.rule + ": " +
                                                               partrel::to_string(v.lhs) +
                                                               " != " + partrel::to_string(v.rhs));
    }
    report->passed = result.passed();
    report->add("sigma1", partrel::Rational(result.sigma1));
    *out = report.release();
    return PR_OK;
  });
}

pr_status pr_poly_part(const int64_t* d, size_t m, pr_report** out) {
  if (auto st = require(out, "output"); st != PR_OK) return st;
  return guarded([&] {
    auto report = std::make_unique<pr_report>();
    report->add("poly_part", partrel::poly_part(generators(d, m)));
    *out = report.release();
    return PR_OK;
  });
}

pr_status pr_check_bell_conjecture(const char* const* x, const char* const* y, size_t m, size_t k,
                                   char** value_out) {
  if (auto st = require(x, "x"); st != PR_OK) return st;
  if (auto st = require(y, "y"); st != PR_OK) return st;
  if (auto st = require(value_out, "output"); st != PR_OK) return st;
  return guarded([&] {
    std::vector<partrel::Rational> xs;
    std::vector<partrel::Rational> ys;
    for (size_t i = 0; i < m; ++i) {
      if (x[i] == nullptr || y[i] == nullptr) {
        throw partrel::Error(partrel::ErrorCode::InvalidArgument, "null rational string");
      }
      xs.push_back(partrel::parse_rational(x[i]));
      ys.push_back(partrel::parse_rational(y[i]));
    }
    *value_out = duplicate(partrel::to_string(partrel::check_bell_conjecture(xs, ys, k)));
    return PR_OK;
  });
}

pr_status pr_conjecture_suite(size_t m, size_t draws, uint64_t seed, pr_report** out) {
  if (auto st = require(out, "output"); st != PR_OK) return st;
  return guarded([&] {
    const auto result = partrel::conjecture_suite(m, draws, seed);
    auto report = std::make_unique<pr_report>();
    for (const auto& c : result.counterexamples) {
      std::string detail = "x=" + partrel::to_string(c.x.front());
      for (size_t i = 1; i < c.x.size(); ++i) detail += "," + partrel::to_string(c.x[i]);
      detail += " y=" + partrel::to_string(c.y.front());
      for (size_t i = 1; i < c.y.size(); ++i) detail += "," + partrel::to_string(c.y[i]);
      detail += " value=" + partrel::to_string(c.value);
      report->violations.emplace_back("k=" + std::to_string(c.k), std::move(detail));
    }
    report->passed = result.passed();
    report->add("seed", std::vector<std::string>{std::to_string(result.seed)});
    report->add("draws", std::vector<std::string>{std::to_string(result.draws)});
    report->add("evaluations", std::vector<std::string>{std::to_string(result.evaluations)});
    report->add("rejected_degenerate",
                std::vector<std::string>{std::to_string(result.rejected_degenerate)});
    *out = report.release();
    return PR_OK;
  });
}

}  // extern "C"
