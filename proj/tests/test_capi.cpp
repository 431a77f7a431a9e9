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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <string>
#include <thread>
#include <vector>

#include "partrel/partrel.h"

namespace {

std::string take(char* s) {
  std::string out(s);
  pr_string_free(s);
  return out;
}

std::vector<std::string> entry(const pr_report* r, const char* name) {
  std::size_t index = 0;
  REQUIRE(pr_report_find(r, name, &index) == PR_OK);
  std::size_t length = 0;
  REQUIRE(pr_report_entry_length(r, index, &length) == PR_OK);
  std::vector<std::string> out;
  for (std::size_t k = 0; k < length; ++k) {
    const char* v = nullptr;
    REQUIRE(pr_report_entry_value(r, index, k, &v) == PR_OK);
    out.emplace_back(v);
  }
  return out;
}

using Strings = std::vector<std::string>;

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::strlen(pr_version()) > 0);
  CHECK(std::string(pr_status_name(PR_OK)) == "ok");
  CHECK(std::string(pr_status_name(PR_ERR_INVALID_DELTA)) == "invalid_delta");
}

TEST_CASE("counts through the C interface") {
  const int64_t d[] = {2, 3, 6, 7};
  char* out = nullptr;
  REQUIRE(pr_denumerant(d, 4, 10, &out) == PR_OK);
  CHECK(take(out) == "4");
  REQUIRE(pr_denumerant(d, 4, -3, &out) == PR_OK);
  CHECK(take(out) == "0");
  REQUIRE(pr_brute_force_count(d, 4, 12, &out) == PR_OK);
  CHECK(take(out) == "7");
  const int64_t ones[] = {1, 1};
  REQUIRE(pr_denumerant(ones, 2, 1000000, &out) == PR_OK);
  CHECK(take(out) == "1000001");

  const int64_t bad[] = {2, 0};
  CHECK(pr_denumerant(bad, 2, 5, &out) == PR_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(pr_last_error_message()) > 0);
  CHECK(pr_denumerant(nullptr, 2, 5, &out) == PR_ERR_INVALID_ARGUMENT);
  CHECK(pr_denumerant(d, 4, 5, nullptr) == PR_ERR_INVALID_ARGUMENT);
  CHECK(pr_brute_force_count(d, 4, -1, &out) == PR_ERR_INVALID_ARGUMENT);
}

TEST_CASE("delta validation report") {
  const int64_t d[] = {2, 4};
  const int64_t delta[] = {1, 2};
  pr_report* report = nullptr;
  REQUIRE(pr_validate_delta(d, delta, 2, &report) == PR_OK);
  CHECK_FALSE(pr_report_passed(report));
  REQUIRE(pr_report_violation_count(report) == 2);
  std::vector<std::string> keys;
  for (std::size_t i = 0; i < 2; ++i) {
    const char* key = nullptr;
    const char* detail = nullptr;
    REQUIRE(pr_report_violation(report, i, &key, &detail) == PR_OK);
    keys.emplace_back(key);
  }
  CHECK(std::find(keys.begin(), keys.end(), "collinear") != keys.end());
  CHECK(std::find(keys.begin(), keys.end(), "non_coprime") != keys.end());
  const char* key = nullptr;
  const char* detail = nullptr;
  CHECK(pr_report_violation(report, 2, &key, &detail) == PR_ERR_INDEX_OUT_OF_RANGE);
  pr_report_free(report);
}

TEST_CASE("relation lifecycle") {
  const int64_t d[] = {2, 3, 6, 7};
  const int64_t delta[] = {1, 2, 1, 1};
  pr_relation* rel = nullptr;
  REQUIRE(pr_relation_create(d, delta, 4, &rel) == PR_OK);
  REQUIRE(pr_relation_size(rel) == 4);

  int64_t raw[4];
  int64_t mult = 0;
  int sign = 0;
  int64_t shift = 0;
  REQUIRE(pr_relation_term(rel, 3, raw, &mult, &sign, &shift) == PR_OK);
  CHECK(raw[0] == 7);
  CHECK(raw[1] == -5);
  CHECK(raw[2] == -11);
  CHECK(raw[3] == -1);
  CHECK(mult == 1);
  CHECK(sign == -1);
  CHECK(shift == -17);
  CHECK(pr_relation_term(rel, 4, raw, &mult, &sign, &shift) == PR_ERR_INDEX_OUT_OF_RANGE);

  pr_report* report = nullptr;
  REQUIRE(pr_relation_verify_integer(rel, 0, 200, &report) == PR_OK);
  CHECK(pr_report_passed(report));
  CHECK(entry(report, "s_max") == Strings{"200"});
  pr_report_free(report);

  REQUIRE(pr_relation_verify_poly(rel, &report) == PR_OK);
  CHECK(pr_report_passed(report));
  CHECK(entry(report, "base") == Strings{"113/336", "437/3024", "1/56", "1/1512"});
  CHECK(entry(report, "term_2") == Strings{"182/297", "379/891", "8/99", "4/891"});
  CHECK(entry(report, "residual").empty());
  pr_report_free(report);

  REQUIRE(pr_relation_verify_bernoulli(rel, &report) == PR_OK);
  CHECK(pr_report_passed(report));
  CHECK(entry(report, "bernoulli") == Strings{"0", "0", "0", "0"});
  pr_report_free(report);

  REQUIRE(pr_relation_identities(rel, &report) == PR_OK);
  CHECK(pr_report_passed(report));
  CHECK(entry(report, "lead_summands") == Strings{"-63/10", "224/33", "7/6", "-36/55"});
  std::size_t index = 0;
  CHECK(pr_report_find(report, "no_such_entry", &index) == PR_ERR_INDEX_OUT_OF_RANGE);
  pr_report_free(report);

  pr_profile* profile = nullptr;
  REQUIRE(pr_relation_profile(rel, 0, 4, 0.5, &profile) == PR_OK);
  REQUIRE(pr_profile_size(profile) == 9);
  double s = 0;
  double w = 0;
  int is_integer = 0;
  REQUIRE(pr_profile_sample(profile, 2, &s, &w, &is_integer) == PR_OK);
  CHECK(s == 1.0);
  CHECK(is_integer == 1);
  CHECK(std::abs(w) < 1e-8);
  CHECK(pr_profile_sample(profile, 9, &s, &w, &is_integer) == PR_ERR_INDEX_OUT_OF_RANGE);
  CHECK(pr_relation_profile(rel, 0, 4, -1, &profile) == PR_ERR_INVALID_ARGUMENT);
  pr_profile_free(profile);

  pr_relation_free(rel);
  pr_relation_free(nullptr);
  pr_report_free(nullptr);
  pr_profile_free(nullptr);
}

TEST_CASE("inadmissible delta is rejected with a message") {
  const int64_t d[] = {2, 2, 5, 7};
  const int64_t delta[] = {1, 1, 1, 1};
  pr_relation* rel = nullptr;
  CHECK(pr_relation_create(d, delta, 4, &rel) == PR_ERR_INVALID_DELTA);
  CHECK(rel == nullptr);
  CHECK(std::string(pr_last_error_message()).find("columns 1,2 collinear") != std::string::npos);
}

TEST_CASE("error messages are per thread") {
  const int64_t bad[] = {0};
  char* out = nullptr;
  CHECK(pr_denumerant(bad, 1, 1, &out) == PR_ERR_INVALID_ARGUMENT);
  std::string other;
  std::thread t([&] { other = pr_last_error_message(); });
  t.join();
  CHECK(other.empty());
  CHECK(std::strlen(pr_last_error_message()) > 0);
}

TEST_CASE("parity, polynomial part and conjecture") {
  const int64_t d[] = {2, 3, 6, 7};
  pr_report* report = nullptr;
  REQUIRE(pr_check_parity(d, 4, 100, &report) == PR_OK);
  CHECK(pr_report_passed(report));
  CHECK(entry(report, "sigma1") == Strings{"18"});
  pr_report_free(report);

  REQUIRE(pr_poly_part(d, 4, &report) == PR_OK);
  CHECK(entry(report, "poly_part") == Strings{"113/336", "437/3024", "1/56", "1/1512"});
  pr_report_free(report);

  const char* x[] = {"1/2", "3", "-5/7"};
  const char* y[] = {"2/3", "1", "4"};
  char* value = nullptr;
  REQUIRE(pr_check_bell_conjecture(x, y, 3, 1, &value) == PR_OK);
  CHECK(take(value) == "0");
  const char* xd[] = {"1", "2"};
  CHECK(pr_check_bell_conjecture(xd, xd, 2, 0, &value) == PR_ERR_DEGENERATE_INPUT);
  const char* junk[] = {"1/0", "2"};
  CHECK(pr_check_bell_conjecture(junk, xd, 2, 0, &value) != PR_OK);

  REQUIRE(pr_conjecture_suite(4, 20, 11, &report) == PR_OK);
  CHECK(pr_report_passed(report));
  CHECK(entry(report, "seed") == Strings{"11"});
  CHECK(entry(report, "evaluations") == Strings{"80"});
  pr_report_free(report);
}
