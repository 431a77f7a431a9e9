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

// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "partrel/bernoulli_bell.hpp"
#include "partrel/denumerant.hpp"
#include "partrel/quasipoly.hpp"
#include "partrel/relations.hpp"

#include "reference_data.hpp"

using partrel::DeltaVector;
using partrel::GeneratorVector;
using partrel::Integer;
using partrel::Rational;

namespace {

constexpr std::uint64_t kRandomRelationSeed = 20240401;
constexpr std::uint64_t kParitySeed = 606;
constexpr std::uint64_t kConjectureSeed = 808;
constexpr std::uint64_t kWaveSeed = 909;

struct Outcome {
  bool passed = true;
  std::string detail;
};

class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      passed_ = false;
      if (failures_.size() < 5) failures_.push_back(what);
    }
  }
  void note(const std::string& text) { notes_.push_back(text); }
  Outcome finish() const {
    Outcome o;
    o.passed = passed_;
    std::ostringstream s;
    for (std::size_t i = 0; i < notes_.size(); ++i) s << (i ? "; " : "") << notes_[i];
    for (const auto& f : failures_) s << "; FAILED " << f;
    o.detail = s.str();
    return o;
  }

 private:
  bool passed_ = true;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

template <typename T>
std::string str(const T& v) {
  std::ostringstream s;
  s << v;
  return s.str();
}

std::string list(std::span<const std::int64_t> v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "}";
}

std::vector<Rational> qs(std::initializer_list<const char*> texts) {
  std::vector<Rational> out;
  for (const char* t : texts) out.push_back(partrel::parse_rational(t));
  return out;
}

partrel::Relation reference_relation(const partrel_test::ReferenceConfig& cfg) {
  return partrel::generate_relation(GeneratorVector(cfg.d), DeltaVector(cfg.delta));
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<std::pair<GeneratorVector, DeltaVector>> random_relations() {
  partrel::InstanceSampler sampler(kRandomRelationSeed);
  std::vector<std::pair<GeneratorVector, DeltaVector>> out;
  for (int i = 0; i < 50; ++i) out.push_back(sampler.admissible(5, 10, 4));
  return out;
}

// All multisets of {1..9} with 1..4 elements.
std::vector<GeneratorVector> small_corpus() {
  std::vector<GeneratorVector> out;
  std::vector<std::int64_t> cur;
  std::function<void(std::int64_t)> extend = [&](std::int64_t lo) {
    if (!cur.empty()) out.emplace_back(cur);
    if (cur.size() == 4) return;
    for (std::int64_t v = lo; v <= 9; ++v) {
      cur.push_back(v);
      extend(v);
      cur.pop_back();
    }
  };
  extend(1);
  return out;
}

Outcome criterion_vectors() {
  Checker c;
  const auto start = std::chrono::steady_clock::now();
  int matched = 0;
  for (const auto& cfg : partrel_test::reference_configs()) {
    const auto r = reference_relation(cfg);
    for (std::size_t i = 0; i < cfg.vectors.size(); ++i) {
      const auto raw = r.terms()[i].raw_generators();
      const bool ok =
          partrel_test::same_term_vector({raw.begin(), raw.end()}, cfg.vectors[i]);
      c.expect(ok, std::string(cfg.name) + " d_" + std::to_string(i + 1) + " = " + list(raw));
      matched += ok;
    }
  }
  const double t = seconds_since(start);
  c.expect(t < 1.0, "runtime " + str(t) + " s");
  c.note(std::to_string(matched) + "/12 vectors exact");
  c.note("runtime " + str(t) + " s < 1 s");
  return c.finish();
}

Outcome criterion_poly_parts() {
  Checker c;
  int matched = 0;
  for (const auto& cfg : partrel_test::reference_configs()) {
    const auto report = partrel::verify_poly_relation(reference_relation(cfg));
    c.expect(report.base == partrel_test::poly_from(cfg.base_poly),
             std::string(cfg.name) + " base " + report.base.to_string());
    for (std::size_t i = 0; i < 4; ++i) {
      const bool ok = report.terms[i] == partrel_test::poly_from(cfg.term_polys[i]);
      c.expect(ok, std::string(cfg.name) + " term " + std::to_string(i + 1) + " " +
                       report.terms[i].to_string());
      matched += ok;
    }
    c.expect(report.residual.is_zero(), std::string(cfg.name) + " residual " +
                                            report.residual.to_string());
  }
  c.note(std::to_string(matched) + "/12 term polynomials coefficient-exact");
  c.note("W_1(s,{2,3,6,7}) = " + partrel::poly_part(GeneratorVector({2, 3, 6, 7})).to_string());
  c.note("3/3 residuals zero");
  return c.finish();
}

Outcome criterion_identities() {
  Checker c;
  const auto& cfgs = partrel_test::reference_configs();
  const auto unit = partrel::numeric_identities(reference_relation(cfgs[0]));
  c.expect(unit.all_one(), "delta=1 identities not all 1");
  c.expect(unit.lead_summands == qs({"63/10", "-7", "7/2", "-9/5"}), "delta=1 lead summands");
  c.expect(unit.second_prefactor == Rational(14) &&
               unit.second_summands == qs({"3/10", "-1/4", "0", "3/140"}),
           "delta=1 second-term pieces");
  c.expect(unit.third_prefactor == Rational(126, 437) &&
               unit.third_summands == qs({"193/20", "-52/9", "-31/36", "16/35"}),
           "delta=1 third-term pieces");
  c.expect(unit.sigma1_terms == std::vector<Integer>{12, 9, 0, -3}, "sigma_1(d_i)");
  c.expect(unit.sigma2_terms == std::vector<Integer>{46, 35, 62, 91}, "sigma_2(d_i)");

  const auto other = partrel::numeric_identities(reference_relation(cfgs[1]));
  c.expect(other.all_one(), "delta={1,2,1,1} identities not all 1");
  c.expect(other.lead_summands == qs({"-63/10", "224/33", "7/6", "-36/55"}),
           "delta={1,2,1,1} lead summands");
  c.expect(other.second_prefactor == Rational(14) &&
               other.second_summands == qs({"-1/4", "32/99", "-1/36", "2/77"}),
           "delta={1,2,1,1} second-term pieces");

  const auto third = partrel::numeric_identities(reference_relation(cfgs[2]));
  c.expect(third.all_one(), "d={2,2,5,7} identities not all 1");

  c.note("delta=1: lead, second, third, sigma-sum = " + partrel::to_string(unit.lead_term) + ", " +
         partrel::to_string(*unit.second_term) + ", " + partrel::to_string(*unit.third_term) +
         ", " + partrel::to_string(unit.sigma_sum_ratio));
  c.note("delta={1,2,1,1}: lead = " + partrel::to_string(other.lead_term) + ", second = " +
         partrel::to_string(*other.second_term) + " with summands {-1/4, 32/99, -1/36, 2/77}" +
         " (a leading +1/4 would give 8)");
  c.note("sigma_1(d_i) = {12,9,0,-3}, sigma_2(d_i) = {46,35,62,91}");
  return c.finish();
}

Outcome criterion_integer_relations() {
  Checker c;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& cfg : partrel_test::reference_configs()) {
    const auto report = partrel::verify_relation_integer(reference_relation(cfg), 0, 500);
    c.expect(report.passed(), std::string(cfg.name) + " nonzero at s = " +
                                  (report.violations.empty()
                                       ? std::string("?")
                                       : std::to_string(report.violations.front().s)));
  }
  const double t = seconds_since(start);
  c.expect(t < 10.0, "reference configurations took " + str(t) + " s");
  c.note("3 configurations on [0,500] in " + str(t) + " s < 10 s");

  int clean = 0;
  for (const auto& [d, delta] : random_relations()) {
    const auto report = partrel::verify_relation_integer(partrel::generate_relation(d, delta), 0, 200);
    c.expect(report.passed(), "random d=" + list(d.entries()) + " delta=" + list(delta.entries()));
    clean += report.passed();
  }
  c.note(std::to_string(clean) + "/50 random relations (seed " + std::to_string(kRandomRelationSeed) +
         ") vanish on [0,200]");
  return c.finish();
}

Outcome criterion_oracle() {
  Checker c;
  const auto start = std::chrono::steady_clock::now();
  const auto corpus = small_corpus();
  std::size_t compared = 0;
  for (const auto& d : corpus) {
    for (std::int64_t s = 0; s <= 40; ++s) {
      const bool ok = partrel::denumerant(s, d) == partrel::brute_force_count(s, d);
      c.expect(ok, "d=" + list(d.entries()) + " s=" + std::to_string(s));
      ++compared;
    }
  }
  const double t = seconds_since(start);
  c.expect(t < 30.0, "runtime " + str(t) + " s");
  c.note(std::to_string(corpus.size()) + " multisets, " + std::to_string(compared) +
         " values equal to enumeration");
  c.note("runtime " + str(t) + " s < 30 s");
  return c.finish();
}

Outcome criterion_parity() {
  Checker c;
  const GeneratorVector gaps({2, 3, 6, 7});
  const auto q = partrel::build_quasipoly(gaps);
  c.expect(partrel::check_parity(q, 100).passed(), "parity for {2,3,6,7}");
  std::vector<std::int64_t> zeros;
  for (std::int64_t s = -18; s <= -1; ++s) {
    if (partrel::qp_eval_integer(q, s) == 0) zeros.push_back(s);
  }
  std::vector<std::int64_t> expected;
  for (std::int64_t s = -17; s <= -1; ++s) expected.push_back(s);
  c.expect(zeros == expected, "zeros of {2,3,6,7} in [-18,-1]: " + list(zeros));
  c.expect(partrel::qp_eval_integer(q, -18) == -1, "W(-18) for {2,3,6,7}");
  bool mirrored = true;
  for (std::int64_t s = -60; s < -18; ++s) {
    mirrored = mirrored && ((partrel::qp_eval_integer(q, s) == 0) ==
                            (partrel::denumerant(-18 - s, gaps) == 0));
  }
  c.expect(mirrored, "zeros below -18 do not mirror the gaps of the semigroup");

  partrel::InstanceSampler sampler(kParitySeed);
  int clean = 0;
  for (int i = 0; i < 20; ++i) {
    const auto d = sampler.generators(1, 5, 9);
    const bool ok = partrel::check_parity(partrel::build_quasipoly(d), 100).passed();
    c.expect(ok, "parity for " + list(d.entries()));
    clean += ok;
  }
  c.note("{2,3,6,7}: parity for s <= 100, zeros in [-18,-1] exactly at -17..-1, W(-18) = -1, zeros below -18 mirror non-representable s");
  c.note(std::to_string(clean) + "/20 random d (seed " + std::to_string(kParitySeed) + ") pass");
  return c.finish();
}

Outcome criterion_profiles() {
  Checker c;
  const auto& cfgs = partrel_test::reference_configs();
  for (std::size_t k = 0; k < cfgs.size(); ++k) {
    const auto profile = partrel::relation_continuous_profile(reference_relation(cfgs[k]), 0, 16, 0.01);
    double overall = 0;
    double at_integers = 0;
    for (const auto& p : profile) {
      overall = std::max(overall, std::abs(p.w));
      if (p.is_integer) at_integers = std::max(at_integers, std::abs(p.w));
    }
    char buf[160];
    if (k == 0) {
      c.expect(overall < 1e-8, std::string(cfgs[k].name) + " max |w| = " + str(overall));
      std::snprintf(buf, sizeof buf, "%s: max |w| = %.3g < 1e-8", cfgs[k].name, overall);
    } else {
      c.expect(at_integers < 1e-8, std::string(cfgs[k].name) + " integer |w| = " + str(at_integers));
      c.expect(overall > 1e3 * at_integers, std::string(cfgs[k].name) + " interior too small");
      std::snprintf(buf, sizeof buf, "%s: integer max %.3g < 1e-8, grid max %.3g > 1e3 x integer max",
                    cfgs[k].name, at_integers, overall);
    }
    c.note(buf);
  }
  return c.finish();
}

Outcome criterion_bernoulli_bell() {
  Checker c;
  for (const auto& cfg : partrel_test::reference_configs()) {
    for (const auto& v : partrel::verify_bernoulli_relations(reference_relation(cfg))) {
      c.expect(v == 0, std::string(cfg.name) + " Bernoulli residual " + partrel::to_string(v));
    }
  }
  int clean = 0;
  for (const auto& [d, delta] : random_relations()) {
    const auto values = partrel::verify_bernoulli_relations(partrel::generate_relation(d, delta));
    const bool ok = std::all_of(values.begin(), values.end(), [](const Rational& v) { return v == 0; });
    c.expect(ok, "random d=" + list(d.entries()));
    clean += ok;
  }
  c.note("3 configurations and " + std::to_string(clean) + "/50 random relations: all Bernoulli residuals 0");

  std::string suites;
  for (std::size_t m = 2; m <= 5; ++m) {
    const auto report = partrel::conjecture_suite(m, 100, kConjectureSeed);
    for (const auto& ce : report.counterexamples) {
      std::string x;
      for (const auto& v : ce.x) x += partrel::to_string(v) + " ";
      c.expect(false, "conjecture counterexample m=" + std::to_string(m) + " k=" +
                          std::to_string(ce.k) + " x=" + x + "value " + partrel::to_string(ce.value));
    }
    suites += (m > 2 ? ", " : "") + std::string("m=") + std::to_string(m) + ": " +
              std::to_string(report.evaluations) + " evaluations, " +
              std::to_string(report.counterexamples.size()) + " nonzero";
  }
  c.note("conjecture (seed " + std::to_string(kConjectureSeed) + ", 100 draws per m) " + suites);
  return c.finish();
}

Outcome criterion_recursions() {
  Checker c;
  std::size_t checks = 0;
  for (const auto& d : small_corpus()) {
    for (std::size_t i = 0; i < d.size(); ++i) {
      for (std::int64_t s = 0; s <= 40; ++s) {
        const Integer lhs = partrel::denumerant(s, d) - partrel::denumerant(s - d[i], d);
        const Integer rhs = d.size() == 1 ? Integer(s == 0 ? 1 : 0) : partrel::denumerant(s, d.without(i));
        c.expect(lhs == rhs, "recursion d=" + list(d.entries()) + " s=" + std::to_string(s));
        ++checks;
      }
    }
  }
  c.note(std::to_string(checks) + " exact recursion checks on the oracle corpus");

  partrel::InstanceSampler sampler(kWaveSeed);
  int clean = 0;
  for (int n = 0; n < 20; ++n) {
    const auto d = sampler.generators(2, 5, 9);
    const auto w1 = partrel::poly_part(d);
    bool ok = true;
    for (std::size_t i = 0; i < d.size(); ++i) {
      ok = ok && (w1 - w1.compose_affine(1, -d[i]) == partrel::poly_part(d.without(i)));
    }
    c.expect(ok, "wave-1 recursion for " + list(d.entries()));
    clean += ok;
  }
  c.note(std::to_string(clean) + "/20 random d (seed " + std::to_string(kWaveSeed) +
         ") satisfy the wave-1 recursion as polynomial identities");
  return c.finish();
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "relation vectors", criterion_vectors},
      {2, "polynomial parts", criterion_poly_parts},
      {3, "numeric identities", criterion_identities},
      {4, "exact relation vanishing", criterion_integer_relations},
      {5, "oracle equivalence", criterion_oracle},
      {6, "parity and vanishing", criterion_parity},
      {7, "continuous extension", criterion_profiles},
      {8, "Bernoulli/Bell suite", criterion_bernoulli_bell},
      {9, "recursion and wave-1 recursion", criterion_recursions},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s criterion %d (%s) [%.2f s]: %s\n", o.passed ? "PASS" : "FAIL", cr.id, cr.title,
                seconds_since(start), o.detail.c_str());
    std::fflush(stdout);
    failed += !o.passed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed,
              std::size(criteria));
  return failed == 0 ? 0 : 1;
}
