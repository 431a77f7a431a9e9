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

// (m+1)-term linear relations among scalar partitions.
//
// Adding the auxiliary equation x_{m+1} - delta . x = sigma to s = d . x and
// reducing the resulting double partition gives
//
//   W(s, d) = sum_i W(s delta_i, d_i),
//   d_{i,i} = d_i,  d_{i,j} = delta_i d_j - delta_j d_i  (j != i),
//   d_i = (d_{i,i}, d_{i,1}, ..., d_{i,m}) with the diagonal entry first,
//
// valid at every nonnegative integer s whenever each column {-delta_i, d_i}
// is coprime and no two columns are collinear.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "partrel/algebra.hpp"
#include "partrel/denumerant.hpp"

namespace partrel {

/// Positive multipliers delta_1..delta_m.
class DeltaVector {
 public:
  explicit DeltaVector(std::vector<std::int64_t> entries);

  /// All ones.
  static DeltaVector unit(std::size_t m);

  std::size_t size() const noexcept { return entries_.size(); }
  std::int64_t operator[](std::size_t i) const { return entries_.at(i); }
  std::span<const std::int64_t> entries() const noexcept { return entries_; }

  friend bool operator==(const DeltaVector&, const DeltaVector&) = default;

 private:
  std::vector<std::int64_t> entries_;
};

enum class DeltaRule {
  NonCoprimeColumn,  // gcd(delta_i, d_i) > 1
  Collinear,         // delta_i d_j == delta_j d_i
};

struct DeltaViolation {
  DeltaRule rule;
  std::size_t i;  // 0-based
  std::size_t j;  // equals i for NonCoprimeColumn

  /// e.g. "columns 1,2 collinear" (1-based, matching the usual notation).
  std::string message() const;
  friend bool operator==(const DeltaViolation&, const DeltaViolation&) = default;
};

/// Empty result means admissible. Throws ErrorCode::InvalidArgument on a
/// length mismatch.
std::vector<DeltaViolation> validate_delta(const GeneratorVector& d, const DeltaVector& delta);

class Relation {
 public:
  const GeneratorVector& base() const noexcept { return base_; }
  const DeltaVector& delta() const noexcept { return delta_; }
  const std::vector<SignedTerm>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  /// d_{i,j}, 0-based. Term i stores its generators as d_i followed by
  /// d_{i,j} for j != i in increasing j.
  std::int64_t coefficient(std::size_t i, std::size_t j) const;
  /// The auxiliary right-hand side sigma; generated relations always use 0.
  std::int64_t sigma_offset() const noexcept { return 0; }

 private:
  friend Relation generate_relation(const GeneratorVector& d, const DeltaVector& delta);

  Relation(GeneratorVector base, DeltaVector delta, std::vector<SignedTerm> terms)
      : base_(std::move(base)), delta_(std::move(delta)), terms_(std::move(terms)) {}

  GeneratorVector base_;
  DeltaVector delta_;
  std::vector<SignedTerm> terms_;
};

/// Throws ErrorCode::InvalidDelta (message lists the violations) when
/// validate_delta fails.
Relation generate_relation(const GeneratorVector& d, const DeltaVector& delta);

/// Extends a solution x of s = d . x to (x, sigma + delta . x), which
/// solves both auxiliary rows. Throws ErrorCode::InvalidArgument on
/// negative entries, negative sigma or a length mismatch.
std::vector<std::int64_t> lift_solution(std::span<const std::int64_t> x, const GeneratorVector& d,
                                        const DeltaVector& delta, std::int64_t sigma);

struct IntegerViolation {
  std::int64_t s;
  Integer residual;
};

struct VerificationReport {
  std::int64_t s_min = 0;
  std::int64_t s_max = 0;
  std::vector<IntegerViolation> violations;
  bool passed() const noexcept { return violations.empty(); }
};

/// w(s) = W(s, d) - sum_i W(s delta_i, d_i), exactly, for s_min..s_max.
VerificationReport verify_relation_integer(const Relation& r, std::int64_t s_min,
                                           std::int64_t s_max);

struct PolyRelationReport {
  RationalPolynomial base;                 // W_1(s, d)
  std::vector<RationalPolynomial> terms;   // W_1(s delta_i, d_i) via |d_i|, sign, shift
  RationalPolynomial residual;
  bool passed() const noexcept { return residual.is_zero(); }
};

/// Polynomial part of a term as a polynomial in s:
/// sign * W_1(s delta + shift, |raw|).
RationalPolynomial term_poly_part(const SignedTerm& term);

PolyRelationReport verify_poly_relation(const Relation& r);

/// For k = 0..m-1:
///   B^(m)_{m-k-1}(d)/pi(d) - sum_i delta_i^k B^(m)_{m-k-1}(d_i)/pi(d_i)
/// on the raw signed d_i. Every entry is zero for a valid relation.
std::vector<Rational> verify_bernoulli_relations(const Relation& r);

struct NumericIdentities {
  Rational sigma_sum_ratio;   // sum sigma_1(d_i) / sigma_1(d)
  Rational lead_term;         // pi(d) sum delta_i^{m-1} / pi(d_i)
  std::optional<Rational> second_term;  // m >= 2: pi(d)/sigma_1(d) sum delta_i^{m-2} sigma_1(d_i)/pi(d_i)
  std::optional<Rational> third_term;   // m >= 3

  // Per-term pieces, in the form they are usually displayed.
  std::vector<Integer> sigma1_terms;            // sigma_1(d_i)
  std::vector<Integer> sigma2_terms;            // sigma_2(d_i)
  std::vector<Rational> lead_summands;          // pi(d) delta_i^{m-1} / pi(d_i)
  std::optional<Rational> second_prefactor;     // pi(d) / sigma_1(d)
  std::vector<Rational> second_summands;        // delta_i^{m-2} sigma_1(d_i) / pi(d_i)
  std::optional<Rational> third_prefactor;      // pi(d) / (3 sigma_1^2 - sigma_2)
  std::vector<Rational> third_summands;         // delta_i^{m-3} (3 sigma_1(d_i)^2 - sigma_2(d_i)) / pi(d_i)

  bool all_one() const;
};

NumericIdentities numeric_identities(const Relation& r);

/// B^(m)_{m-k-1}(x)/pi(x) - sum_i y_i^k B^(m)_{m-k-1}(s_i)/pi(s_i) with
/// s_{i,j} = y_i x_j - y_j x_i + x_i [i = j]. Zero when the conjectured
/// identity holds. Throws ErrorCode::DegenerateInput when pi(x) or some
/// pi(s_i) vanishes, ErrorCode::InvalidArgument on bad sizes or k >= m.
Rational check_bell_conjecture(std::span<const Rational> x, std::span<const Rational> y,
                               std::size_t k);

struct ProfileSample {
  double s;
  double w;
  bool is_integer;
};

/// Continuous extension of w(s, d, delta) on lo, lo+step, ..., hi, built
/// from the wave decompositions of d and of every |d_i|. Grid points within
/// 1e-9 of an integer are snapped to it and flagged. Throws
/// ErrorCode::InvalidArgument unless step > 0 and lo <= hi.
std::vector<ProfileSample> relation_continuous_profile(const Relation& r, double s_lo,
                                                       double s_hi, double step);

/// Deterministic draw of an admissible (d, delta): m in [1, max_m],
/// d_i in [1, max_d], delta_i in [1, max_delta]; rejection sampling.
/// Uses mt19937_64 with plain modular reduction so the sequence is the
/// same on every platform.
class InstanceSampler {
 public:
  explicit InstanceSampler(std::uint64_t seed);

  std::uint64_t seed() const noexcept { return seed_; }
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  GeneratorVector generators(std::size_t min_m, std::size_t max_m, std::int64_t max_d);
  std::pair<GeneratorVector, DeltaVector> admissible(std::size_t max_m, std::int64_t max_d,
                                                     std::int64_t max_delta);
  /// Nonzero rational with numerator in [-max_num, max_num] \ {0} and
  /// denominator in [1, max_den].
  Rational nonzero_rational(std::int64_t max_num, std::int64_t max_den);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

struct ConjectureDraw {
  std::vector<Rational> x;
  std::vector<Rational> y;
  std::size_t k;
  Rational value;
};

struct ConjectureSuiteReport {
  std::uint64_t seed = 0;
  std::size_t m = 0;
  std::size_t draws = 0;
  std::size_t evaluations = 0;
  std::size_t rejected_degenerate = 0;
  std::vector<ConjectureDraw> counterexamples;
  bool passed() const noexcept { return counterexamples.empty(); }
};

/// Evaluates check_bell_conjecture for `draws` random admissible (x, y) and
/// every k < m. Degenerate draws are redrawn. Nonzero values are kept as
/// counterexamples rather than treated as errors.
ConjectureSuiteReport conjecture_suite(std::size_t m, std::size_t draws, std::uint64_t seed);

}  // namespace partrel
