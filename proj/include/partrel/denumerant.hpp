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

// Restricted partition counts W(s, d): the number of nonnegative integer
// solutions of s = d . x.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "partrel/algebra.hpp"

namespace partrel {

/// Positive integer generators d_1..d_m, duplicates allowed, m >= 1.
class GeneratorVector {
 public:
  explicit GeneratorVector(std::vector<std::int64_t> entries);

  std::size_t size() const noexcept { return entries_.size(); }
  std::int64_t operator[](std::size_t i) const { return entries_.at(i); }
  std::span<const std::int64_t> entries() const noexcept { return entries_; }

  /// Power sum sum_i d_i^r.
  Integer sigma(unsigned r) const;
  Integer product() const;

  /// The entries sorted ascending; equal for any two permutations.
  std::vector<std::int64_t> sorted() const;

  /// Copy with entry i removed. Requires size() >= 2.
  GeneratorVector without(std::size_t i) const;

  friend bool operator==(const GeneratorVector&, const GeneratorVector&) = default;

 private:
  std::vector<std::int64_t> entries_;
};

/// A scalar partition with signed generators rewritten over |d|:
///   W(s*delta, raw) = sign * W(s*delta + shift, |raw|)
/// with sign = (-1)^K, K the number of negative entries, and shift the sum
/// of the negative entries.
class SignedTerm {
 public:
  std::span<const std::int64_t> raw_generators() const noexcept { return raw_; }
  std::int64_t s_multiplier() const noexcept { return s_multiplier_; }
  int sign() const noexcept { return sign_; }
  std::int64_t shift() const noexcept { return shift_; }
  const GeneratorVector& abs_generators() const noexcept { return abs_; }

 private:
  friend SignedTerm normalize_signed(std::span<const std::int64_t> raw, std::int64_t delta);

  SignedTerm(std::vector<std::int64_t> raw, std::int64_t delta, int sign, std::int64_t shift,
             GeneratorVector abs)
      : raw_(std::move(raw)), s_multiplier_(delta), sign_(sign), shift_(shift),
        abs_(std::move(abs)) {}

  std::vector<std::int64_t> raw_;
  std::int64_t s_multiplier_;
  int sign_;
  std::int64_t shift_;
  GeneratorVector abs_;
};

/// Counts for s = 0..s_max by the coin-counting recurrence. Entry 0 is 1.
std::vector<Integer> denumerant_table(const GeneratorVector& d, std::int64_t s_max);

/// W(s, d), zero for s < 0. Backed by a process-wide table cache keyed by
/// the sorted multiset of d; safe to call from several threads.
Integer denumerant(std::int64_t s, const GeneratorVector& d);

/// Independent oracle: exhaustive enumeration of x with x_i <= s/d_i.
/// Meant for s up to a few hundred and m up to ~6.
Integer brute_force_count(std::int64_t s, const GeneratorVector& d);

/// Throws ErrorCode::InvalidArgument on a zero entry, an empty vector or
/// delta < 1.
SignedTerm normalize_signed(std::span<const std::int64_t> raw, std::int64_t delta);

/// sign * W(s*delta + shift, |raw|). Requires s >= 0.
Integer eval_signed_term(std::int64_t s, const SignedTerm& term);

}  // namespace partrel
