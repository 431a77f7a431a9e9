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

// Higher-order Bernoulli polynomials from the Norlund generating function
//
//   t^m e^{st} prod_i d_i / prod_i (e^{d_i t} - 1) = sum_n B^(m)_n(s, d) t^n / n!
//
// complete Bell polynomials, and the polynomial part W_1(s, d) of a scalar
// partition.

#include <cstddef>
#include <span>
#include <vector>

#include "partrel/algebra.hpp"
#include "partrel/denumerant.hpp"

namespace partrel {

/// B_0..B_{n_max} with B_1 = -1/2, from t/(e^t - 1). Memoized; the cache
/// only grows and is guarded, so concurrent callers are fine.
std::vector<Rational> bernoulli_numbers(std::size_t n_max);

/// B^(m)_0(d)..B^(m)_{n_max}(d): EGF coefficients of prod_i d_i t/(e^{d_i t} - 1).
/// Generators may be any nonzero rationals (signed relation vectors and
/// the conjecture's rational draws use this). Throws
/// ErrorCode::DegenerateInput on a zero generator.
std::vector<Rational> higher_bernoulli_numbers(std::span<const Rational> generators,
                                               std::size_t n_max);

RationalPolynomial higher_bernoulli_poly(std::size_t n, std::span<const Rational> generators);
RationalPolynomial higher_bernoulli_poly(std::size_t n, const GeneratorVector& d);
Rational higher_bernoulli_number(std::size_t n, std::span<const Rational> generators);
Rational higher_bernoulli_number(std::size_t n, const GeneratorVector& d);

std::vector<Rational> to_rationals(std::span<const std::int64_t> values);

/// Arguments a_1, a_2, ... of a complete Bell polynomial.
class BellArgumentVector {
 public:
  BellArgumentVector() = default;
  explicit BellArgumentVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}

  std::size_t size() const noexcept { return entries_.size(); }
  /// 1-based, a(1) = a_1.
  const Rational& a(std::size_t r) const { return entries_.at(r - 1); }
  std::span<const Rational> entries() const noexcept { return entries_; }

  BellArgumentVector with_first(const Rational& a1) const;

 private:
  std::vector<Rational> entries_;
};

/// Complete Bell polynomial B_n(a_1..a_n) by
///   B_{n+1} = sum_{k=0}^{n} C(n,k) B_{n-k} a_{k+1}.
/// Throws ErrorCode::InvalidArgument when fewer than n arguments are given.
Rational complete_bell(std::size_t n, const BellArgumentVector& a);

/// a_r = (-1)^{r-1} B_r sigma_r(d) / r for r = 1..n_max.
BellArgumentVector bell_args_from_generators(std::span<const Rational> generators,
                                             std::size_t n_max);
BellArgumentVector bell_args_from_generators(const GeneratorVector& d, std::size_t n_max);

/// W_1(s, d) = B^(m)_{m-1}(s + sigma_1(d), d) / ((m-1)! pi(d)).
RationalPolynomial poly_part(std::span<const Rational> generators);
RationalPolynomial poly_part(const GeneratorVector& d);

}  // namespace partrel
