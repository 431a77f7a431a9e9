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

#include "partrel/bernoulli_bell.hpp"

#include <mutex>
#include <string>

#include "partrel/error.hpp"

namespace partrel {

std::vector<Rational> bernoulli_numbers(std::size_t n_max) {
  static std::mutex mutex;
  static std::vector<Rational> memo;

  std::lock_guard lock(mutex);
  if (memo.size() <= n_max) {
    const std::size_t order = std::max<std::size_t>(n_max + 1, 2 * memo.size());
    const auto quotient = series_divide(TruncatedSeries::one(order),
                                        TruncatedSeries::exp_minus_one_over(Rational(1), order));
    memo.assign(quotient.coefficients().begin(), quotient.coefficients().end());
  }
  return {memo.begin(), memo.begin() + static_cast<std::ptrdiff_t>(n_max + 1)};
}

std::vector<Rational> higher_bernoulli_numbers(std::span<const Rational> generators,
                                               std::size_t n_max) {
  const std::size_t order = n_max + 1;
  // prod_i d_i t/(e^{d_i t}-1) = 1 / prod_i (e^{d_i t}-1)/(d_i t); the t^m
  // and pi(d) factors cancel before any series is formed.
  TruncatedSeries denominator = TruncatedSeries::one(order);
  for (const auto& g : generators) {
    if (g == 0) {
      throw Error(ErrorCode::DegenerateInput, "zero generator in Bernoulli generating function");
    }
    denominator = series_multiply(denominator, TruncatedSeries::exp_minus_one_over(g, order));
  }
  const auto quotient = series_divide(TruncatedSeries::one(order), denominator);
  return {quotient.coefficients().begin(), quotient.coefficients().end()};
}

RationalPolynomial higher_bernoulli_poly(std::size_t n, std::span<const Rational> generators) {
  const auto numbers = higher_bernoulli_numbers(generators, n);
  std::vector<Rational> coeffs(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    coeffs[k] = Rational(binomial(n, k)) * numbers[n - k];
  }
  return RationalPolynomial(std::move(coeffs));
}

RationalPolynomial higher_bernoulli_poly(std::size_t n, const GeneratorVector& d) {
  const auto g = to_rationals(d.entries());
  return higher_bernoulli_poly(n, g);
}

Rational higher_bernoulli_number(std::size_t n, std::span<const Rational> generators) {
  return higher_bernoulli_numbers(generators, n)[n];
}

Rational higher_bernoulli_number(std::size_t n, const GeneratorVector& d) {
  const auto g = to_rationals(d.entries());
  return higher_bernoulli_number(n, g);
}

std::vector<Rational> to_rationals(std::span<const std::int64_t> values) {
  std::vector<Rational> out;
  out.reserve(values.size());
  for (const auto v : values) {
    out.emplace_back(static_cast<long>(v));
  }
  return out;
}

BellArgumentVector BellArgumentVector::with_first(const Rational& a1) const {
  auto copy = entries_;
  if (copy.empty()) {
    copy.push_back(a1);
  } else {
    copy[0] = a1;
  }
  return BellArgumentVector(std::move(copy));
}

Rational complete_bell(std::size_t n, const BellArgumentVector& a) {
  if (a.size() < n) {
    throw Error(ErrorCode::InvalidArgument, "complete_bell(" + std::to_string(n) + ") needs " +
                                                std::to_string(n) + " arguments, got " +
                                                std::to_string(a.size()));
  }
  std::vector<Rational> bell(n + 1);
  bell[0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Rational acc = 0;
    for (std::size_t k = 0; k <= i; ++k) {
      acc += Rational(binomial(i, k)) * bell[i - k] * a.a(k + 1);
    }
    bell[i + 1] = acc;
  }
  return bell[n];
}

BellArgumentVector bell_args_from_generators(std::span<const Rational> generators,
                                             std::size_t n_max) {
  const auto bernoulli = bernoulli_numbers(n_max);
  std::vector<Rational> out(n_max);
  for (std::size_t r = 1; r <= n_max; ++r) {
    Rational power_sum = 0;
    for (const auto& g : generators) {
      power_sum += rpow(g, static_cast<unsigned>(r));
    }
    const Rational sign = r % 2 == 1 ? 1 : -1;
    out[r - 1] = sign * bernoulli[r] * power_sum / Rational(static_cast<long>(r));
  }
  return BellArgumentVector(std::move(out));
}

BellArgumentVector bell_args_from_generators(const GeneratorVector& d, std::size_t n_max) {
  const auto g = to_rationals(d.entries());
  return bell_args_from_generators(g, n_max);
}

RationalPolynomial poly_part(std::span<const Rational> generators) {
  if (generators.empty()) {
    // W(s, {}) = [s = 0] has no polynomial part.
    return {};
  }
  const std::size_t m = generators.size();
  Rational sigma1 = 0;
  Rational product = 1;
  for (const auto& g : generators) {
    sigma1 += g;
    product *= g;
  }
  const auto bernoulli = higher_bernoulli_poly(m - 1, generators);
  const Rational scale = Rational(1) / (Rational(factorial(m - 1)) * product);
  return scale * bernoulli.compose_affine(Rational(1), sigma1);
}

RationalPolynomial poly_part(const GeneratorVector& d) {
  const auto g = to_rationals(d.entries());
  return poly_part(g);
}

}  // namespace partrel
