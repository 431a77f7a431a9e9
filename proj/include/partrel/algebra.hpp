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

// Exact arithmetic substrate: GMP rationals, dense univariate polynomials
// and truncated exponential power series.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace partrel {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws ErrorCode::DivisionUndefined
/// when den is zero.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p", "-p" or "p/q". Throws ErrorCode::InvalidArgument on malformed
/// input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form ("p" when q = 1).
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

/// Integer power with a signed base.
Integer ipow(std::int64_t base, unsigned exponent);
Rational rpow(const Rational& base, unsigned exponent);

/// Dense polynomial in one variable s. coefficient(k) multiplies s^k.
/// Trailing zero coefficients are always stripped, so the zero polynomial
/// has no coefficients and degree -1.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coefficients);

  static RationalPolynomial constant(const Rational& c);
  /// c * s^k
  static RationalPolynomial monomial(const Rational& c, std::size_t k);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Zero for k beyond the degree.
  Rational coefficient(std::size_t k) const;
  std::span<const Rational> coefficients() const noexcept { return coeffs_; }

  Rational operator()(const Rational& x) const;
  double evaluate(double x) const;

  /// p(a*s + b)
  RationalPolynomial compose_affine(const Rational& a, const Rational& b) const;

  RationalPolynomial operator-() const;
  friend RationalPolynomial operator+(const RationalPolynomial& p, const RationalPolynomial& q);
  friend RationalPolynomial operator-(const RationalPolynomial& p, const RationalPolynomial& q);
  friend RationalPolynomial operator*(const RationalPolynomial& p, const RationalPolynomial& q);
  friend RationalPolynomial operator*(const Rational& c, const RationalPolynomial& p);

  friend bool operator==(const RationalPolynomial& p, const RationalPolynomial& q) {
    return p.coeffs_ == q.coeffs_;
  }

  /// Human-readable form, highest power first, e.g. "s^3/1512 + s^2/56 + 437*s/3024 + 113/336".
  std::string to_string() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// p + c*q
RationalPolynomial poly_add_scale(const RationalPolynomial& p, const RationalPolynomial& q,
                                  const Rational& c);
Rational poly_eval(const RationalPolynomial& p, const Rational& x);

/// Truncated series in the exponential convention: coefficient(n) is the
/// factor of t^n/n!. Products and quotients keep the operands' (common)
/// truncation order.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::vector<Rational> coefficients);

  /// 1 + 0*t + ... with the given order.
  static TruncatedSeries one(std::size_t order);

  /// EGF coefficients of (e^{a t} - 1)/(a t), i.e. a^n/(n+1). Requires a != 0.
  static TruncatedSeries exp_minus_one_over(const Rational& a, std::size_t order);

  /// EGF coefficients of e^{a t}, i.e. a^n.
  static TruncatedSeries exponential(const Rational& a, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size(); }
  const Rational& coefficient(std::size_t n) const { return coeffs_.at(n); }
  std::span<const Rational> coefficients() const noexcept { return coeffs_; }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<Rational> coeffs_;
};

/// Throws ErrorCode::InvalidArgument on mismatched orders.
TruncatedSeries series_multiply(const TruncatedSeries& a, const TruncatedSeries& b);

/// num / den. Throws ErrorCode::DivisionUndefined when den has a zero
/// constant term, ErrorCode::InvalidArgument on mismatched orders.
TruncatedSeries series_divide(const TruncatedSeries& num, const TruncatedSeries& den);

struct GcdLcm {
  std::int64_t gcd;
  std::int64_t lcm;
};

/// Throws ErrorCode::InvalidArgument on empty input, non-positive entries,
/// or an lcm that does not fit in 64 bits.
GcdLcm gcd_lcm_vec(std::span<const std::int64_t> values);

}  // namespace partrel
