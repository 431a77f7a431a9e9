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

#include "partrel/algebra.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "partrel/error.hpp"

namespace partrel {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw Error(ErrorCode::DivisionUndefined, "rational with zero denominator");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  auto parse_integer = [&](std::string_view part) {
    std::string_view digits = part;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
      digits.remove_prefix(1);
    }
    if (digits.empty() ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw Error(ErrorCode::InvalidArgument, "malformed rational '" + std::string(text) + "'");
    }
    std::string owned(part.front() == '+' ? part.substr(1) : part);
    return Integer(owned, 10);
  };

  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text));
  }
  const Integer num = parse_integer(text.substr(0, slash));
  const Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) {
    throw Error(ErrorCode::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
  }
  return make_rational(num, den);
}

std::string to_string(const Rational& value) { return value.get_str(); }
std::string to_string(const Integer& value) { return value.get_str(); }

Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Integer ipow(std::int64_t base, unsigned exponent) {
  Integer out;
  const Integer b(static_cast<long>(base));
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), exponent);
  return out;
}

Rational rpow(const Rational& base, unsigned exponent) {
  Integer num;
  Integer den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  return make_rational(num, den);
}

// ---------------------------------------------------------------------------
// RationalPolynomial

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) {
  return RationalPolynomial(std::vector<Rational>{c});
}

RationalPolynomial RationalPolynomial::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> coeffs(k + 1);
  coeffs[k] = c;
  return RationalPolynomial(std::move(coeffs));
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) {
    coeffs_.pop_back();
  }
}

Rational RationalPolynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational RationalPolynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

double RationalPolynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + it->get_d();
  }
  return acc;
}

RationalPolynomial RationalPolynomial::compose_affine(const Rational& a, const Rational& b) const {
  // Horner in polynomial arithmetic: ((c_n)(as+b) + c_{n-1})(as+b) + ...
  const RationalPolynomial inner(std::vector<Rational>{b, a});
  RationalPolynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * inner + constant(*it);
  }
  return acc;
}

RationalPolynomial RationalPolynomial::operator-() const {
  RationalPolynomial out = *this;
  for (auto& c : out.coeffs_) {
    c = -c;
  }
  return out;
}

RationalPolynomial operator+(const RationalPolynomial& p, const RationalPolynomial& q) {
  return poly_add_scale(p, q, Rational(1));
}

RationalPolynomial operator-(const RationalPolynomial& p, const RationalPolynomial& q) {
  return poly_add_scale(p, q, Rational(-1));
}

RationalPolynomial operator*(const RationalPolynomial& p, const RationalPolynomial& q) {
  if (p.is_zero() || q.is_zero()) {
    return {};
  }
  std::vector<Rational> out(p.coeffs_.size() + q.coeffs_.size() - 1);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) {
      out[i + j] += p.coeffs_[i] * q.coeffs_[j];
    }
  }
  return RationalPolynomial(std::move(out));
}

RationalPolynomial operator*(const Rational& c, const RationalPolynomial& p) {
  std::vector<Rational> out(p.coeffs_.begin(), p.coeffs_.end());
  for (auto& x : out) {
    x *= c;
  }
  return RationalPolynomial(std::move(out));
}

std::string RationalPolynomial::to_string() const {
  if (is_zero()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  for (std::size_t idx = coeffs_.size(); idx-- > 0;) {
    const Rational& c = coeffs_[idx];
    if (c == 0) {
      continue;
    }
    const bool negative = c < 0;
    if (first) {
      os << (negative ? "-" : "");
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Rational mag = abs(c);
    if (idx == 0) {
      os << mag.get_str();
      continue;
    }
    const std::string power = idx == 1 ? "s" : "s^" + std::to_string(idx);
    const Integer& num = mag.get_num();
    const Integer& den = mag.get_den();
    if (num != 1) {
      os << num.get_str() << "*";
    }
    os << power;
    if (den != 1) {
      os << "/" << den.get_str();
    }
  }
  return os.str();
}

RationalPolynomial poly_add_scale(const RationalPolynomial& p, const RationalPolynomial& q,
                                  const Rational& c) {
  const auto pc = p.coefficients();
  const auto qc = q.coefficients();
  std::vector<Rational> out(std::max(pc.size(), qc.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < pc.size()) {
      out[i] = pc[i];
    }
    if (i < qc.size()) {
      out[i] += c * qc[i];
    }
  }
  return RationalPolynomial(std::move(out));
}

Rational poly_eval(const RationalPolynomial& p, const Rational& x) { return p(x); }

// ---------------------------------------------------------------------------
// TruncatedSeries

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) {
    throw Error(ErrorCode::InvalidArgument, "truncated series needs order >= 1");
  }
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
  std::vector<Rational> c(order);
  if (order > 0) {
    c[0] = 1;
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::exp_minus_one_over(const Rational& a, std::size_t order) {
  if (a == 0) {
    throw Error(ErrorCode::InvalidArgument, "(e^{at}-1)/(at) needs a != 0");
  }
  // (e^{at}-1)/(at) = sum_n a^n t^n/(n+1)!, so the EGF coefficient is a^n/(n+1).
  std::vector<Rational> c(order);
  Rational power = 1;
  for (std::size_t n = 0; n < order; ++n) {
    c[n] = power / Rational(static_cast<long>(n + 1));
    power *= a;
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::exponential(const Rational& a, std::size_t order) {
  std::vector<Rational> c(order);
  Rational power = 1;
  for (std::size_t n = 0; n < order; ++n) {
    c[n] = power;
    power *= a;
  }
  return TruncatedSeries(std::move(c));
}

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) {
    throw Error(ErrorCode::InvalidArgument, "series orders differ: " + std::to_string(a.order()) +
                                                " vs " + std::to_string(b.order()));
  }
}

}  // namespace

TruncatedSeries series_multiply(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  const std::size_t order = a.order();
  std::vector<Rational> out(order);
  for (std::size_t n = 0; n < order; ++n) {
    Rational acc = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      acc += Rational(binomial(n, k)) * a.coefficient(k) * b.coefficient(n - k);
    }
    out[n] = acc;
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries series_divide(const TruncatedSeries& num, const TruncatedSeries& den) {
  require_same_order(num, den);
  const Rational& lead = den.coefficient(0);
  if (lead == 0) {
    throw Error(ErrorCode::DivisionUndefined, "series divisor has zero constant term");
  }
  // num_n = sum_k C(n,k) q_k den_{n-k}, solved for q_n.
  const std::size_t order = num.order();
  std::vector<Rational> q(order);
  for (std::size_t n = 0; n < order; ++n) {
    Rational acc = num.coefficient(n);
    for (std::size_t k = 0; k < n; ++k) {
      acc -= Rational(binomial(n, k)) * q[k] * den.coefficient(n - k);
    }
    q[n] = acc / lead;
  }
  return TruncatedSeries(std::move(q));
}

GcdLcm gcd_lcm_vec(std::span<const std::int64_t> values) {
  if (values.empty()) {
    throw Error(ErrorCode::InvalidArgument, "gcd/lcm of an empty sequence");
  }
  std::int64_t g = 0;
  std::int64_t l = 1;
  for (const std::int64_t v : values) {
    if (v < 1) {
      throw Error(ErrorCode::InvalidArgument, "gcd/lcm entries must be positive");
    }
    g = std::gcd(g, v);
    const std::int64_t step = v / std::gcd(l, v);
    if (l > std::numeric_limits<std::int64_t>::max() / step) {
      throw Error(ErrorCode::InvalidArgument, "lcm overflows 64 bits");
    }
    l *= step;
  }
  return {g, l};
}

}  // namespace partrel
