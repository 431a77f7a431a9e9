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

#include <random>

#include "partrel/algebra.hpp"
#include "partrel/error.hpp"

using partrel::Rational;
using partrel::RationalPolynomial;
using partrel::TruncatedSeries;

namespace {

RationalPolynomial poly(std::initializer_list<const char*> coeffs) {
  std::vector<Rational> out;
  for (const char* c : coeffs) {
    out.push_back(partrel::parse_rational(c));
  }
  return RationalPolynomial(std::move(out));
}

// Bernoulli numbers from sum_{k=0}^{n} C(n+1,k) B_k = 0; independent of the
// series code.
std::vector<Rational> bernoulli_by_recurrence(std::size_t n_max) {
  std::vector<Rational> b(n_max + 1);
  b[0] = 1;
  for (std::size_t n = 1; n <= n_max; ++n) {
    Rational acc = 0;
    for (std::size_t k = 0; k < n; ++k) {
      acc += Rational(partrel::binomial(n + 1, k)) * b[k];
    }
    b[n] = -acc / Rational(static_cast<long>(n + 1));
  }
  return b;
}

Rational small_rational(std::mt19937_64& rng) {
  const long num = static_cast<long>(rng() % 19) - 9;
  const long den = static_cast<long>(rng() % 6) + 1;
  return partrel::make_rational(num, den);
}

}  // namespace

TEST_CASE("rational parsing and canonical form") {
  CHECK(partrel::to_string(partrel::parse_rational("6/8")) == "3/4");
  CHECK(partrel::to_string(partrel::parse_rational("-437/3024")) == "-437/3024");
  CHECK(partrel::to_string(partrel::parse_rational("4/-2")) == "-2");
  CHECK(partrel::parse_rational("+7") == 7);
  CHECK_THROWS_AS(partrel::parse_rational("1/0"), partrel::Error);
  CHECK_THROWS_AS(partrel::parse_rational("abc"), partrel::Error);
  CHECK_THROWS_AS(partrel::parse_rational(""), partrel::Error);
  const Rational r = partrel::make_rational(10, -4);
  CHECK(r.get_den() > 0);
  CHECK(r == Rational(-5, 2));
}

TEST_CASE("poly_add_scale") {
  const auto p = poly({"1", "1"});   // s + 1
  const auto q = poly({"-1", "1"});  // s - 1
  CHECK(partrel::poly_add_scale(p, q, 1) == poly({"0", "2"}));
  CHECK(partrel::poly_add_scale(p, q, 0) == p);

  const auto sq = RationalPolynomial::monomial(1, 2);
  const auto zero = partrel::poly_add_scale(sq, sq, -1);
  CHECK(zero.is_zero());
  CHECK(zero.degree() == -1);
}

TEST_CASE("poly_eval") {
  const auto w1 = poly({"113/336", "437/3024", "1/56", "1/1512"});
  CHECK(partrel::poly_eval(w1, 0) == Rational(113, 336));
  CHECK(partrel::poly_eval(RationalPolynomial(), Rational(7, 3)) == 0);
  CHECK(partrel::poly_eval(RationalPolynomial::monomial(1, 2), Rational(-3, 2)) == Rational(9, 4));
}

TEST_CASE("compose_affine and to_string") {
  const auto p = poly({"1", "2", "3"});  // 3s^2 + 2s + 1
  // p(2s - 1) = 3(4s^2 - 4s + 1) + 2(2s - 1) + 1 = 12s^2 - 8s + 2
  CHECK(p.compose_affine(2, -1) == poly({"2", "-8", "12"}));
  CHECK(poly({"113/336", "437/3024", "1/56", "1/1512"}).to_string() ==
        "s^3/1512 + s^2/56 + 437*s/3024 + 113/336");
  CHECK(poly({"-23/96", "-13/54", "-1/16", "-1/216"}).to_string() ==
        "-s^3/216 - s^2/16 - 13*s/54 - 23/96");
}

TEST_CASE("eval is a ring homomorphism on random polynomials") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rational> a(rng() % 5 + 1);
    std::vector<Rational> b(rng() % 5 + 1);
    for (auto& c : a) c = small_rational(rng);
    for (auto& c : b) c = small_rational(rng);
    const RationalPolynomial p(a);
    const RationalPolynomial q(b);
    const Rational x = small_rational(rng);
    CHECK((p * q)(x) == p(x) * q(x));
    CHECK((p + q)(x) == p(x) + q(x));
  }
}

TEST_CASE("series_divide reproduces Bernoulli numbers") {
  constexpr std::size_t order = 16;
  const auto b = partrel::series_divide(TruncatedSeries::one(order),
                                        TruncatedSeries::exp_minus_one_over(1, order));
  const auto oracle = bernoulli_by_recurrence(order - 1);
  for (std::size_t n = 0; n < order; ++n) {
    CHECK(b.coefficient(n) == oracle[n]);
  }
  CHECK(b.coefficient(1) == Rational(-1, 2));
  CHECK(b.coefficient(2) == Rational(1, 6));
  CHECK(b.coefficient(3) == 0);
  CHECK(b.coefficient(4) == Rational(-1, 30));
}

TEST_CASE("series_divide identity, shift and error cases") {
  constexpr std::size_t order = 8;
  const auto den = TruncatedSeries::exp_minus_one_over(3, order);
  CHECK(partrel::series_divide(den, den) == TruncatedSeries::one(order));

  // t in EGF form is (0, 1, 0, ...); t*den divided by den gives t back.
  std::vector<Rational> t(order);
  t[1] = 1;
  const TruncatedSeries t_series(t);
  CHECK(partrel::series_divide(partrel::series_multiply(t_series, den), den) == t_series);

  std::vector<Rational> no_constant(order);
  no_constant[1] = 1;
  CHECK_THROWS_AS(partrel::series_divide(TruncatedSeries::one(order), TruncatedSeries(no_constant)),
                  partrel::Error);
  try {
    partrel::series_divide(TruncatedSeries::one(order), TruncatedSeries(no_constant));
  } catch (const partrel::Error& e) {
    CHECK(e.code() == partrel::ErrorCode::DivisionUndefined);
  }
  CHECK_THROWS_AS(partrel::series_multiply(TruncatedSeries::one(3), TruncatedSeries::one(4)),
                  partrel::Error);
}

TEST_CASE("series multiply/divide round trip on random series") {
  std::mt19937_64 rng(5);
  constexpr std::size_t order = 12;
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Rational> a(order);
    std::vector<Rational> b(order);
    for (auto& c : a) c = small_rational(rng);
    for (auto& c : b) c = small_rational(rng);
    if (b[0] == 0) b[0] = 1;
    const TruncatedSeries sa(a);
    const TruncatedSeries sb(b);
    CHECK(partrel::series_divide(partrel::series_multiply(sa, sb), sb) == sa);
  }
}

TEST_CASE("gcd_lcm_vec") {
  const std::vector<std::int64_t> a{2, 3, 6, 7};
  CHECK(partrel::gcd_lcm_vec(a).gcd == 1);
  CHECK(partrel::gcd_lcm_vec(a).lcm == 42);
  const std::vector<std::int64_t> b{4};
  CHECK(partrel::gcd_lcm_vec(b).gcd == 4);
  CHECK(partrel::gcd_lcm_vec(b).lcm == 4);
  const std::vector<std::int64_t> c{2, 2, 5, 7};
  CHECK(partrel::gcd_lcm_vec(c).gcd == 1);
  CHECK(partrel::gcd_lcm_vec(c).lcm == 70);
  CHECK_THROWS_AS(partrel::gcd_lcm_vec(std::vector<std::int64_t>{}), partrel::Error);
  CHECK_THROWS_AS(partrel::gcd_lcm_vec(std::vector<std::int64_t>{3, 0}), partrel::Error);
}
