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

#include "partrel/relations.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "partrel/bernoulli_bell.hpp"
#include "partrel/error.hpp"
#include "partrel/quasipoly.hpp"

namespace partrel {

DeltaVector::DeltaVector(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw Error(ErrorCode::InvalidArgument, "delta vector must not be empty");
  }
  for (const auto v : entries_) {
    if (v < 1) {
      throw Error(ErrorCode::InvalidArgument,
                  "delta entries must be positive, got " + std::to_string(v));
    }
  }
}

DeltaVector DeltaVector::unit(std::size_t m) {
  return DeltaVector(std::vector<std::int64_t>(m, 1));
}

std::string DeltaViolation::message() const {
  std::ostringstream os;
  switch (rule) {
    case DeltaRule::NonCoprimeColumn:
      os << "column " << i + 1 << " not coprime (gcd(delta, d) > 1)";
      break;
    case DeltaRule::Collinear:
      os << "columns " << i + 1 << "," << j + 1 << " collinear";
      break;
  }
  return os.str();
}

std::vector<DeltaViolation> validate_delta(const GeneratorVector& d, const DeltaVector& delta) {
  if (d.size() != delta.size()) {
    throw Error(ErrorCode::InvalidArgument, "d has " + std::to_string(d.size()) +
                                                " entries but delta has " +
                                                std::to_string(delta.size()));
  }
  std::vector<DeltaViolation> out;
  const std::size_t m = d.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (std::gcd(delta[i], d[i]) != 1) {
      out.push_back({DeltaRule::NonCoprimeColumn, i, i});
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (delta[i] * d[j] == delta[j] * d[i]) {
        out.push_back({DeltaRule::Collinear, i, j});
      }
    }
  }
  return out;
}

Relation generate_relation(const GeneratorVector& d, const DeltaVector& delta) {
  const auto violations = validate_delta(d, delta);
  if (!violations.empty()) {
    std::string what = "inadmissible delta:";
    for (const auto& v : violations) {
      what += " " + v.message() + ";";
    }
    what.pop_back();
    throw Error(ErrorCode::InvalidDelta, what);
  }
  const std::size_t m = d.size();
  std::vector<SignedTerm> terms;
  terms.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<std::int64_t> raw;
    raw.reserve(m);
    raw.push_back(d[i]);
    for (std::size_t j = 0; j < m; ++j) {
      if (j != i) raw.push_back(delta[i] * d[j] - delta[j] * d[i]);
    }
    terms.push_back(normalize_signed(raw, delta[i]));
  }
  return Relation(d, delta, std::move(terms));
}

std::int64_t Relation::coefficient(std::size_t i, std::size_t j) const {
  const auto raw = terms_.at(i).raw_generators();
  if (j >= raw.size()) throw Error(ErrorCode::InvalidArgument, "relation index out of range");
  if (j == i) return raw[0];
  return raw[j < i ? j + 1 : j];
}

std::vector<std::int64_t> lift_solution(std::span<const std::int64_t> x, const GeneratorVector& d,
                                        const DeltaVector& delta, std::int64_t sigma) {
  if (x.size() != d.size() || delta.size() != d.size()) {
    throw Error(ErrorCode::InvalidArgument, "lift_solution: length mismatch");
  }
  if (sigma < 0) {
    throw Error(ErrorCode::InvalidArgument, "lift_solution: sigma must be nonnegative");
  }
  std::vector<std::int64_t> out(x.begin(), x.end());
  std::int64_t extra = sigma;
  std::int64_t s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 0) {
      throw Error(ErrorCode::InvalidArgument, "lift_solution: negative solution entry");
    }
    extra += delta[i] * x[i];
    s += d[i] * x[i];
  }
  out.push_back(extra);

  // Both rows: sigma = x_{m+1} - delta . x and s = d . x.
  std::int64_t row0 = out.back();
  std::int64_t row1 = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    row0 -= delta[i] * out[i];
    row1 += d[i] * out[i];
  }
  if (row0 != sigma || row1 != s) {
    throw Error(ErrorCode::InvalidArgument, "lift_solution: lifted vector fails the system");
  }
  return out;
}

VerificationReport verify_relation_integer(const Relation& r, std::int64_t s_min,
                                           std::int64_t s_max) {
  if (s_min < 0 || s_max < s_min) {
    throw Error(ErrorCode::InvalidArgument, "verification range must satisfy 0 <= s_min <= s_max");
  }
  VerificationReport report;
  report.s_min = s_min;
  report.s_max = s_max;
  for (std::int64_t s = s_min; s <= s_max; ++s) {
    Integer w = denumerant(s, r.base());
    for (const auto& term : r.terms()) {
      w -= eval_signed_term(s, term);
    }
    if (w != 0) {
      report.violations.push_back({s, w});
    }
  }
  return report;
}

RationalPolynomial term_poly_part(const SignedTerm& term) {
  const RationalPolynomial part = poly_part(term.abs_generators());
  const RationalPolynomial shifted =
      part.compose_affine(Rational(static_cast<long>(term.s_multiplier())),
                          Rational(static_cast<long>(term.shift())));
  return term.sign() < 0 ? -shifted : shifted;
}

PolyRelationReport verify_poly_relation(const Relation& r) {
  PolyRelationReport report;
  report.base = poly_part(r.base());
  report.residual = report.base;
  for (const auto& term : r.terms()) {
    report.terms.push_back(term_poly_part(term));
    report.residual = report.residual - report.terms.back();
  }
  return report;
}

namespace {

Rational product_of(std::span<const Rational> values) {
  Rational acc = 1;
  for (const auto& v : values) {
    acc *= v;
  }
  return acc;
}

Rational sum_of_powers(std::span<const std::int64_t> values, unsigned r) {
  Integer acc = 0;
  for (const auto v : values) {
    acc += ipow(v, r);
  }
  return Rational(acc);
}

}  // namespace

std::vector<Rational> verify_bernoulli_relations(const Relation& r) {
  const std::size_t m = r.size();
  const auto base = to_rationals(r.base().entries());
  const auto base_numbers = higher_bernoulli_numbers(base, m - 1);
  const Rational base_product = product_of(base);

  std::vector<std::vector<Rational>> term_numbers;
  std::vector<Rational> term_products;
  for (const auto& term : r.terms()) {
    const auto raw = to_rationals(term.raw_generators());
    term_numbers.push_back(higher_bernoulli_numbers(raw, m - 1));
    term_products.push_back(product_of(raw));
  }

  std::vector<Rational> out(m);
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t n = m - k - 1;
    Rational acc = base_numbers[n] / base_product;
    for (std::size_t i = 0; i < m; ++i) {
      const Rational scale(ipow(r.delta()[i], static_cast<unsigned>(k)));
      acc -= scale * term_numbers[i][n] / term_products[i];
    }
    out[k] = acc;
  }
  return out;
}

bool NumericIdentities::all_one() const {
  return sigma_sum_ratio == 1 && lead_term == 1 && (!second_term || *second_term == 1) &&
         (!third_term || *third_term == 1);
}

NumericIdentities numeric_identities(const Relation& r) {
  const std::size_t m = r.size();
  const Rational pi_d(r.base().product());
  const Rational sigma1(r.base().sigma(1));
  const Rational sigma2(r.base().sigma(2));

  NumericIdentities out;
  Rational sigma_total = 0;
  Rational lead = 0;
  Rational second = 0;
  Rational third = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const auto raw = r.terms()[i].raw_generators();
    const Rational pi_i = product_of(to_rationals(raw));
    const Rational s1 = sum_of_powers(raw, 1);
    const Rational s2 = sum_of_powers(raw, 2);
    const std::int64_t delta = r.delta()[i];
    auto delta_pow = [&](std::size_t e) { return Rational(ipow(delta, static_cast<unsigned>(e))); };

    out.sigma1_terms.push_back(s1.get_num());
    out.sigma2_terms.push_back(s2.get_num());
    sigma_total += s1;

    out.lead_summands.push_back(pi_d * delta_pow(m - 1) / pi_i);
    lead += out.lead_summands.back();

    if (m >= 2) {
      out.second_summands.push_back(delta_pow(m - 2) * s1 / pi_i);
      second += out.second_summands.back();
    }
    if (m >= 3) {
      out.third_summands.push_back(delta_pow(m - 3) * (3 * s1 * s1 - s2) / pi_i);
      third += out.third_summands.back();
    }
  }
  out.sigma_sum_ratio = sigma_total / sigma1;
  out.lead_term = lead;
  if (m >= 2) {
    out.second_prefactor = pi_d / sigma1;
    out.second_term = *out.second_prefactor * second;
  }
  if (m >= 3) {
    out.third_prefactor = pi_d / (3 * sigma1 * sigma1 - sigma2);
    out.third_term = *out.third_prefactor * third;
  }
  return out;
}

Rational check_bell_conjecture(std::span<const Rational> x, std::span<const Rational> y,
                               std::size_t k) {
  const std::size_t m = x.size();
  if (m == 0 || y.size() != m) {
    throw Error(ErrorCode::InvalidArgument, "conjecture needs x and y of equal nonzero length");
  }
  if (k >= m) {
    throw Error(ErrorCode::InvalidArgument, "conjecture needs k < m");
  }
  const Rational pi_x = product_of(x);
  if (pi_x == 0) {
    throw Error(ErrorCode::DegenerateInput, "pi(x) = 0");
  }
  const std::size_t n = m - k - 1;
  Rational acc = higher_bernoulli_number(n, x) / pi_x;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Rational> row(m);
    for (std::size_t j = 0; j < m; ++j) {
      row[j] = y[i] * x[j] - y[j] * x[i];
      if (i == j) {
        row[j] += x[i];
      }
    }
    const Rational pi_row = product_of(row);
    if (pi_row == 0) {
      throw Error(ErrorCode::DegenerateInput, "pi(s_" + std::to_string(i + 1) + ") = 0");
    }
    acc -= rpow(y[i], static_cast<unsigned>(k)) * higher_bernoulli_number(n, row) / pi_row;
  }
  return acc;
}

std::vector<ProfileSample> relation_continuous_profile(const Relation& r, double s_lo,
                                                       double s_hi, double step) {
  if (!(step > 0.0) || !(s_lo <= s_hi) || !std::isfinite(s_lo) || !std::isfinite(s_hi)) {
    throw Error(ErrorCode::InvalidArgument, "profile grid needs finite lo <= hi and step > 0");
  }
  const WaveDecomposition base = wave_decompose(build_quasipoly(r.base()), 1);
  std::vector<WaveDecomposition> terms;
  terms.reserve(r.size());
  for (const auto& term : r.terms()) {
    terms.push_back(wave_decompose(build_quasipoly(term.abs_generators()), term.s_multiplier()));
  }

  const auto count = static_cast<std::size_t>(std::floor((s_hi - s_lo) / step + 1e-9)) + 1;
  std::vector<ProfileSample> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    double s = s_lo + static_cast<double>(i) * step;
    const double nearest = std::round(s);
    const bool is_integer = std::abs(s - nearest) < 1e-9;
    if (is_integer) {
      s = nearest;
    }
    double w = wave_eval_real(base, s);
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const auto& term = r.terms()[t];
      const double argument = s * static_cast<double>(term.s_multiplier()) +
                              static_cast<double>(term.shift());
      w -= term.sign() * terms[t].eval_argument(argument);
    }
    out.push_back({s, w, is_integer});
  }
  return out;
}

InstanceSampler::InstanceSampler(std::uint64_t seed) : seed_(seed), engine_(seed) {}

std::int64_t InstanceSampler::uniform(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

GeneratorVector InstanceSampler::generators(std::size_t min_m, std::size_t max_m,
                                            std::int64_t max_d) {
  const auto m = static_cast<std::size_t>(
      uniform(static_cast<std::int64_t>(min_m), static_cast<std::int64_t>(max_m)));
  std::vector<std::int64_t> d(m);
  for (auto& v : d) {
    v = uniform(1, max_d);
  }
  return GeneratorVector(std::move(d));
}

std::pair<GeneratorVector, DeltaVector> InstanceSampler::admissible(std::size_t max_m,
                                                                    std::int64_t max_d,
                                                                    std::int64_t max_delta) {
  for (;;) {
    GeneratorVector d = generators(1, max_m, max_d);
    std::vector<std::int64_t> delta(d.size());
    for (auto& v : delta) {
      v = uniform(1, max_delta);
    }
    DeltaVector dv(std::move(delta));
    if (validate_delta(d, dv).empty()) {
      return {std::move(d), std::move(dv)};
    }
  }
}

Rational InstanceSampler::nonzero_rational(std::int64_t max_num, std::int64_t max_den) {
  std::int64_t num = 0;
  while (num == 0) {
    num = uniform(-max_num, max_num);
  }
  const std::int64_t den = uniform(1, max_den);
  return make_rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
}

ConjectureSuiteReport conjecture_suite(std::size_t m, std::size_t draws, std::uint64_t seed) {
  if (m == 0) {
    throw Error(ErrorCode::InvalidArgument, "conjecture suite needs m >= 1");
  }
  ConjectureSuiteReport report;
  report.seed = seed;
  report.m = m;
  InstanceSampler sampler(seed);
  while (report.draws < draws) {
    std::vector<Rational> x(m);
    std::vector<Rational> y(m);
    for (std::size_t i = 0; i < m; ++i) {
      x[i] = sampler.nonzero_rational(9, 5);
      y[i] = sampler.nonzero_rational(9, 5);
    }
    std::vector<Rational> values;
    try {
      for (std::size_t k = 0; k < m; ++k) {
        values.push_back(check_bell_conjecture(x, y, k));
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateInput) {
        throw;
      }
      ++report.rejected_degenerate;
      continue;
    }
    ++report.draws;
    for (std::size_t k = 0; k < m; ++k) {
      ++report.evaluations;
      if (values[k] != 0) {
        report.counterexamples.push_back({x, y, k, values[k]});
      }
    }
  }
  return report;
}

}  // namespace partrel
