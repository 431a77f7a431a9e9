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

#include "partrel/quasipoly.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>

#include "partrel/error.hpp"

namespace partrel {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::int64_t floor_mod(std::int64_t s, std::int64_t l) {
  const std::int64_t r = s % l;
  return r < 0 ? r + l : r;
}

// Newton divided differences, expanded into monomial coefficients.
RationalPolynomial interpolate(const std::vector<Rational>& nodes, std::vector<Rational> values) {
  const std::size_t n = nodes.size();
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      values[i] = (values[i] - values[i - 1]) / (nodes[i] - nodes[i - level]);
    }
  }
  RationalPolynomial acc;
  for (std::size_t i = n; i-- > 0;) {
    const RationalPolynomial factor(std::vector<Rational>{-nodes[i], Rational(1)});
    acc = acc * factor + RationalPolynomial::constant(values[i]);
  }
  return acc;
}

// Representative of n/l in (-1/2, 1/2].
double symmetric_frequency(std::int64_t n, std::int64_t l) {
  const std::int64_t rep = 2 * n > l ? n - l : n;
  return static_cast<double>(rep) / static_cast<double>(l);
}

}  // namespace

Quasipolynomial build_quasipoly(const GeneratorVector& d) {
  const std::int64_t period = gcd_lcm_vec(d.entries()).lcm;
  const auto m = static_cast<std::int64_t>(d.size());
  // m nodes per residue plus one period of headroom.
  const auto table = denumerant_table(d, period * m + period);

  std::vector<RationalPolynomial> polys;
  polys.reserve(static_cast<std::size_t>(period));
  std::vector<Rational> nodes(static_cast<std::size_t>(m));
  std::vector<Rational> values(static_cast<std::size_t>(m));
  for (std::int64_t r = 0; r < period; ++r) {
    for (std::int64_t i = 0; i < m; ++i) {
      const std::int64_t s = r + i * period;
      nodes[static_cast<std::size_t>(i)] = Rational(static_cast<long>(s));
      values[static_cast<std::size_t>(i)] = Rational(table[static_cast<std::size_t>(s)]);
    }
    polys.push_back(interpolate(nodes, values));
  }
  return Quasipolynomial(d, period, std::move(polys));
}

Rational qp_eval_integer(const Quasipolynomial& q, std::int64_t s) {
  const auto& poly = q.residue_poly(floor_mod(s, q.period()));
  return poly(Rational(static_cast<long>(s)));
}

double circulator_psi(std::int64_t j, double s) {
  if (j < 1) {
    throw Error(ErrorCode::InvalidArgument, "circulator order must be positive");
  }
  double re = 0.0;
  double im = 0.0;
  for (std::int64_t n = -(j / 2) + (j % 2 == 0 ? 1 : 0); n <= j / 2; ++n) {
    if (std::gcd(n < 0 ? -n : n, j) != 1) {
      continue;
    }
    const double angle = kTwoPi * static_cast<double>(n) * s / static_cast<double>(j);
    re += std::cos(angle);
    im += std::sin(angle);
  }
  assert(j == 2 ? std::abs(s - std::round(s)) > 0 || std::abs(im) < 1e-12 * std::max(1.0, std::abs(s))
                : std::abs(im) < 1e-12);
  (void)im;
  return re;
}

const SylvesterWave* WaveDecomposition::wave(std::int64_t j) const {
  const auto it = std::find_if(waves_.begin(), waves_.end(),
                               [j](const SylvesterWave& w) { return w.order == j; });
  return it == waves_.end() ? nullptr : &*it;
}

namespace {

double eval_frequency_form(const SylvesterWave& w, double x) {
  double total = 0.0;
  const std::size_t degree_count = w.amplitudes.size();
  for (std::size_t f = 0; f < w.frequencies.size(); ++f) {
    const double angle = kTwoPi * w.frequencies[f] * x;
    const std::complex<double> phase(std::cos(angle), std::sin(angle));
    std::complex<double> poly = 0.0;
    for (std::size_t k = degree_count; k-- > 0;) {
      poly = poly * x + w.amplitudes[k][f];
    }
    total += (poly * phase).real();
  }
  return total;
}

}  // namespace

double WaveDecomposition::eval_argument(double x) const {
  double total = 0.0;
  for (const auto& w : waves_) {
    total += eval_frequency_form(w, x);
  }
  return total;
}

double WaveDecomposition::eval_wave(std::int64_t j, double x) const {
  const auto* w = wave(j);
  return w == nullptr ? 0.0 : eval_frequency_form(*w, x);
}

double WaveDecomposition::eval_wave_via_circulators(std::int64_t j, double x) const {
  const auto* w = wave(j);
  if (w == nullptr) {
    return 0.0;
  }
  double total = 0.0;
  double power = 1.0;
  for (const auto& row : w->circulator_coeffs) {
    double inner = 0.0;
    for (std::size_t r = 1; r <= row.size(); ++r) {
      inner += row[r - 1] * circulator_psi(j, x - static_cast<double>(r));
    }
    total += power * inner;
    power *= x;
  }
  return total;
}

WaveDecomposition wave_decompose(const Quasipolynomial& q, std::int64_t delta) {
  if (delta < 1) {
    throw Error(ErrorCode::InvalidArgument, "s-multiplier must be positive");
  }
  const std::int64_t period = q.period();
  const auto ul = static_cast<std::size_t>(period);
  const std::size_t degrees = q.generators().size();

  std::vector<std::vector<double>> coeffs(degrees, std::vector<double>(ul));
  for (std::size_t r = 0; r < ul; ++r) {
    const auto& poly = q.residue_poly(static_cast<std::int64_t>(r));
    for (std::size_t k = 0; k < degrees; ++k) {
      coeffs[k][r] = poly.coefficient(k).get_d();
    }
  }

  // roots[t] = exp(-2 pi i t / L); exponents reduced mod L before use.
  std::vector<std::complex<double>> roots(ul);
  for (std::size_t t = 0; t < ul; ++t) {
    const double angle = -kTwoPi * static_cast<double>(t) / static_cast<double>(period);
    roots[t] = {std::cos(angle), std::sin(angle)};
  }

  // Waves present: the distinct divisors of the generators.
  std::map<std::int64_t, SylvesterWave> by_order;
  for (const auto g : q.generators().entries()) {
    for (std::int64_t j = 1; j <= g; ++j) {
      if (g % j == 0) {
        by_order[j].order = j;
      }
    }
  }
  for (auto& [j, w] : by_order) {
    w.amplitudes.assign(degrees, {});
  }

  for (std::int64_t n = 0; n < period; ++n) {
    const std::int64_t j = period / std::gcd(n, period);
    const auto it = by_order.find(j);
    if (it == by_order.end()) {
      continue;
    }
    SylvesterWave& w = it->second;
    w.frequencies.push_back(symmetric_frequency(n, period));
    for (std::size_t k = 0; k < degrees; ++k) {
      std::complex<double> acc = 0.0;
      for (std::size_t r = 0; r < ul; ++r) {
        acc += coeffs[k][r] * roots[(static_cast<std::size_t>(n) * r) % ul];
      }
      w.amplitudes[k].push_back(acc / static_cast<double>(period));
    }
  }

  std::vector<SylvesterWave> waves;
  waves.reserve(by_order.size());
  for (auto& [j, w] : by_order) {
    // C[k][r-1] = (1/j) sum_f a_k(f) exp(2 pi i theta_f r): inverse transform
    // restricted to the primitive frequencies of order j.
    w.circulator_coeffs.assign(degrees, std::vector<double>(static_cast<std::size_t>(j)));
    for (std::size_t k = 0; k < degrees; ++k) {
      for (std::int64_t r = 1; r <= j; ++r) {
        std::complex<double> acc = 0.0;
        for (std::size_t f = 0; f < w.frequencies.size(); ++f) {
          const double angle = kTwoPi * w.frequencies[f] * static_cast<double>(r);
          acc += w.amplitudes[k][f] * std::complex<double>(std::cos(angle), std::sin(angle));
        }
        w.circulator_coeffs[k][static_cast<std::size_t>(r - 1)] =
            acc.real() / static_cast<double>(j);
      }
    }
    waves.push_back(std::move(w));
  }
  return WaveDecomposition(q.generators(), period, delta, std::move(waves));
}

double wave_eval_real(const WaveDecomposition& wd, double s) {
  return wd.eval_argument(s * static_cast<double>(wd.s_multiplier()));
}

ParityReport check_parity(const Quasipolynomial& q, std::int64_t s_max) {
  if (s_max < 1) {
    throw Error(ErrorCode::InvalidArgument, "parity check needs s_max >= 1");
  }
  ParityReport report;
  report.s_max = s_max;
  report.sigma1 = q.generators().sigma(1);
  const std::int64_t sigma1 = report.sigma1.get_si();
  const int parity_sign = q.generators().size() % 2 == 1 ? 1 : -1;  // (-1)^{m+1}

  for (std::int64_t s = 1; s <= s_max; ++s) {
    const Rational lhs = qp_eval_integer(q, s);
    const Rational rhs = parity_sign * qp_eval_integer(q, -s - sigma1);
    if (lhs != rhs) {
      report.violations.push_back({s, lhs, rhs, "parity"});
    }
  }
  for (std::int64_t s = -sigma1 + 1; s < 0; ++s) {
    const Rational value = qp_eval_integer(q, s);
    if (value != 0) {
      report.violations.push_back({s, value, Rational(0), "zero"});
    }
  }
  return report;
}

}  // namespace partrel
