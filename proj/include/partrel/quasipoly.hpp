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

// Exact quasipolynomial form of W(s, d) and its decomposition into
// Sylvester waves, used for the continuous extension of W to real s.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "partrel/algebra.hpp"
#include "partrel/denumerant.hpp"

namespace partrel {

/// W(s, d) = residue_poly(s mod L)(s) for every integer s, L = lcm(d).
/// Agrees with the counting function for s > -sigma_1(d); below that it is
/// the analytic continuation.
class Quasipolynomial {
 public:
  std::int64_t period() const noexcept { return period_; }
  int degree_bound() const noexcept { return static_cast<int>(generators_.size()) - 1; }
  const GeneratorVector& generators() const noexcept { return generators_; }
  const RationalPolynomial& residue_poly(std::int64_t r) const {
    return residue_polys_.at(static_cast<std::size_t>(r));
  }
  const std::vector<RationalPolynomial>& residue_polys() const noexcept { return residue_polys_; }

 private:
  friend Quasipolynomial build_quasipoly(const GeneratorVector& d);

  Quasipolynomial(GeneratorVector d, std::int64_t period, std::vector<RationalPolynomial> polys)
      : generators_(std::move(d)), period_(period), residue_polys_(std::move(polys)) {}

  GeneratorVector generators_;
  std::int64_t period_;
  std::vector<RationalPolynomial> residue_polys_;
};

/// Interpolates each residue class r mod L through the m samples
/// s = r, r+L, ..., r+(m-1)L of the counting table.
Quasipolynomial build_quasipoly(const GeneratorVector& d);

/// Residue taken with floored modulus, so negative s is well defined.
Rational qp_eval_integer(const Quasipolynomial& q, std::int64_t s);

/// Cayley's prime radical circulator: the sum of rho^s over the primitive
/// j-th roots of unity. Frequencies use the representatives n/j in
/// (-1/2, 1/2], so conjugate roots pair up and the value is real for
/// real s (j = 2 has the single unpaired root -1; its real part cos(pi s)
/// is returned). At integer s this is the Ramanujan sum c_j(s).
double circulator_psi(std::int64_t j, double s);

/// One Sylvester wave: the part of W built on the primitive j-th roots.
///   W_j(x) = sum_k x^k sum_{r=1..j} C[k][r-1] * Psi_j(x - r)
/// The same function is also kept in frequency form,
///   W_j(x) = Re sum_k x^k sum_f amplitude[k][f] * exp(2 pi i theta_f x),
/// which is what evaluation uses.
struct SylvesterWave {
  std::int64_t order = 1;                                // j
  std::vector<std::vector<double>> circulator_coeffs;    // [k][r-1], r = 1..j
  std::vector<double> frequencies;                       // theta_f in (-1/2, 1/2]
  std::vector<std::vector<std::complex<double>>> amplitudes;  // [k][f]
};

class WaveDecomposition {
 public:
  std::int64_t period() const noexcept { return period_; }
  std::int64_t s_multiplier() const noexcept { return s_multiplier_; }
  const GeneratorVector& generators() const noexcept { return generators_; }
  const std::vector<SylvesterWave>& waves() const noexcept { return waves_; }

  /// Wave with the given order, or nullptr when W has no such wave.
  const SylvesterWave* wave(std::int64_t j) const;

  /// Continuous extension of W at argument x (no multiplier applied).
  double eval_argument(double x) const;

  /// Single wave W_j at argument x; zero when absent.
  double eval_wave(std::int64_t j, double x) const;

  /// Same as eval_wave but summed through circulator_psi; slower, used to
  /// cross-check the frequency form.
  double eval_wave_via_circulators(std::int64_t j, double x) const;

 private:
  friend WaveDecomposition wave_decompose(const Quasipolynomial& q, std::int64_t delta);

  WaveDecomposition(GeneratorVector d, std::int64_t period, std::int64_t delta,
                    std::vector<SylvesterWave> waves)
      : generators_(std::move(d)), period_(period), s_multiplier_(delta),
        waves_(std::move(waves)) {}

  GeneratorVector generators_;
  std::int64_t period_;
  std::int64_t s_multiplier_;
  std::vector<SylvesterWave> waves_;  // ascending order j; waves_[0] is j = 1
};

/// Discrete Fourier transform of each coefficient sequence c_k(r), r mod L,
/// with frequency n grouped into the wave of order L / gcd(n, L).
WaveDecomposition wave_decompose(const Quasipolynomial& q, std::int64_t delta = 1);

/// Extension evaluated at s * delta.
double wave_eval_real(const WaveDecomposition& wd, double s);

struct ParityViolation {
  std::int64_t s;
  Rational lhs;
  Rational rhs;
  std::string rule;
};

struct ParityReport {
  std::int64_t s_max = 0;
  Integer sigma1;
  std::vector<ParityViolation> violations;
  bool passed() const noexcept { return violations.empty(); }
};

/// Checks W(s) = (-1)^{m+1} W(-s - sigma_1) for 1 <= s <= s_max and
/// W(s') = 0 for -sigma_1 < s' < 0, both on the exact continuation.
ParityReport check_parity(const Quasipolynomial& q, std::int64_t s_max);

}  // namespace partrel
