// Copyright 2026 The qcss Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcss/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "qcss/bounds.hpp"
#include "qcss/channels.hpp"
#include "qcss/codec.hpp"
#include "qcss/codes.hpp"
#include "qcss/qstate.hpp"

namespace qcss::verify {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

CheckResult result(std::string name, bool pass, std::string detail) {
  return CheckResult{std::move(name), pass, std::move(detail)};
}

Amplitude random_amp(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  return Amplitude(u(rng), u(rng));
}

// Normalized logical pair (a, b), bounded away from the poles so the
// coherence factor stays well conditioned.
std::pair<Amplitude, Amplitude> random_logical(std::mt19937_64& rng) {
  for (;;) {
    Amplitude a = random_amp(rng), b = random_amp(rng);
    const double n = std::sqrt(std::norm(a) + std::norm(b));
    if (n < 1e-3) continue;
    a /= n;
    b /= n;
    if (std::abs(a) > 0.2 && std::abs(b) > 0.2) return {a, b};
  }
}

}  // namespace

CheckResult check_dual_support() {
  const LinearCode codes[] = {zoo::repetition3(), zoo::even_parity3(),
                              zoo::hamming7(), zoo::simplex7()};
  double worst_spread = 0;
  for (const LinearCode& c : codes) {
    const auto words = c.codewords();
    const QuantumState s = state_from_words(words);
    const auto support = support_in_basis2(s);
    const auto expected = c.dual().codewords();
    if (support != expected) {
      return result("dual-support", false,
                    "basis-2 support of [" + std::to_string(c.n()) + "," +
                        std::to_string(c.k()) +
                        "] superposition differs from the dual code");
    }
    const QuantumState rotated = basis2_transform(
        s, [&] {
          std::vector<int> all(static_cast<std::size_t>(c.n()));
          for (int q = 0; q < c.n(); ++q) all[static_cast<std::size_t>(q)] = q;
          return all;
        }());
    double lo = 2, hi = 0;
    for (const BitWord& w : expected) {
      const double mag = std::abs(rotated.amp(w.value()));
      lo = std::min(lo, mag);
      hi = std::max(hi, mag);
    }
    worst_spread = std::max(worst_spread, hi - lo);
  }
  return result("dual-support", worst_spread < 1e-8,
                "4 codes; amplitude magnitude spread " + fmt(worst_spread));
}

CheckResult check_interference_law() {
  const BinaryMatrix gen = zoo::simplex_generator();
  double worst = 0;
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      for (int k = 0; k < 8; ++k) {
        const double phi[3] = {2 * std::numbers::pi * i / 8,
                               2 * std::numbers::pi * j / 8,
                               2 * std::numbers::pi * k / 8};
        const QuantumState s =
            state_from_generator({gen, {phi[0], phi[1], phi[2]}});
        for (int r = 0; r < 3; ++r) {
          const double got = parity_check_probability(s, gen.row(r));
          const double want = std::pow(std::cos(phi[r] / 2), 2);
          worst = std::max(worst, std::abs(got - want));
        }
      }
    }
  }
  return result("interference-law", worst < 1e-10,
                "8x8x8 phase grid; worst deviation " + fmt(worst));
}

CheckResult check_encoded_form() {
  const CssTriple css = zoo::three_qubit_triple();
  std::mt19937_64 rng(11);
  double worst = 0;
  for (int t = 0; t < 20; ++t) {
    const auto [a, b] = random_logical(rng);
    const QuantumState got = encode(css, {a, b});
    QuantumState want(3);
    want.set_amp(0, a + b);
    want.set_amp(7, a - b);
    want.normalize();
    for (int q = 0; q < 3; ++q) want.hadamard(q);
    worst = std::max(worst, 1.0 - got.fidelity(want));
  }
  return result("encoded-form", worst < 1e-12,
                "20 random logical states; worst fidelity deficit " +
                    fmt(worst));
}

CheckResult check_phase_error_alpha() {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  std::uniform_real_distribution<double> strength(1e-6, 1.0);

  double worst = 0;
  for (int t = 0; t < 100; ++t) {
    const auto [a, b] = random_logical(rng);
    const AlphaResult r = run_phase_error_experiment(
        angle(rng), angle(rng), angle(rng), strength(rng), a, b);
    worst = std::max(worst, std::abs(r.alpha - r.alpha_closed_form));
  }
  if (worst >= 1e-10) {
    return result("phase-error-alpha", false,
                  "closed-form mismatch " + fmt(worst));
  }

  double worst_single = 0;
  for (int q = 0; q < 3; ++q) {
    double phi[3] = {0, 0, 0};
    phi[q] = 1.3;
    const AlphaResult r =
        run_phase_error_experiment(phi[0], phi[1], phi[2], 0.7,
                                   Amplitude{0.6}, Amplitude{0.8});
    worst_single = std::max(worst_single, std::abs(r.alpha - 1.0));
  }
  if (worst_single >= 1e-12) {
    return result("phase-error-alpha", false,
                  "single-angle case not restored exactly: deviation " +
                      fmt(worst_single));
  }

  // Least-squares slope of log|1 - alpha| against log eps.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const int pts = 10;
  for (int i = 0; i < pts; ++i) {
    const double eps = std::pow(10.0, -3.0 + 2.0 * i / (pts - 1));
    const AlphaResult r = run_phase_error_experiment(
        0.9, 1.1, 1.3, eps, Amplitude{0.6}, Amplitude{0.8});
    const double x = std::log(eps);
    const double y = std::log(std::abs(r.alpha - 1.0));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double slope = (pts * sxy - sx * sy) / (pts * sxx - sx * sx);
  return result("phase-error-alpha", std::abs(slope - 3.0) < 0.1,
                "100 random runs ok (worst " + fmt(worst) +
                    "); cubic scaling slope " + fmt(slope));
}

CheckResult check_purity_amplification() {
  double worst = 0;
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      for (int k = 0; k < 5; ++k) {
        const double e0 = i / 4.0, e1 = j / 4.0, e2 = k / 4.0;
        const AlphaResult r = run_purity_amplification(
            e0, e1, e2, Amplitude{0.6}, Amplitude{0.8});
        worst = std::max(worst, std::abs(r.alpha - r.alpha_closed_form));
      }
    }
  }
  if (worst >= 1e-10) {
    return result("purity-amplification", false,
                  "closed-form mismatch " + fmt(worst));
  }
  for (int q = 0; q < 3; ++q) {
    double e[3] = {0, 0, 0};
    e[q] = 0.8;
    const AlphaResult r = run_purity_amplification(e[0], e[1], e[2],
                                                   Amplitude{0.6},
                                                   Amplitude{0.8});
    if (std::abs(r.alpha - 1.0) >= 1e-10) {
      return result("purity-amplification", false,
                    "single-qubit entanglement not corrected exactly");
    }
  }
  for (double e : {0.2, 0.5, 0.9}) {
    const AlphaResult r =
        run_purity_amplification(e, e, e, Amplitude{0.6}, Amplitude{0.8});
    if (!(r.alpha.real() > 1.0 - e)) {
      return result("purity-amplification", false,
                    "corrected coherence not above uncorrected at eps " +
                        fmt(e));
    }
  }
  return result("purity-amplification", true,
                "5x5x5 grid; worst closed-form deviation " + fmt(worst));
}

CheckResult check_coset_sum_identity() {
  double worst = 0;
  const LinearCode four = LinearCode::from_generator(
      BinaryMatrix{"0011", "1100"});
  for (std::uint32_t j = 0; j < 2; ++j) {
    worst = std::max(worst, coset_sum_identity_check(four, {0}, j));
  }
  const LinearCode simplex = zoo::simplex7();
  for (int q = 0; q < 7; ++q) {
    for (std::uint32_t j = 0; j < 2; ++j) {
      worst = std::max(worst, coset_sum_identity_check(simplex, {q}, j));
    }
  }
  return result("coset-sum-identity", worst < 1e-10,
                "4-bit example and simplex single positions; worst " +
                    fmt(worst));
}

CheckResult check_recovery_end_to_end() {
  const CssTriple css = zoo::steane_triple();
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> pick_qubit(0, 6);
  std::uniform_real_distribution<double> pick_eps(0.05, 1.0);

  double worst_fid = 1, worst_purity = 1;
  for (int t = 0; t < 200; ++t) {
    const int q = pick_qubit(rng);
    DefectionSpec defect;
    switch (t % 5) {
      case 0:
        defect = DefectionSpec::from_entangle(q, pick_eps(rng));
        break;
      case 1:
        defect = DefectionSpec::from_unitary(
            q, {{{Amplitude{0}, Amplitude{1}},
                 {Amplitude{1}, Amplitude{0}}}});
        break;
      case 2:
        defect = DefectionSpec::from_unitary(
            q, {{{Amplitude{1}, Amplitude{0}},
                 {Amplitude{0}, Amplitude{-1}}}});
        break;
      default:
        defect = DefectionSpec::random({q}, rng());
        break;
    }
    const auto [a, b] = random_logical(rng);
    const RecoveryResult r = run_theorem6_recovery(css, {a, b}, defect);
    worst_fid = std::min(worst_fid, r.fidelity);
    worst_purity = std::min(worst_purity, r.purity);
  }
  return result("recovery-end-to-end",
                worst_fid >= 1 - 1e-9 && worst_purity >= 1 - 1e-9,
                "200 single-qubit defections; worst fidelity " +
                    fmt(worst_fid) + ", worst purity " + fmt(worst_purity));
}

CheckResult check_exhaustive_flips() {
  const CssTriple css = zoo::steane_triple();
  double worst = 1;
  for (int q = 0; q < 7; ++q) {
    const DefectionSpec flip1 = DefectionSpec::from_unitary(
        q, {{{Amplitude{0}, Amplitude{1}}, {Amplitude{1}, Amplitude{0}}}});
    const DefectionSpec flip2 = DefectionSpec::from_unitary(
        q, {{{Amplitude{1}, Amplitude{0}}, {Amplitude{0}, Amplitude{-1}}}});
    for (const DefectionSpec& d : {flip1, flip2}) {
      const RecoveryResult r = run_theorem6_recovery(
          css, {Amplitude{0.6}, Amplitude{0.8}}, d);
      worst = std::min(worst, std::min(r.fidelity, r.purity));
    }
  }
  return result("exhaustive-flips", worst >= 1 - 1e-12,
                "14 single flips; worst fidelity/purity " + fmt(worst));
}

CheckResult check_rate_bounds() {
  const double h_inv = inverse_entropy(0.5);
  const auto [p_lo, p_hi] = threshold_summary();
  bool ok = std::abs(h_inv - 0.110028) < 1e-5 &&
            std::abs(p_lo - 0.055014) < 1e-5 &&
            std::abs(p_hi - 0.110028) < 1e-5;
  const auto rows = emit_rate_curves({0.110028, 0.220056});
  ok = ok && std::abs(rows[1].upper) < 1e-4 && std::abs(rows[0].lower) < 1e-4;
  return result("rate-bounds", ok,
                "inverse entropy " + fmt(h_inv) + "; thresholds (" +
                    fmt(p_lo) + ", " + fmt(p_hi) + "); curve zeros " +
                    fmt(rows[1].upper) + ", " + fmt(rows[0].lower));
}

CheckResult check_survival_example() {
  const SurvivalReport a = survival(10000, 0.04, 939, 10000);
  const SurvivalReport b = survival(10000, 0.03, 939, 10000);
  const bool p_ok = a.p_exact >= 0.003 && a.p_exact <= 0.03;
  const bool tail_ok =
      b.one_minus_f_exact >= 4e-24 && b.one_minus_f_exact <= 4e-22;
  return result("survival-example", p_ok && tail_ok,
                "exact block survival " + fmt(a.p_exact) +
                    " (normal approx " + fmt(a.p_erf) +
                    "); exact failure tail at p=0.03 " +
                    fmt(b.one_minus_f_exact) + " (normal approx " +
                    fmt(b.one_minus_f_erf) + ")");
}

namespace {

// Exact rational binomial head/tail sums; p = num/100.
std::pair<double, double> rational_binomial(int n, int p_hundredths, int x) {
  using boost::multiprecision::cpp_int;
  cpp_int head = 0, tail = 0;
  cpp_int binom = 1;
  for (int i = 0; i <= n; ++i) {
    cpp_int term = binom;
    for (int j = 0; j < i; ++j) term *= p_hundredths;
    for (int j = 0; j < n - i; ++j) term *= 100 - p_hundredths;
    (i <= x ? head : tail) += term;
    binom = binom * (n - i) / (i + 1);
  }
  cpp_int denom = 1;
  for (int j = 0; j < n; ++j) denom *= 100;
  return {head.convert_to<double>() / denom.convert_to<double>(),
          tail.convert_to<double>() / denom.convert_to<double>()};
}

}  // namespace

CheckResult check_binomial_oracles() {
  struct Case {
    int n, p_hundredths, x;
  };
  const Case cases[] = {{30, 5, 2}, {25, 30, 7}, {12, 50, 5}, {30, 96, 14}};
  double worst_rel = 0;
  for (const Case& c : cases) {
    const auto [f, tail] = rational_binomial(c.n, c.p_hundredths, c.x);
    const SurvivalReport r =
        survival(c.n, c.p_hundredths / 100.0, 2 * c.x + 1, 1);
    worst_rel = std::max(worst_rel, std::abs(r.f_exact - f) / f);
    if (tail > 0) {
      worst_rel =
          std::max(worst_rel, std::abs(r.one_minus_f_exact - tail) / tail);
    }
  }
  if (worst_rel >= 1e-12) {
    return result("binomial-oracles", false,
                  "rational oracle relative deviation " + fmt(worst_rel));
  }

  const SurvivalReport ref = survival(100, 0.05, 21, 1);
  int hits = 0;
  const int trials = 100000;
  for (int s = 0; s < trials; ++s) {
    const DefectionSpec d =
        sample_stochastic_defection(100, 0.05, static_cast<std::uint64_t>(s));
    if (d.affected_count() <= 10) ++hits;
  }
  const double frac = static_cast<double>(hits) / trials;
  const double limit =
      3 * std::sqrt(ref.f_exact * (1 - ref.f_exact) / trials);
  return result("binomial-oracles", std::abs(frac - ref.f_exact) <= limit,
                "rational oracle rel dev " + fmt(worst_rel) +
                    "; sampled fraction " + fmt(frac) + " vs exact " +
                    fmt(ref.f_exact) + " (3 sigma " + fmt(limit) + ")");
}

std::vector<CheckResult> run_all_checks() {
  return {check_dual_support(),         check_interference_law(),
          check_encoded_form(),         check_phase_error_alpha(),
          check_purity_amplification(), check_coset_sum_identity(),
          check_recovery_end_to_end(),  check_exhaustive_flips(),
          check_rate_bounds(),          check_survival_example(),
          check_binomial_oracles()};
}

}  // namespace qcss::verify
