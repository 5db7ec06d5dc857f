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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>

#include "doctest.h"
#include "qcss/channels.hpp"

using namespace qcss;

namespace {

QuantumState plus_state(int n_sys, int n_env = 0) {
  QuantumState s(n_sys, n_env);
  for (int q = 0; q < n_sys; ++q) s.hadamard(q);
  return s;
}

}  // namespace

TEST_CASE("phase errors rotate each qubit by half the angle each way") {
  QuantumState s = plus_state(1);
  apply_phase_errors(s, {0.5, {1.2}});
  const double half = 0.5 * 1.2 / 2.0;
  CHECK(std::abs(s.amp(0) - std::polar(std::sqrt(0.5), +half)) < 1e-12);
  CHECK(std::abs(s.amp(1) - std::polar(std::sqrt(0.5), -half)) < 1e-12);
}

TEST_CASE("phase errors preserve basis-1 populations and the norm") {
  QuantumState s(3);
  s.set_amp(1, Amplitude(0.3, 0.1));
  s.set_amp(5, Amplitude(0.2, -0.4));
  s.normalize();
  QuantumState t = s;
  apply_phase_errors(t, {0.7, {0.3, 1.1, 2.0}});
  CHECK(t.norm() == doctest::Approx(1.0));
  for (std::size_t i = 0; i < s.dim(); ++i) {
    CHECK(std::norm(t.amp(i)) == doctest::Approx(std::norm(s.amp(i))));
  }
}

TEST_CASE("phase error strength must lie in (0, 1]") {
  QuantumState s(1);
  CHECK_THROWS(apply_phase_errors(s, {0.0, {1.0}}));
  CHECK_THROWS(apply_phase_errors(s, {1.5, {1.0}}));
  CHECK_THROWS(apply_phase_errors(s, {-0.2, {1.0}}));
}

TEST_CASE("entangle unitary is orthogonal") {
  for (double eps : {0.1, 0.5, 1.0}) {
    const auto u = entangle_unitary(eps);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        Amplitude dot{0};
        for (int k = 0; k < 4; ++k) dot += std::conj(u[k][i]) * u[k][j];
        CHECK(std::abs(dot - (i == j ? Amplitude(1) : Amplitude(0))) < 1e-12);
      }
    }
  }
}

TEST_CASE("full strength entanglement copies the qubit value") {
  // eps = 1 is a perfect basis-1 measurement: |1>|0> -> -|1>|1>.
  QuantumState s(1, 1);
  s.set_amp(0b10, 1.0);
  apply_entangle(s, {{{0, 1, 1.0}}});
  CHECK(std::abs(s.amp(0b11) + Amplitude(1.0)) < 1e-12);
  CHECK(std::abs(s.amp(0b10)) < 1e-12);
}

TEST_CASE("entanglement leaves |0> alone and preserves the norm") {
  QuantumState s = plus_state(2, 2);
  apply_entangle(s, {{{0, 2, 0.4}, {1, 3, 0.9}}});
  CHECK(s.norm() == doctest::Approx(1.0));
  // The |00> system component never touches its environment.
  CHECK(std::abs(s.amp(0) - Amplitude(0.5)) < 1e-12);
}

TEST_CASE("entangle rejects a system qubit as environment target") {
  QuantumState s(2, 1);
  CHECK_THROWS(apply_entangle(s, {{{0, 1, 0.5}}}));
}

TEST_CASE("defection from a unitary reproduces the unitary") {
  // Plain NOT as a defection.
  std::array<std::array<Amplitude, 2>, 2> x{};
  x[0][1] = 1;
  x[1][0] = 1;
  QuantumState s(1, 2);
  const DefectionSpec d = DefectionSpec::from_unitary(0, x);
  apply_defection(s, d);
  CHECK(std::abs(s.amp(0b100) - Amplitude(1.0)) < 1e-12);
}

TEST_CASE("defection from entangle matches apply_entangle") {
  const double eps = 0.35;
  QuantumState via_entangle = plus_state(1, 2);
  // The defection writes its one-bit environment word to the low bit of
  // its two-qubit environment register, which is global qubit 2 here.
  apply_entangle(via_entangle, {{{0, 2, eps}}});
  QuantumState via_defection = plus_state(1, 2);
  apply_defection(via_defection, DefectionSpec::from_entangle(0, eps));
  CHECK(via_defection.fidelity(via_entangle) == doctest::Approx(1.0));
  for (std::size_t i = 0; i < via_entangle.dim(); ++i) {
    CHECK(std::abs(via_entangle.amp(i) - via_defection.amp(i)) < 1e-12);
  }
}

TEST_CASE("random defection is an isometry and preserves the norm") {
  for (std::uint64_t seed : {1ull, 2ull, 77ull}) {
    const DefectionSpec d = DefectionSpec::random({0, 2}, seed);
    const auto iso = defection_isometry(d);
    CHECK(iso.size() == 4u * 64u);  // 2^x columns of length 2^(3x)
    QuantumState s = plus_state(3, 4);
    apply_defection(s, d);
    CHECK(s.norm() == doctest::Approx(1.0));
  }
}

TEST_CASE("defection is deterministic for a fixed seed") {
  const DefectionSpec a = DefectionSpec::random({1}, 5);
  const DefectionSpec b = DefectionSpec::random({1}, 5);
  const auto ia = defection_isometry(a);
  const auto ib = defection_isometry(b);
  REQUIRE(ia.size() == ib.size());
  for (std::size_t i = 0; i < ia.size(); ++i) {
    CHECK(std::abs(ia[i] - ib[i]) < 1e-15);
  }
  const auto ic = defection_isometry(DefectionSpec::random({1}, 6));
  double diff = 0;
  for (std::size_t i = 0; i < ia.size(); ++i) diff += std::abs(ia[i] - ic[i]);
  CHECK(diff > 1e-3);
}

TEST_CASE("defection requires a clean environment") {
  QuantumState s(1, 2);
  s.apply_not(1);
  CHECK_THROWS(apply_defection(s, DefectionSpec::random({0}, 3)));
}

TEST_CASE("stochastic defection sampling is seeded and plausible") {
  const DefectionSpec a = sample_stochastic_defection(50, 0.1, 123);
  const DefectionSpec b = sample_stochastic_defection(50, 0.1, 123);
  CHECK(a.affected == b.affected);
  int total = 0;
  for (std::uint64_t s = 0; s < 2000; ++s) {
    total += sample_stochastic_defection(100, 0.05, s).affected_count();
  }
  const double mean = total / 2000.0;
  // Binomial(100, 0.05) mean is 5, sd of the sample mean ~0.049.
  CHECK(mean > 4.7);
  CHECK(mean < 5.3);
}
