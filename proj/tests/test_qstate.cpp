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
#include <set>

#include "doctest.h"
#include "qcss/codes.hpp"
#include "qcss/qstate.hpp"

using namespace qcss;

namespace {

QuantumState code_superposition(const LinearCode& c) {
  const auto words = c.codewords();
  return state_from_words(words);
}

}  // namespace

TEST_CASE("qubit 0 is the most significant bit of the index") {
  QuantumState s(3);
  s.set_amp(0, 1.0);
  s.apply_not(0);
  CHECK(s.amp(0b100).real() == doctest::Approx(1.0));
  CHECK(s.bit_of_index(0b100, 0));
  CHECK(!s.bit_of_index(0b100, 2));
}

TEST_CASE("hadamard is self inverse and norm preserving") {
  QuantumState s(2);
  s.set_amp(0, Amplitude(0.0));
  s.set_amp(1, Amplitude(0.6, 0.0));
  s.set_amp(2, Amplitude(0.0, 0.8));
  QuantumState t = s;
  t.hadamard(0);
  CHECK(t.norm() == doctest::Approx(1.0));
  t.hadamard(0);
  for (std::size_t i = 0; i < s.dim(); ++i) {
    CHECK(std::abs(t.amp(i) - s.amp(i)) < 1e-12);
  }
}

TEST_CASE("two qubit unitary matches cnot built by hand") {
  // CNOT with control = high qubit of the pair.
  std::array<std::array<Amplitude, 4>, 4> u{};
  u[0][0] = 1;
  u[1][1] = 1;
  u[2][3] = 1;
  u[3][2] = 1;
  QuantumState s(2);
  s.set_amp(0b10, 1.0);
  s.apply_two_qubit(0, 1, u);
  CHECK(std::abs(s.amp(0b11) - Amplitude(1.0)) < 1e-12);
}

TEST_CASE("basis-2 support of the repetition words is the even parity code") {
  // {000, 111} rotated qubitwise has support exactly on the dual words.
  const QuantumState s = code_superposition(zoo::repetition3());
  const auto support = support_in_basis2(s);
  const LinearCode dual = zoo::even_parity3();
  CHECK(support.size() == 4);
  for (const BitWord& w : support) CHECK(dual.contains(w));
}

TEST_CASE("basis-2 support of a full code superposition is one word") {
  const QuantumState s = code_superposition(LinearCode::full(3));
  const auto support = support_in_basis2(s);
  REQUIRE(support.size() == 1);
  CHECK(support[0].value() == 0);
}

TEST_CASE("basis-2 amplitudes of the simplex state sit on the hamming code") {
  const QuantumState s = code_superposition(zoo::simplex7());
  const auto support = support_in_basis2(s);
  const LinearCode h = zoo::hamming7();
  CHECK(support.size() == 16);
  for (const BitWord& w : support) CHECK(h.contains(w));
}

TEST_CASE("basis2_transform agrees with brute-force hadamards") {
  QuantumState s(3);
  s.set_amp(0, std::sqrt(0.5));
  s.set_amp(7, std::sqrt(0.5));
  QuantumState brute = s;
  for (int q = 0; q < 3; ++q) brute.hadamard(q);
  const QuantumState fast = basis2_transform(s, {0, 1, 2});
  for (std::size_t i = 0; i < s.dim(); ++i) {
    CHECK(std::abs(brute.amp(i) - fast.amp(i)) < 1e-12);
  }
}

TEST_CASE("phased generator state carries products of row phases") {
  // One row 11 with phase pi: |00> + e^{i pi} |11>.
  PhasedGenerator g{BinaryMatrix{"11"}, {std::acos(-1.0)}};
  const QuantumState s = state_from_generator(g);
  CHECK(std::abs(s.amp(0b00) - Amplitude(std::sqrt(0.5))) < 1e-12);
  CHECK(std::abs(s.amp(0b11) + Amplitude(std::sqrt(0.5))) < 1e-12);
}

TEST_CASE("sign flips in basis 1 are complements in basis 2") {
  // Flipping the sign of the |1> component of qubit q maps, after
  // rotation, to a NOT of qubit q.
  QuantumState plus(1);
  plus.set_amp(0, std::sqrt(0.5));
  plus.set_amp(1, std::sqrt(0.5));
  QuantumState minus = plus;
  minus.apply_phase(0, 1.0, -1.0);
  const QuantumState rot_minus = basis2_transform(minus, {0});
  QuantumState expected = basis2_transform(plus, {0});
  expected = complement_qubits(expected, BitWord::parse("1"));
  CHECK(rot_minus.fidelity(expected) == doctest::Approx(1.0));
}

TEST_CASE("parity check probability splits even and odd overlaps") {
  // |000> + |111> reads, in basis 2, as the even parity words; every
  // one of them overlaps 111 evenly, while 100 splits them in half.
  const QuantumState s = code_superposition(zoo::repetition3());
  CHECK(parity_check_probability(s, BitWord::parse("111")) ==
        doctest::Approx(1.0));
  CHECK(parity_check_probability(s, BitWord::parse("100")) ==
        doctest::Approx(0.5));
}

TEST_CASE("reduced density of an entangled pair is maximally mixed") {
  QuantumState s(2);
  s.set_amp(0b00, std::sqrt(0.5));
  s.set_amp(0b11, std::sqrt(0.5));
  const SingleQubitDensity r = s.reduced_density(0);
  CHECK(r.trace() == doctest::Approx(1.0));
  CHECK(r.purity() == doctest::Approx(0.5));
  CHECK(std::abs(r.m[0][1]) < 1e-12);
}

TEST_CASE("coherence factor recovers the off-diagonal ratio") {
  const Amplitude a(0.6, 0.0), b(0.0, 0.8);
  QuantumState s(1);
  s.set_amp(0, a);
  s.set_amp(1, b);
  const SingleQubitDensity r = s.reduced_density(0);
  CHECK(std::abs(r.coherence(a, b) - Amplitude(1.0)) < 1e-12);
}

TEST_CASE("system density traces out environment and ancilla") {
  QuantumState s(1, 1, 0);
  // (|0>|0> + |1>|1>) / sqrt 2: system alone is maximally mixed.
  s.set_amp(0b00, std::sqrt(0.5));
  s.set_amp(0b11, std::sqrt(0.5));
  const auto rho = s.system_density();
  REQUIRE(rho.size() == 4);
  CHECK(std::abs(rho[0] - Amplitude(0.5)) < 1e-12);
  CHECK(std::abs(rho[3] - Amplitude(0.5)) < 1e-12);
  CHECK(std::abs(rho[1]) < 1e-12);
}

TEST_CASE("inner product and fidelity") {
  QuantumState a(1), b(1);
  a.set_amp(0, 1.0);
  b.set_amp(0, Amplitude(0.0, 1.0));
  CHECK(std::abs(a.inner(b) - Amplitude(0.0, 1.0)) < 1e-12);
  CHECK(a.fidelity(b) == doctest::Approx(1.0));
}

TEST_CASE("state size guard") {
  CHECK_THROWS(QuantumState(21));
  CHECK_THROWS(QuantumState(10, 6, 5));
}
