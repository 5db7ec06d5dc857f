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

#pragma once

#include <array>
#include <complex>
#include <span>
#include <vector>

#include "qcss/gf2.hpp"

namespace qcss {

using Amplitude = std::complex<double>;

/// 2x2 reduced density matrix of a single qubit.
struct SingleQubitDensity {
  std::array<std::array<Amplitude, 2>, 2> m{};

  double trace() const { return m[0][0].real() + m[1][1].real(); }
  double purity() const;
  /// The coherence factor alpha for a qubit that started as a|0> + b|1>,
  /// i.e. rho01 / (a conj(b)).
  Amplitude coherence(Amplitude a, Amplitude b) const;
};

/// Dense amplitude vector over system (x) environment (x) ancilla
/// qubits, in that index order: global qubit 0 is the most significant
/// bit of the basis index, so a basis index printed in binary reads as
/// the ket label.
class QuantumState {
 public:
  static constexpr int kMaxQubits = 20;

  QuantumState(int n_sys, int n_env = 0, int n_anc = 0);

  int system_qubits() const { return n_sys_; }
  int environment_qubits() const { return n_env_; }
  int ancilla_qubits() const { return n_anc_; }
  int total_qubits() const { return n_sys_ + n_env_ + n_anc_; }
  std::size_t dim() const { return amps_.size(); }

  Amplitude amp(std::size_t index) const { return amps_[index]; }
  void set_amp(std::size_t index, Amplitude a) { amps_[index] = a; }
  std::span<const Amplitude> amplitudes() const { return amps_; }
  std::span<Amplitude> mutable_amplitudes() { return amps_; }

  double norm() const;
  void normalize();

  /// Basis-1 <-> basis-2 rotation (the 45-degree rotation) on one qubit.
  void hadamard(int qubit);
  void apply_not(int qubit);
  void apply_phase(int qubit, Amplitude diag0, Amplitude diag1);
  /// 4x4 unitary on the ordered qubit pair (q_hi, q_lo); basis order
  /// |q_hi q_lo> = 00, 01, 10, 11.
  void apply_two_qubit(int q_hi, int q_lo,
                       const std::array<std::array<Amplitude, 4>, 4>& u);

  bool bit_of_index(std::size_t index, int qubit) const;

  SingleQubitDensity reduced_density(int qubit) const;

  /// Dense density matrix of the whole system register (environment and
  /// ancilla traced out), row-major, dim 2^n_sys.
  std::vector<Amplitude> system_density() const;

  Amplitude inner(const QuantumState& other) const;
  /// |<this|other>|: comparison up to global phase.
  double fidelity(const QuantumState& other) const;

 private:
  int n_sys_, n_env_, n_anc_;
  std::vector<Amplitude> amps_;
};

/// Generator matrix rows with per-row phase factors exp(i phi_j).
struct PhasedGenerator {
  BinaryMatrix matrix;
  std::vector<double> phases;
};

/// Rotates the listed system qubits between the two bases; self-inverse.
QuantumState basis2_transform(const QuantumState& s,
                              const std::vector<int>& qubits);

/// Equal-magnitude superposition of the 2^k row combinations, each
/// carrying the product of the phases of the rows used.
QuantumState state_from_generator(const PhasedGenerator& g, int n_env = 0,
                                  int n_anc = 0);

/// Uniform superposition over an explicit word list (system register).
QuantumState state_from_words(std::span<const BitWord> words, int n_env = 0,
                              int n_anc = 0);

/// Basis-1 NOT on the masked system qubits.
QuantumState complement_qubits(const QuantumState& s, const BitWord& mask);

/// Probability that measuring all system qubits in basis 2 yields a
/// word with even overlap against `check`.
double parity_check_probability(const QuantumState& s, const BitWord& check);

/// System words whose basis-2 amplitude magnitude exceeds tol.
std::vector<BitWord> support_in_basis2(const QuantumState& s,
                                       double tol = 1e-8);

}  // namespace qcss
