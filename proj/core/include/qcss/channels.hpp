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

#include <cstdint>
#include <vector>

#include "qcss/qstate.hpp"

namespace qcss {

/// Unitary phase errors: qubit j is rotated by
/// diag(exp(i eps phi_j / 2), exp(-i eps phi_j / 2)) in basis 1.
struct PhaseErrorSpec {
  double strength = 1.0;       // eps in (0, 1]
  std::vector<double> angles;  // phi_j per system qubit, radians
};

void apply_phase_errors(QuantumState& s, const PhaseErrorSpec& spec);

/// Entanglement with the environment: one fresh environment qubit per
/// affected system qubit, coupled by the 4x4 unitary
///   [ 1  0    0       0     ]
///   [ 0  1    0       0     ]
///   [ 0  0  1-e    sqrt(2e-e^2) ]
///   [ 0  0 -sqrt(2e-e^2)  1-e   ]
/// in the |qubit, environment> product basis. An imperfect (e < 1) or
/// perfect (e = 1) measurement of the qubit in basis 1.
struct EntangleSpec {
  struct Term {
    int system_qubit;
    int environment_qubit;  // global qubit index
    double strength;        // eps_j in (0, 1]
  };
  std::vector<Term> terms;
};

std::array<std::array<Amplitude, 4>, 4> entangle_unitary(double strength);
void apply_entangle(QuantumState& s, const EntangleSpec& spec);

/// An arbitrary defection of x system qubits: an isometry from the
/// affected qubits into (affected qubits) (x) (2x fresh environment
/// qubits),
///   |j>|0...0>  ->  sum_k |j xor k> |e_jk>.
/// The environment amplitude vectors carry no structure beyond the
/// isometry condition.
struct DefectionSpec {
  std::vector<int> affected;  // system qubit indices, ascending
  std::uint64_t seed = 0;     // for the random isometry
  /// Column-major isometry: column j (of 2^x) lists amplitudes over
  /// (output pattern j', environment word e), index j' * 4^x + e.
  /// Empty means "generate from seed when applied".
  std::vector<Amplitude> isometry;

  int affected_count() const { return static_cast<int>(affected.size()); }
  int environment_qubits_needed() const { return 2 * affected_count(); }

  /// Seeded Gaussian matrix with orthonormalized columns.
  static DefectionSpec random(std::vector<int> affected, std::uint64_t seed);
  /// A single-qubit defection that applies a 2x2 unitary and leaves the
  /// environment alone (covers pure flips in either basis).
  static DefectionSpec from_unitary(int qubit,
                                    const std::array<std::array<Amplitude, 2>,
                                                     2>& u);
  /// The entangling operator above, expressed as a defection.
  static DefectionSpec from_entangle(int qubit, double strength);
};

/// Returns the explicit isometry columns (generating them if needed)
/// and verifies the isometry condition to 1e-12.
std::vector<Amplitude> defection_isometry(const DefectionSpec& spec);

/// Applies the defection using the state's first 2x environment qubits,
/// which must be in |0...0>.
void apply_defection(QuantumState& s, const DefectionSpec& spec);

/// Marks each of n qubits defecting independently with probability p;
/// deterministic for a fixed seed. The isometry is generated lazily, so
/// this is usable for counting statistics at large n.
DefectionSpec sample_stochastic_defection(int n, double p,
                                          std::uint64_t seed);

}  // namespace qcss
