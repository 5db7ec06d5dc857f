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
#include <utility>
#include <vector>

#include "qcss/qstate.hpp"

namespace qcss {

enum class Basis { one = 1, two = 2 };

/// Gate qubit indices below kAncillaBase address system qubits directly.
/// Index kAncillaBase + i addresses ancilla qubit i, resolved against the
/// state's layout when the circuit runs. Environment qubits are never
/// addressed by circuits.
constexpr int kAncillaBase = 1000;

/// One gate. Basis-2 variants are the basis-1 gate conjugated by the
/// 45-degree rotation on every qubit the gate touches.
struct Gate {
  enum class Kind {
    Not,            // NOT on `qubit`
    Cnot,           // controlled NOT, `control` -> `target`
    Rotate,         // basis-1 <-> basis-2 rotation on `qubit`
    Measure,        // projective measurement of `qubit` into `slot`
    ControlledNot,  // NOT on `targets` iff all of `condition` holds
    Reset,          // return `qubit` to |0> of `basis`, outcome discarded
  };

  Kind kind;
  Basis basis = Basis::one;
  int qubit = -1;
  int control = -1;
  int target = -1;
  int slot = -1;
  std::vector<std::pair<int, bool>> condition;  // (slot, required value)
  std::vector<int> targets;

  static Gate not_gate(int qubit, Basis basis = Basis::one);
  static Gate cnot(int control, int target, Basis basis = Basis::one);
  static Gate rotate(int qubit);
  static Gate measure(int qubit, int slot, Basis basis = Basis::one);
  static Gate controlled_not(std::vector<std::pair<int, bool>> condition,
                             std::vector<int> targets,
                             Basis basis = Basis::one);
  static Gate reset(int qubit, Basis basis = Basis::one);
};

/// An ordered gate list over n_system qubits plus n_ancilla ancillas,
/// recording classical measurement outcomes in numbered slots.
struct Circuit {
  std::vector<Gate> gates;
  int n_system = 0;
  int n_ancilla = 0;
  int n_slots = 0;

  void append(Gate g) { gates.push_back(std::move(g)); }
  void append(const Circuit& other);

  /// Gates in reverse order; valid as an inverse only for circuits
  /// without measurements or resets (each remaining gate kind is an
  /// involution).
  Circuit inverted() const;

  /// Throws unless qubit indices are in range, slots are written before
  /// read and written at most once, and slot indices are within n_slots.
  void validate() const;
};

/// One term of a mixture produced by measurements: a normalized state
/// with its probability weight and the recorded slot values (-1 when a
/// slot was never written on this branch).
struct Branch {
  double weight = 1.0;
  QuantumState state;
  std::vector<int> slots;
};

/// Deterministic branch enumeration: every measurement splits each
/// branch into its possible outcomes, weighted by probability. Branches
/// with weight below 1e-30 are dropped.
std::vector<Branch> run_circuit(const Circuit& c, const QuantumState& initial);
std::vector<Branch> run_circuit(const Circuit& c, std::vector<Branch> branches);

/// Weighted average of the one-qubit reduced densities over branches.
SingleQubitDensity average_reduced_density(const std::vector<Branch>& branches,
                                           int qubit);

/// Weighted average of the system density matrices over branches.
std::vector<Amplitude> average_system_density(
    const std::vector<Branch>& branches);

}  // namespace qcss
