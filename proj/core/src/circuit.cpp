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

#include "qcss/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qcss {

Gate Gate::not_gate(int qubit, Basis basis) {
  Gate g;
  g.kind = Kind::Not;
  g.basis = basis;
  g.qubit = qubit;
  return g;
}

Gate Gate::cnot(int control, int target, Basis basis) {
  Gate g;
  g.kind = Kind::Cnot;
  g.basis = basis;
  g.control = control;
  g.target = target;
  return g;
}

Gate Gate::rotate(int qubit) {
  Gate g;
  g.kind = Kind::Rotate;
  g.qubit = qubit;
  return g;
}

Gate Gate::measure(int qubit, int slot, Basis basis) {
  Gate g;
  g.kind = Kind::Measure;
  g.basis = basis;
  g.qubit = qubit;
  g.slot = slot;
  return g;
}

Gate Gate::controlled_not(std::vector<std::pair<int, bool>> condition,
                          std::vector<int> targets, Basis basis) {
  Gate g;
  g.kind = Kind::ControlledNot;
  g.basis = basis;
  g.condition = std::move(condition);
  g.targets = std::move(targets);
  return g;
}

Gate Gate::reset(int qubit, Basis basis) {
  Gate g;
  g.kind = Kind::Reset;
  g.basis = basis;
  g.qubit = qubit;
  return g;
}

void Circuit::append(const Circuit& other) {
  if (other.n_system > n_system) n_system = other.n_system;
  if (other.n_ancilla > n_ancilla) n_ancilla = other.n_ancilla;
  const int slot_shift = n_slots;
  for (Gate g : other.gates) {
    if (g.slot >= 0) g.slot += slot_shift;
    for (auto& [slot, value] : g.condition) slot += slot_shift;
    gates.push_back(std::move(g));
  }
  n_slots += other.n_slots;
}

Circuit Circuit::inverted() const {
  Circuit inv;
  inv.n_system = n_system;
  inv.n_ancilla = n_ancilla;
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    if (it->kind == Gate::Kind::Measure || it->kind == Gate::Kind::Reset ||
        it->kind == Gate::Kind::ControlledNot) {
      throw std::logic_error("cannot invert a non-unitary circuit");
    }
    inv.gates.push_back(*it);
  }
  return inv;
}

namespace {

void check_qubit(int q, const Circuit& c) {
  const bool system_ok = q >= 0 && q < c.n_system;
  const bool ancilla_ok =
      q >= kAncillaBase && q < kAncillaBase + c.n_ancilla;
  if (!system_ok && !ancilla_ok) {
    throw std::invalid_argument("gate qubit index out of range");
  }
}

}  // namespace

void Circuit::validate() const {
  std::vector<bool> written(static_cast<std::size_t>(n_slots), false);
  for (const Gate& g : gates) {
    switch (g.kind) {
      case Gate::Kind::Not:
      case Gate::Kind::Rotate:
      case Gate::Kind::Reset:
        check_qubit(g.qubit, *this);
        break;
      case Gate::Kind::Cnot:
        check_qubit(g.control, *this);
        check_qubit(g.target, *this);
        if (g.control == g.target) {
          throw std::invalid_argument("cnot needs distinct qubits");
        }
        break;
      case Gate::Kind::Measure:
        check_qubit(g.qubit, *this);
        if (g.slot < 0 || g.slot >= n_slots) {
          throw std::invalid_argument("measure slot out of range");
        }
        if (written[static_cast<std::size_t>(g.slot)]) {
          throw std::invalid_argument("slot written twice");
        }
        written[static_cast<std::size_t>(g.slot)] = true;
        break;
      case Gate::Kind::ControlledNot:
        for (const auto& [slot, value] : g.condition) {
          if (slot < 0 || slot >= n_slots ||
              !written[static_cast<std::size_t>(slot)]) {
            throw std::invalid_argument("slot read before written");
          }
        }
        for (int t : g.targets) check_qubit(t, *this);
        break;
    }
  }
}

namespace {

constexpr double kBranchCutoff = 1e-30;

int resolve(int q, const QuantumState& s) {
  if (q >= kAncillaBase) {
    const int anc = q - kAncillaBase;
    if (anc >= s.ancilla_qubits()) {
      throw std::invalid_argument("state has too few ancilla qubits");
    }
    return s.system_qubits() + s.environment_qubits() + anc;
  }
  if (q >= s.system_qubits()) {
    throw std::invalid_argument("state has too few system qubits");
  }
  return q;
}

void plain_cnot(QuantumState& s, int control, int target) {
  const int total = s.total_qubits();
  const std::size_t cm = std::size_t{1} << (total - 1 - control);
  const std::size_t tm = std::size_t{1} << (total - 1 - target);
  auto amps = s.mutable_amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if ((i & cm) && !(i & tm)) std::swap(amps[i], amps[i | tm]);
  }
}

void apply_not_in_basis(QuantumState& s, int q, Basis basis) {
  if (basis == Basis::two) s.hadamard(q);
  s.apply_not(q);
  if (basis == Basis::two) s.hadamard(q);
}

// Probabilities of reading 0 and 1 on `q` in the given basis, without
// collapsing. Each outcome is summed directly so an exactly empty
// subspace reports exactly zero.
std::pair<double, double> outcome_probs(const QuantumState& s, int q,
                                        Basis basis) {
  QuantumState t = s;
  if (basis == Basis::two) t.hadamard(q);
  const std::size_t m = std::size_t{1} << (t.total_qubits() - 1 - q);
  double p0 = 0, p1 = 0;
  for (std::size_t i = 0; i < t.dim(); ++i) {
    ((i & m) ? p1 : p0) += std::norm(t.amp(i));
  }
  return {p0, p1};
}

// Collapses `q` to `outcome` in the given basis and renormalizes.
void project(QuantumState& s, int q, Basis basis, bool outcome) {
  if (basis == Basis::two) s.hadamard(q);
  const std::size_t m = std::size_t{1} << (s.total_qubits() - 1 - q);
  auto amps = s.mutable_amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (((i & m) != 0) != outcome) amps[i] = 0;
  }
  s.normalize();
  if (basis == Basis::two) s.hadamard(q);
}

void split_on_qubit(std::vector<Branch>& out, Branch&& b, int q, Basis basis,
                    int slot, bool reset_to_zero) {
  const auto [p0, p1] = outcome_probs(b.state, q, basis);
  for (int outcome = 0; outcome < 2; ++outcome) {
    const double p = outcome ? p1 : p0;
    const double w = b.weight * p;
    if (w < kBranchCutoff) continue;
    Branch nb = b;
    nb.weight = w;
    project(nb.state, q, basis, outcome != 0);
    if (reset_to_zero && outcome) apply_not_in_basis(nb.state, q, basis);
    if (slot >= 0) nb.slots[static_cast<std::size_t>(slot)] = outcome;
    out.push_back(std::move(nb));
  }
}

void apply_unitary_gate(QuantumState& s, const Gate& g) {
  switch (g.kind) {
    case Gate::Kind::Not:
      apply_not_in_basis(s, resolve(g.qubit, s), g.basis);
      break;
    case Gate::Kind::Cnot: {
      const int c = resolve(g.control, s);
      const int t = resolve(g.target, s);
      if (g.basis == Basis::two) {
        s.hadamard(c);
        s.hadamard(t);
      }
      plain_cnot(s, c, t);
      if (g.basis == Basis::two) {
        s.hadamard(c);
        s.hadamard(t);
      }
      break;
    }
    case Gate::Kind::Rotate:
      s.hadamard(resolve(g.qubit, s));
      break;
    default:
      throw std::logic_error("not a unitary gate");
  }
}

}  // namespace

std::vector<Branch> run_circuit(const Circuit& c,
                                std::vector<Branch> branches) {
  c.validate();
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case Gate::Kind::Not:
      case Gate::Kind::Cnot:
      case Gate::Kind::Rotate:
        for (Branch& b : branches) apply_unitary_gate(b.state, g);
        break;
      case Gate::Kind::Measure:
      case Gate::Kind::Reset: {
        std::vector<Branch> next;
        next.reserve(branches.size() * 2);
        for (Branch& b : branches) {
          split_on_qubit(next, std::move(b), resolve(g.qubit, b.state),
                         g.basis, g.slot, g.kind == Gate::Kind::Reset);
        }
        branches = std::move(next);
        break;
      }
      case Gate::Kind::ControlledNot:
        for (Branch& b : branches) {
          bool fire = true;
          for (const auto& [slot, value] : g.condition) {
            const int v = b.slots[static_cast<std::size_t>(slot)];
            if (v < 0) throw std::logic_error("slot unwritten at read");
            if ((v != 0) != value) {
              fire = false;
              break;
            }
          }
          if (!fire) continue;
          for (int t : g.targets) {
            apply_not_in_basis(b.state, resolve(t, b.state), g.basis);
          }
        }
        break;
    }
  }
  return branches;
}

std::vector<Branch> run_circuit(const Circuit& c, const QuantumState& initial) {
  std::vector<Branch> branches;
  branches.push_back(
      Branch{1.0, initial,
             std::vector<int>(static_cast<std::size_t>(c.n_slots), -1)});
  return run_circuit(c, std::move(branches));
}

SingleQubitDensity average_reduced_density(const std::vector<Branch>& branches,
                                           int qubit) {
  SingleQubitDensity rho;
  for (const Branch& b : branches) {
    const SingleQubitDensity r =
        b.state.reduced_density(resolve(qubit, b.state));
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) rho.m[i][j] += b.weight * r.m[i][j];
    }
  }
  return rho;
}

std::vector<Amplitude> average_system_density(
    const std::vector<Branch>& branches) {
  if (branches.empty()) throw std::invalid_argument("no branches");
  std::vector<Amplitude> rho;
  for (const Branch& b : branches) {
    std::vector<Amplitude> r = b.state.system_density();
    if (rho.empty()) rho.assign(r.size(), Amplitude{0});
    if (r.size() != rho.size()) {
      throw std::invalid_argument("branch system sizes differ");
    }
    for (std::size_t i = 0; i < r.size(); ++i) rho[i] += b.weight * r[i];
  }
  return rho;
}

}  // namespace qcss
