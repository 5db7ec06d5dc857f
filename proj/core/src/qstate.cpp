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

#include "qcss/qstate.hpp"

#include <cmath>
#include <numbers>

namespace qcss {

double SingleQubitDensity::purity() const {
  double p = 0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) p += std::norm(m[i][j]);
  }
  return p;
}

Amplitude SingleQubitDensity::coherence(Amplitude a, Amplitude b) const {
  Amplitude denom = a * std::conj(b);
  if (std::abs(denom) < 1e-14) {
    throw std::invalid_argument("coherence undefined for |0> or |1> input");
  }
  return m[0][1] / denom;
}

QuantumState::QuantumState(int n_sys, int n_env, int n_anc)
    : n_sys_(n_sys), n_env_(n_env), n_anc_(n_anc) {
  if (n_sys < 0 || n_env < 0 || n_anc < 0 ||
      n_sys + n_env + n_anc > kMaxQubits || n_sys + n_env + n_anc < 1) {
    throw std::invalid_argument("qubit counts must total 1..20");
  }
  amps_.assign(std::size_t{1} << total_qubits(), Amplitude{0});
  amps_[0] = 1.0;
}

double QuantumState::norm() const {
  double s = 0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

void QuantumState::normalize() {
  double n = norm();
  if (n <= 0) throw std::runtime_error("cannot normalize zero state");
  for (auto& a : amps_) a /= n;
}

bool QuantumState::bit_of_index(std::size_t index, int qubit) const {
  return (index >> (total_qubits() - 1 - qubit)) & 1u;
}

void QuantumState::hadamard(int qubit) {
  const std::size_t stride = std::size_t{1} << (total_qubits() - 1 - qubit);
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  for (std::size_t base = 0; base < amps_.size(); base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; ++i) {
      Amplitude a0 = amps_[i];
      Amplitude a1 = amps_[i + stride];
      amps_[i] = (a0 + a1) * inv_sqrt2;
      amps_[i + stride] = (a0 - a1) * inv_sqrt2;
    }
  }
}

void QuantumState::apply_not(int qubit) {
  const std::size_t stride = std::size_t{1} << (total_qubits() - 1 - qubit);
  for (std::size_t base = 0; base < amps_.size(); base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; ++i) {
      std::swap(amps_[i], amps_[i + stride]);
    }
  }
}

void QuantumState::apply_phase(int qubit, Amplitude diag0, Amplitude diag1) {
  const std::size_t stride = std::size_t{1} << (total_qubits() - 1 - qubit);
  for (std::size_t base = 0; base < amps_.size(); base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; ++i) {
      amps_[i] *= diag0;
      amps_[i + stride] *= diag1;
    }
  }
}

void QuantumState::apply_two_qubit(
    int q_hi, int q_lo, const std::array<std::array<Amplitude, 4>, 4>& u) {
  if (q_hi == q_lo) throw std::invalid_argument("need two distinct qubits");
  const std::size_t s_hi = std::size_t{1} << (total_qubits() - 1 - q_hi);
  const std::size_t s_lo = std::size_t{1} << (total_qubits() - 1 - q_lo);
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if ((i & s_hi) || (i & s_lo)) continue;
    const std::size_t idx[4] = {i, i | s_lo, i | s_hi, i | s_hi | s_lo};
    Amplitude in[4];
    for (int r = 0; r < 4; ++r) in[r] = amps_[idx[r]];
    for (int r = 0; r < 4; ++r) {
      Amplitude acc{0};
      for (int c = 0; c < 4; ++c) acc += u[r][c] * in[c];
      amps_[idx[r]] = acc;
    }
  }
}

SingleQubitDensity QuantumState::reduced_density(int qubit) const {
  const std::size_t stride = std::size_t{1} << (total_qubits() - 1 - qubit);
  SingleQubitDensity rho;
  for (std::size_t base = 0; base < amps_.size(); base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; ++i) {
      Amplitude a0 = amps_[i];
      Amplitude a1 = amps_[i + stride];
      rho.m[0][0] += a0 * std::conj(a0);
      rho.m[0][1] += a0 * std::conj(a1);
      rho.m[1][0] += a1 * std::conj(a0);
      rho.m[1][1] += a1 * std::conj(a1);
    }
  }
  return rho;
}

std::vector<Amplitude> QuantumState::system_density() const {
  const std::size_t sys_dim = std::size_t{1} << n_sys_;
  const std::size_t rest_dim = std::size_t{1} << (n_env_ + n_anc_);
  std::vector<Amplitude> rho(sys_dim * sys_dim, Amplitude{0});
  for (std::size_t a = 0; a < sys_dim; ++a) {
    for (std::size_t b = 0; b < sys_dim; ++b) {
      Amplitude acc{0};
      for (std::size_t r = 0; r < rest_dim; ++r) {
        acc += amps_[a * rest_dim + r] * std::conj(amps_[b * rest_dim + r]);
      }
      rho[a * sys_dim + b] = acc;
    }
  }
  return rho;
}

Amplitude QuantumState::inner(const QuantumState& other) const {
  if (dim() != other.dim()) {
    throw std::invalid_argument("state dimensions differ");
  }
  Amplitude acc{0};
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    acc += std::conj(amps_[i]) * other.amps_[i];
  }
  return acc;
}

double QuantumState::fidelity(const QuantumState& other) const {
  return std::abs(inner(other));
}

QuantumState basis2_transform(const QuantumState& s,
                              const std::vector<int>& qubits) {
  QuantumState out = s;
  for (int q : qubits) {
    if (q < 0 || q >= s.system_qubits()) {
      throw std::invalid_argument("basis2_transform: not a system qubit");
    }
    out.hadamard(q);
  }
  return out;
}

QuantumState state_from_generator(const PhasedGenerator& g, int n_env,
                                  int n_anc) {
  const int n = g.matrix.cols();
  const int k = g.matrix.row_count();
  if (static_cast<int>(g.phases.size()) != k) {
    throw std::invalid_argument("one phase per generator row required");
  }
  if (g.matrix.rank() != k) {
    throw std::invalid_argument("generator rows must be independent");
  }
  QuantumState s(n, n_env, n_anc);
  const std::size_t rest_dim = std::size_t{1} << (n_env + n_anc);
  s.set_amp(0, Amplitude{0});
  const double mag = std::pow(2.0, -0.5 * k);
  for (std::uint32_t combo = 0; combo < (1u << k); ++combo) {
    BitWord w = BitWord::zero(n);
    double phase = 0;
    for (int r = 0; r < k; ++r) {
      if ((combo >> (k - 1 - r)) & 1u) {
        w ^= g.matrix.row(r);
        phase += g.phases[static_cast<std::size_t>(r)];
      }
    }
    s.set_amp(std::size_t{w.value()} * rest_dim,
              std::polar(mag, phase) +
                  s.amp(std::size_t{w.value()} * rest_dim));
  }
  return s;
}

QuantumState state_from_words(std::span<const BitWord> words, int n_env,
                              int n_anc) {
  if (words.empty()) throw std::invalid_argument("empty word list");
  const int n = words.front().length();
  QuantumState s(n, n_env, n_anc);
  s.set_amp(0, Amplitude{0});
  const std::size_t rest_dim = std::size_t{1} << (n_env + n_anc);
  const double mag = 1.0 / std::sqrt(static_cast<double>(words.size()));
  for (const auto& w : words) {
    s.set_amp(std::size_t{w.value()} * rest_dim, Amplitude{mag});
  }
  return s;
}

QuantumState complement_qubits(const QuantumState& s, const BitWord& mask) {
  if (mask.length() != s.system_qubits()) {
    throw std::invalid_argument("mask length must match system size");
  }
  QuantumState out = s;
  for (int q = 0; q < mask.length(); ++q) {
    if (mask.bit(q)) out.apply_not(q);
  }
  return out;
}

double parity_check_probability(const QuantumState& s, const BitWord& check) {
  if (check.length() != s.system_qubits()) {
    throw std::invalid_argument("check length must match system size");
  }
  std::vector<int> all(static_cast<std::size_t>(s.system_qubits()));
  for (int q = 0; q < s.system_qubits(); ++q) all[q] = q;
  QuantumState rotated = basis2_transform(s, all);
  const std::size_t rest_dim =
      std::size_t{1} << (s.environment_qubits() + s.ancilla_qubits());
  double p = 0;
  for (std::size_t i = 0; i < rotated.dim(); ++i) {
    BitWord w(static_cast<std::uint32_t>(i / rest_dim), s.system_qubits());
    if (parity_check(check, w)) p += std::norm(rotated.amp(i));
  }
  return p;
}

std::vector<BitWord> support_in_basis2(const QuantumState& s, double tol) {
  std::vector<int> all(static_cast<std::size_t>(s.system_qubits()));
  for (int q = 0; q < s.system_qubits(); ++q) all[q] = q;
  QuantumState rotated = basis2_transform(s, all);
  const std::size_t rest_dim =
      std::size_t{1} << (s.environment_qubits() + s.ancilla_qubits());
  std::vector<BitWord> words;
  const std::size_t sys_dim = std::size_t{1} << s.system_qubits();
  for (std::size_t v = 0; v < sys_dim; ++v) {
    double peak = 0;
    for (std::size_t r = 0; r < rest_dim; ++r) {
      peak = std::max(peak, std::abs(rotated.amp(v * rest_dim + r)));
    }
    if (peak > tol) {
      words.emplace_back(static_cast<std::uint32_t>(v), s.system_qubits());
    }
  }
  return words;
}

}  // namespace qcss
