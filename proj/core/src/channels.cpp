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

#include "qcss/channels.hpp"

#include <cmath>
#include <random>

namespace qcss {

void apply_phase_errors(QuantumState& s, const PhaseErrorSpec& spec) {
  if (spec.strength <= 0 || spec.strength > 1) {
    throw std::invalid_argument("phase error strength must be in (0, 1]");
  }
  if (static_cast<int>(spec.angles.size()) > s.system_qubits()) {
    throw std::invalid_argument("more angles than system qubits");
  }
  for (std::size_t j = 0; j < spec.angles.size(); ++j) {
    const double half = 0.5 * spec.strength * spec.angles[j];
    s.apply_phase(static_cast<int>(j), std::polar(1.0, half),
                  std::polar(1.0, -half));
  }
}

std::array<std::array<Amplitude, 4>, 4> entangle_unitary(double strength) {
  if (strength <= 0 || strength > 1) {
    throw std::invalid_argument("entanglement strength must be in (0, 1]");
  }
  const double c = 1.0 - strength;
  const double t = std::sqrt(2.0 * strength - strength * strength);
  std::array<std::array<Amplitude, 4>, 4> u{};
  u[0][0] = 1;
  u[1][1] = 1;
  u[2][2] = c;
  u[2][3] = t;
  u[3][2] = -t;
  u[3][3] = c;
  return u;
}

void apply_entangle(QuantumState& s, const EntangleSpec& spec) {
  for (const auto& term : spec.terms) {
    if (term.environment_qubit < s.system_qubits() ||
        term.environment_qubit >=
            s.system_qubits() + s.environment_qubits()) {
      throw std::invalid_argument("entangle target is not an environment "
                                  "qubit");
    }
    s.apply_two_qubit(term.system_qubit, term.environment_qubit,
                      entangle_unitary(term.strength));
  }
}

namespace {

void check_affected(const std::vector<int>& affected) {
  for (std::size_t i = 0; i < affected.size(); ++i) {
    if (i > 0 && affected[i] <= affected[i - 1]) {
      throw std::invalid_argument("affected qubits must be ascending");
    }
  }
}

// Modified Gram-Schmidt over the columns.
void orthonormalize(std::vector<Amplitude>& cols, std::size_t col_dim,
                    std::size_t col_count) {
  for (std::size_t c = 0; c < col_count; ++c) {
    Amplitude* v = cols.data() + c * col_dim;
    for (std::size_t p = 0; p < c; ++p) {
      const Amplitude* u = cols.data() + p * col_dim;
      Amplitude proj{0};
      for (std::size_t i = 0; i < col_dim; ++i) {
        proj += std::conj(u[i]) * v[i];
      }
      for (std::size_t i = 0; i < col_dim; ++i) v[i] -= proj * u[i];
    }
    double nrm = 0;
    for (std::size_t i = 0; i < col_dim; ++i) nrm += std::norm(v[i]);
    nrm = std::sqrt(nrm);
    if (nrm < 1e-9) throw std::runtime_error("degenerate random isometry");
    for (std::size_t i = 0; i < col_dim; ++i) v[i] /= nrm;
  }
}

}  // namespace

DefectionSpec DefectionSpec::random(std::vector<int> affected,
                                    std::uint64_t seed) {
  check_affected(affected);
  return DefectionSpec{std::move(affected), seed, {}};
}

DefectionSpec DefectionSpec::from_unitary(
    int qubit, const std::array<std::array<Amplitude, 2>, 2>& u) {
  DefectionSpec spec{{qubit}, 0, {}};
  // The environment is left in |0>: |j> -> sum_j' u[j'][j] |j'>.
  spec.isometry.assign(2 * 8, Amplitude{0});
  for (int j = 0; j < 2; ++j) {
    for (int jout = 0; jout < 2; ++jout) {
      spec.isometry[static_cast<std::size_t>(j) * 8 +
                    static_cast<std::size_t>(jout) * 4] = u[jout][j];
    }
  }
  return spec;
}

DefectionSpec DefectionSpec::from_entangle(int qubit, double strength) {
  const auto w = entangle_unitary(strength);
  DefectionSpec spec{{qubit}, 0, {}};
  spec.isometry.assign(2 * 8, Amplitude{0});
  // |0>|0> stays put; |1>|0> -> (1-e)|1>|e=0> - sqrt(2e-e^2)|1>|e=1>.
  spec.isometry[0 * 8 + 0] = w[0][0];
  spec.isometry[1 * 8 + 4] = w[2][2];
  spec.isometry[1 * 8 + 5] = w[3][2];
  return spec;
}

std::vector<Amplitude> defection_isometry(const DefectionSpec& spec) {
  const int x = spec.affected_count();
  if (x < 1) throw std::invalid_argument("empty defection");
  const std::size_t cols = std::size_t{1} << x;
  const std::size_t col_dim = std::size_t{1} << (3 * x);
  std::vector<Amplitude> v = spec.isometry;
  if (v.empty()) {
    std::mt19937_64 rng(spec.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    v.resize(cols * col_dim);
    for (auto& a : v) a = Amplitude(gauss(rng), gauss(rng));
    orthonormalize(v, col_dim, cols);
  }
  if (v.size() != cols * col_dim) {
    throw std::invalid_argument("isometry has wrong shape");
  }
  // Isometry condition: columns orthonormal.
  for (std::size_t c1 = 0; c1 < cols; ++c1) {
    for (std::size_t c2 = 0; c2 <= c1; ++c2) {
      Amplitude dot{0};
      for (std::size_t i = 0; i < col_dim; ++i) {
        dot += std::conj(v[c2 * col_dim + i]) * v[c1 * col_dim + i];
      }
      const double want = (c1 == c2) ? 1.0 : 0.0;
      if (std::abs(dot - want) > 1e-12) {
        throw std::invalid_argument("defection map is not an isometry");
      }
    }
  }
  return v;
}

void apply_defection(QuantumState& s, const DefectionSpec& spec) {
  const int x = spec.affected_count();
  if (x == 0) return;
  if (s.environment_qubits() < spec.environment_qubits_needed()) {
    throw std::invalid_argument(
        "state needs 2 environment qubits per defecting qubit");
  }
  for (int q : spec.affected) {
    if (q < 0 || q >= s.system_qubits()) {
      throw std::invalid_argument("defecting qubit outside system");
    }
  }
  const auto v = defection_isometry(spec);
  const int total = s.total_qubits();
  const std::size_t env_dim = std::size_t{1} << (2 * x);
  const std::size_t flip_dim = std::size_t{1} << x;

  // Masks of the affected system qubits and the environment qubits used,
  // most significant first to match word bit order.
  std::vector<std::size_t> aff_mask(static_cast<std::size_t>(x));
  for (int i = 0; i < x; ++i) {
    aff_mask[static_cast<std::size_t>(i)] =
        std::size_t{1}
        << (total - 1 - spec.affected[static_cast<std::size_t>(i)]);
  }
  std::vector<std::size_t> env_mask(static_cast<std::size_t>(2 * x));
  std::size_t env_bits_all = 0;
  for (int i = 0; i < 2 * x; ++i) {
    env_mask[static_cast<std::size_t>(i)] =
        std::size_t{1} << (total - 1 - (s.system_qubits() + i));
    env_bits_all |= env_mask[static_cast<std::size_t>(i)];
  }

  std::vector<Amplitude> out(s.dim(), Amplitude{0});
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const Amplitude a = s.amp(i);
    if (a == Amplitude{0}) continue;
    if (i & env_bits_all) {
      throw std::invalid_argument(
          "defection environment qubits must start in |0...0>");
    }
    std::size_t j = 0;
    for (int b = 0; b < x; ++b) {
      if (i & aff_mask[static_cast<std::size_t>(b)]) {
        j |= std::size_t{1} << (x - 1 - b);
      }
    }
    const Amplitude* col = v.data() + j * (flip_dim * env_dim);
    for (std::size_t jout = 0; jout < flip_dim; ++jout) {
      std::size_t flipped = i;
      for (int b = 0; b < x; ++b) {
        const bool want = (jout >> (x - 1 - b)) & 1u;
        if (((flipped & aff_mask[static_cast<std::size_t>(b)]) != 0) != want) {
          flipped ^= aff_mask[static_cast<std::size_t>(b)];
        }
      }
      for (std::size_t e = 0; e < env_dim; ++e) {
        const Amplitude c = col[jout * env_dim + e];
        if (c == Amplitude{0}) continue;
        std::size_t target = flipped;
        for (int b = 0; b < 2 * x; ++b) {
          if ((e >> (2 * x - 1 - b)) & 1u) {
            target |= env_mask[static_cast<std::size_t>(b)];
          }
        }
        out[target] += a * c;
      }
    }
  }
  std::copy(out.begin(), out.end(), s.mutable_amplitudes().begin());
}

DefectionSpec sample_stochastic_defection(int n, double p,
                                          std::uint64_t seed) {
  if (p < 0 || p > 1) throw std::invalid_argument("p must be in [0, 1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution defect(p);
  DefectionSpec spec;
  spec.seed = seed ^ 0x9e3779b97f4a7c15ull;
  for (int q = 0; q < n; ++q) {
    if (defect(rng)) spec.affected.push_back(q);
  }
  return spec;
}

}  // namespace qcss
