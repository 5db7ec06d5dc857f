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

#include "qcss/codec.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qcss {

namespace {

// Solves A t = rhs over GF(2); free variables set to zero.
BitWord solve_linear(const BinaryMatrix& a, const BitWord& rhs) {
  const int n = a.cols();
  if (rhs.length() != a.row_count()) {
    throw std::invalid_argument("rhs length must equal row count");
  }
  BinaryMatrix aug(n + 1);
  for (int i = 0; i < a.row_count(); ++i) {
    BitWord row(a.row(i).value() << 1, n + 1);
    aug.append_row(row.with_bit(n, rhs.bit(i)));
  }
  const auto ech = aug.row_reduce();
  BitWord t = BitWord::zero(n);
  for (int r = 0; r < ech.reduced.row_count(); ++r) {
    const int pivot = ech.pivot_columns[static_cast<std::size_t>(r)];
    if (pivot == n) throw std::invalid_argument("inconsistent linear system");
    t = t.with_bit(pivot, ech.reduced.row(r).bit(n));
  }
  return t;
}

std::vector<int> set_bits(const BitWord& w) {
  std::vector<int> out;
  for (int j = 0; j < w.length(); ++j) {
    if (w.bit(j)) out.push_back(j);
  }
  return out;
}

}  // namespace

Encoder build_encoder(const CssTriple& css) {
  const int n = css.n();
  const int K = css.logical_count;
  const BinaryMatrix& gen = css.c.generator();
  const auto gen_ech = gen.row_reduce();

  // Offset t_i: in c_plus, fails extra row i only, zero on the
  // generator pivots so its leading bit marks the logical position.
  BinaryMatrix system(n);
  for (const BitWord& h : css.c_plus.check().rows()) system.append_row(h);
  for (const BitWord& e : css.extra_rows.rows()) system.append_row(e);
  Encoder enc;
  for (int i = 0; i < K; ++i) {
    BitWord rhs = BitWord::zero(system.row_count());
    rhs = rhs.with_bit(css.c_plus.check().row_count() + i, true);
    BitWord t = solve_linear(system, rhs);
    for (int r = 0; r < gen_ech.reduced.row_count(); ++r) {
      const int q = gen_ech.pivot_columns[static_cast<std::size_t>(r)];
      if (t.bit(q)) t ^= gen_ech.reduced.row(r);
    }
    const auto bits = set_bits(t);
    if (bits.empty()) throw std::logic_error("zero coset offset");
    enc.offsets.push_back(t);
    enc.logical_positions.push_back(bits.front());
  }
  enc.generator_pivots = gen_ech.pivot_columns;

  // Fan i writes into every set bit of t_i except its own control;
  // order so no fan's control is written before that fan runs.
  std::vector<std::vector<int>> before(static_cast<std::size_t>(K));
  std::vector<int> pending(static_cast<std::size_t>(K), 0);
  for (int i = 0; i < K; ++i) {
    for (int j = 0; j < K; ++j) {
      if (i != j &&
          enc.offsets[static_cast<std::size_t>(i)].bit(
              enc.logical_positions[static_cast<std::size_t>(j)])) {
        before[static_cast<std::size_t>(j)].push_back(i);
        ++pending[static_cast<std::size_t>(i)];
      }
    }
  }
  std::vector<int> order;
  std::vector<int> ready;
  for (int i = 0; i < K; ++i) {
    if (pending[static_cast<std::size_t>(i)] == 0) ready.push_back(i);
  }
  while (!ready.empty()) {
    const int j = ready.back();
    ready.pop_back();
    order.push_back(j);
    for (int i : before[static_cast<std::size_t>(j)]) {
      if (--pending[static_cast<std::size_t>(i)] == 0) ready.push_back(i);
    }
  }
  if (static_cast<int>(order.size()) != K) {
    throw std::logic_error("cyclic offset dependencies; no fan order");
  }

  enc.circuit.n_system = n;
  for (int i : order) {
    const int p = enc.logical_positions[static_cast<std::size_t>(i)];
    for (int s : set_bits(enc.offsets[static_cast<std::size_t>(i)])) {
      if (s != p) enc.circuit.append(Gate::cnot(p, s));
    }
  }
  for (int r = 0; r < gen_ech.reduced.row_count(); ++r) {
    const int q = gen_ech.pivot_columns[static_cast<std::size_t>(r)];
    enc.circuit.append(Gate::rotate(q));
    for (int s : set_bits(gen_ech.reduced.row(r))) {
      if (s != q) enc.circuit.append(Gate::cnot(q, s));
    }
  }
  enc.circuit.validate();
  return enc;
}

QuantumState encode(const CssTriple& css, const std::vector<Amplitude>& logical,
                    int n_env, int n_anc) {
  const int K = css.logical_count;
  if (logical.size() != (std::size_t{1} << K)) {
    throw std::invalid_argument("need 2^K logical amplitudes");
  }
  const Encoder enc = build_encoder(css);
  QuantumState s(css.n(), n_env, n_anc);
  s.set_amp(0, Amplitude{0});
  const std::size_t rest_dim = std::size_t{1} << (n_env + n_anc);
  for (std::size_t v = 0; v < logical.size(); ++v) {
    BitWord w = BitWord::zero(css.n());
    for (int i = 0; i < K; ++i) {
      if ((v >> (K - 1 - i)) & 1u) {
        w = w.with_bit(enc.logical_positions[static_cast<std::size_t>(i)],
                       true);
      }
    }
    s.set_amp(std::size_t{w.value()} * rest_dim, logical[v]);
  }
  s.normalize();
  auto branches = run_circuit(enc.circuit, s);
  return branches.front().state;
}

QuantumState coset_state(const CssTriple& css, std::uint32_t i, int n_env,
                         int n_anc) {
  const int K = css.logical_count;
  if (i >= (std::uint32_t{1} << K)) {
    throw std::invalid_argument("coset index out of range");
  }
  std::vector<BitWord> words;
  for (const BitWord& w : css.c_plus.codewords()) {
    std::uint32_t label = 0;
    for (int r = 0; r < K; ++r) {
      if (!parity_check(css.extra_rows.row(r), w)) {
        label |= std::uint32_t{1} << (K - 1 - r);
      }
    }
    if (label == i) words.push_back(w);
  }
  return state_from_words(words, n_env, n_anc);
}

Corrector build_corrector(const CssTriple& css, Basis basis,
                          CorrectorStyle style) {
  const LinearCode& code = basis == Basis::one ? css.c_plus : css.c_perp;
  const auto ech = code.check().row_reduce();
  const int n = code.n();
  const int m = ech.rank;
  const int max_corr = code.k() > 0 ? (code.min_distance() - 1) / 2 : 0;

  Corrector corr{Circuit{}, build_syndrome_table(ech.reduced, max_corr),
                 basis, style, {}};
  Circuit& c = corr.circuit;
  c.n_system = n;
  c.n_slots = m;

  if (style == CorrectorStyle::in_place) {
    corr.parity_positions = ech.pivot_columns;
    for (int r = 0; r < m; ++r) {
      const int q = ech.pivot_columns[static_cast<std::size_t>(r)];
      for (int s : set_bits(ech.reduced.row(r))) {
        if (s != q) c.append(Gate::cnot(s, q, basis));
      }
    }
    for (int r = 0; r < m; ++r) {
      c.append(Gate::measure(ech.pivot_columns[static_cast<std::size_t>(r)],
                             r, basis));
    }
  } else {
    c.n_ancilla = m;
    for (int r = 0; r < m; ++r) {
      const int anc = kAncillaBase + r;
      corr.parity_positions.push_back(anc);
      if (basis == Basis::two) c.append(Gate::rotate(anc));
      for (int s : set_bits(ech.reduced.row(r))) {
        c.append(Gate::cnot(s, anc, basis));
      }
      c.append(Gate::measure(anc, r, basis));
    }
  }

  for (std::uint32_t sigma = 1; sigma < corr.table.map.size(); ++sigma) {
    const BitWord& leader = corr.table.map[sigma];
    const BitWord sw(sigma, m);
    std::vector<int> targets;
    for (int s : set_bits(leader)) {
      if (style == CorrectorStyle::ancilla ||
          std::find(ech.pivot_columns.begin(), ech.pivot_columns.end(), s) ==
              ech.pivot_columns.end()) {
        targets.push_back(s);
      }
    }
    if (targets.empty()) continue;
    std::vector<std::pair<int, bool>> condition;
    for (int r = 0; r < m; ++r) condition.emplace_back(r, sw.bit(r));
    c.append(Gate::controlled_not(std::move(condition), std::move(targets),
                                  basis));
  }

  if (style == CorrectorStyle::in_place) {
    // Reset the measured qubits, then recompute them from the
    // corrected data positions.
    for (int r = 0; r < m; ++r) {
      c.append(Gate::controlled_not(
          {{r, true}}, {ech.pivot_columns[static_cast<std::size_t>(r)]},
          basis));
    }
    for (int r = 0; r < m; ++r) {
      const int q = ech.pivot_columns[static_cast<std::size_t>(r)];
      for (int s : set_bits(ech.reduced.row(r))) {
        if (s != q) c.append(Gate::cnot(s, q, basis));
      }
    }
  } else {
    for (int r = 0; r < m; ++r) {
      const int anc = kAncillaBase + r;
      c.append(Gate::controlled_not({{r, true}}, {anc}, basis));
      if (basis == Basis::two) c.append(Gate::rotate(anc));
    }
  }
  c.validate();
  return corr;
}

std::vector<CorrectionOutcome> correction_outcomes(
    const Corrector& corrector, const std::vector<Branch>& branches,
    int slot_base) {
  const int m = corrector.table.check_rows.row_count();
  std::vector<CorrectionOutcome> out;
  for (const Branch& b : branches) {
    BitWord syndrome = BitWord::zero(m);
    for (int r = 0; r < m; ++r) {
      const int v = b.slots.at(static_cast<std::size_t>(slot_base + r));
      if (v < 0) throw std::invalid_argument("branch is missing syndrome");
      syndrome = syndrome.with_bit(r, v != 0);
    }
    out.push_back(
        CorrectionOutcome{b.weight, syndrome, corrector.table.leader(syndrome)});
  }
  return out;
}

Amplitude phase_error_alpha_formula(double phi0, double phi1, double phi2,
                                    double eps) {
  const double c0 = std::cos(eps * phi0);
  const double c1 = std::cos(eps * phi1);
  const double c2 = std::cos(eps * phi2);
  const double s0 = std::sin(eps * phi0);
  const double s1 = std::sin(eps * phi1);
  const double s2 = std::sin(eps * phi2);
  // The imaginary part carries the sign that follows from the error
  // operator convention diag(exp(+i eps phi / 2), exp(-i eps phi / 2)),
  // under which a bare qubit picks up exp(+i eps phi).
  return 0.5 * Amplitude(c0 + c1 + c2 - c0 * c1 * c2, s0 * s1 * s2);
}

double purity_amplification_alpha_formula(double eps0, double eps1,
                                          double eps2) {
  return 1.0 - 0.5 * (eps0 * eps1 + eps0 * eps2 + eps1 * eps2) +
         0.5 * eps0 * eps1 * eps2;
}

namespace {

struct ThreeQubitRun {
  CssTriple css = zoo::three_qubit_triple();
  Encoder enc = build_encoder(css);
  Corrector corr = build_corrector(css, Basis::two, CorrectorStyle::in_place);

  AlphaResult finish(QuantumState state, Amplitude a, Amplitude b,
                     Amplitude closed_form) {
    auto branches = run_circuit(corr.circuit, state);
    branches = run_circuit(enc.circuit.inverted(), branches);
    const int p = enc.logical_positions.front();
    const SingleQubitDensity rho = average_reduced_density(branches, p);
    return AlphaResult{rho, rho.coherence(a, b), closed_form};
  }
};

}  // namespace

AlphaResult run_phase_error_experiment(double phi0, double phi1, double phi2,
                                       double eps, Amplitude a, Amplitude b) {
  ThreeQubitRun run;
  QuantumState state = encode(run.css, {a, b});
  if (eps > 0) {
    apply_phase_errors(state, PhaseErrorSpec{eps, {phi0, phi1, phi2}});
  }
  return run.finish(std::move(state), a, b,
                    phase_error_alpha_formula(phi0, phi1, phi2, eps));
}

AlphaResult run_purity_amplification(double eps0, double eps1, double eps2,
                                     Amplitude a, Amplitude b) {
  ThreeQubitRun run;
  QuantumState state = encode(run.css, {a, b}, /*n_env=*/3);
  const double eps[3] = {eps0, eps1, eps2};
  EntangleSpec spec;
  for (int j = 0; j < 3; ++j) {
    if (eps[j] > 0) spec.terms.push_back({j, 3 + j, eps[j]});
  }
  apply_entangle(state, spec);
  return run.finish(
      std::move(state), a, b,
      Amplitude{purity_amplification_alpha_formula(eps0, eps1, eps2)});
}

double coset_sum_identity_check(const LinearCode& c,
                                const std::vector<int>& positions,
                                std::uint32_t j) {
  const int x = static_cast<int>(positions.size());
  if (c.n() > 12) throw std::invalid_argument("length capped at 12");
  if (x > 0 && j >= (std::uint32_t{1} << x)) {
    throw std::invalid_argument("coset label out of range");
  }
  const auto words = c.codewords();
  auto restriction = [&](const BitWord& w) {
    std::uint32_t v = 0;
    for (int i = 0; i < x; ++i) {
      if (w.bit(positions[static_cast<std::size_t>(i)])) {
        v |= std::uint32_t{1} << (x - 1 - i);
      }
    }
    return v;
  };

  const std::size_t dim = std::size_t{1} << c.n();
  std::vector<double> lhs(dim, 0.0), rhs(dim, 0.0);
  for (const BitWord& w : words) {
    const std::uint32_t r = restriction(w);
    if (r == j) lhs[w.value()] += 1.0;
    for (std::uint32_t l = 0; l < (std::uint32_t{1} << x); ++l) {
      const int sign_bits = std::popcount(j & l) + std::popcount(r & l);
      rhs[w.value()] += (sign_bits % 2 == 0) ? 1.0 : -1.0;
    }
  }
  auto normalize = [](std::vector<double>& v) {
    double nrm = 0;
    for (double a : v) nrm += a * a;
    nrm = std::sqrt(nrm);
    if (nrm <= 0) throw std::invalid_argument("empty coset");
    for (double& a : v) a /= nrm;
  };
  normalize(lhs);
  normalize(rhs);
  double dev = 0;
  for (std::size_t i = 0; i < dim; ++i) {
    dev = std::max(dev, std::abs(lhs[i] - rhs[i]));
  }
  return dev;
}

RecoveryResult run_theorem6_recovery(const CssTriple& css,
                                     const std::vector<Amplitude>& logical,
                                     const DefectionSpec& defect,
                                     CorrectorStyle style) {
  const Corrector corr1 = build_corrector(css, Basis::one, style);
  const Corrector corr2 = build_corrector(css, Basis::two, style);
  const int n_env = defect.environment_qubits_needed();
  const int n_anc =
      std::max(corr1.circuit.n_ancilla, corr2.circuit.n_ancilla);

  QuantumState state = encode(css, logical, n_env, n_anc);
  const QuantumState reference = state;
  apply_defection(state, defect);

  Circuit pipeline = corr1.circuit;
  pipeline.append(corr2.circuit);
  const auto branches = run_circuit(pipeline, state);

  const auto rho = average_system_density(branches);
  const std::size_t sys_dim = std::size_t{1} << css.n();
  const std::size_t rest_dim = std::size_t{1} << (n_env + n_anc);
  std::vector<Amplitude> psi(sys_dim);
  for (std::size_t i = 0; i < sys_dim; ++i) {
    psi[i] = reference.amp(i * rest_dim);
  }
  Amplitude fid{0};
  double purity = 0;
  for (std::size_t i = 0; i < sys_dim; ++i) {
    for (std::size_t k = 0; k < sys_dim; ++k) {
      fid += std::conj(psi[i]) * rho[i * sys_dim + k] * psi[k];
      purity += std::norm(rho[i * sys_dim + k]);
    }
  }
  return RecoveryResult{fid.real(), purity};
}

}  // namespace qcss
