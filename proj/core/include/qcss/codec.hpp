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

#include <vector>

#include "qcss/channels.hpp"
#include "qcss/circuit.hpp"
#include "qcss/codes.hpp"
#include "qcss/qstate.hpp"

namespace qcss {

/// Encoding circuit for a code triple. The circuit maps the K logical
/// input qubits, sitting at logical_positions with every other qubit in
/// |0>, to the matching superposition of coset states.
///
/// Construction: each logical input fans out its coset offset word with
/// CNOTs, then each generator-row pivot is rotated to basis 2 and fans
/// out its row. Offsets are the unique coset representatives that are
/// zero on the generator pivots; the logical position is the leading
/// set bit of the offset.
struct Encoder {
  Circuit circuit;
  std::vector<int> logical_positions;   // one per logical qubit
  std::vector<BitWord> offsets;         // coset offset words, one per logical
  std::vector<int> generator_pivots;    // pivots of the subcode generator
};

Encoder build_encoder(const CssTriple& css);

/// Encoded state for the given 2^K logical amplitudes, with optional
/// extra registers for later error and correction steps.
QuantumState encode(const CssTriple& css,
                    const std::vector<Amplitude>& logical, int n_env = 0,
                    int n_anc = 0);

/// Reference coset state |Ci>: uniform superposition of the i'th coset,
/// where i is read from the extra-row parity checks.
QuantumState coset_state(const CssTriple& css, std::uint32_t i, int n_env = 0,
                         int n_anc = 0);

enum class CorrectorStyle { in_place, ancilla };

/// Syndrome extraction plus correction for one basis. Basis 1 decodes
/// against the supercode's checks, basis 2 against the dual code's
/// checks (the same checks read in the rotated basis).
///
/// The in-place style accumulates parities onto the check-pivot qubits,
/// measures them, corrects the remaining data positions, resets the
/// measured qubits and recomputes them from the corrected data. The
/// ancilla style copies parities onto fresh ancillas, measures those,
/// and corrects every position of the decoded error; the data qubits
/// are never measured and the ancillas are returned to |0>.
struct Corrector {
  Circuit circuit;
  SyndromeTable table;
  Basis basis;
  CorrectorStyle style;
  std::vector<int> parity_positions;  // measured qubits (in-place style)
};

Corrector build_corrector(const CssTriple& css, Basis basis,
                          CorrectorStyle style);

/// Per-branch record of what a corrector did.
struct CorrectionOutcome {
  double weight;
  BitWord syndrome;
  BitWord correction;  // decoded error pattern
};

std::vector<CorrectionOutcome> correction_outcomes(
    const Corrector& corrector, const std::vector<Branch>& branches,
    int slot_base = 0);

/// Result of a coherence experiment on one logical qubit.
struct AlphaResult {
  SingleQubitDensity density;
  Amplitude alpha;              // measured off-diagonal coherence factor
  Amplitude alpha_closed_form;  // prediction from the matching formula
};

/// Closed forms for the two three-qubit experiments below.
Amplitude phase_error_alpha_formula(double phi0, double phi1, double phi2,
                                    double eps);
double purity_amplification_alpha_formula(double eps0, double eps1,
                                          double eps2);

/// Three-qubit scheme against unitary phase errors: encode a|0> + b|1>,
/// rotate every qubit by diag(exp(i eps phi_j / 2), exp(-i eps phi_j / 2)),
/// run the basis-2 corrector with branch-weighted averaging, decode, and
/// read the logical qubit's coherence factor.
AlphaResult run_phase_error_experiment(double phi0, double phi1, double phi2,
                                       double eps, Amplitude a, Amplitude b);

/// Three-qubit scheme against environment entanglement of strength
/// eps_j per qubit (eps_j = 0 skips the qubit); same pipeline with the
/// environment traced out at the end.
AlphaResult run_purity_amplification(double eps0, double eps1, double eps2,
                                     Amplitude a, Amplitude b);

/// Checks the coset identity: the words of c whose bits at `positions`
/// spell j, versus the signed sum over sign-flip patterns l on those
/// positions weighted by (-1)^wt(j AND l). Returns the max amplitude
/// deviation between the two normalized state vectors.
double coset_sum_identity_check(const LinearCode& c,
                                const std::vector<int>& positions,
                                std::uint32_t j);

/// End-to-end recovery: encode, defect, correct in basis 1 then basis
/// 2, and compare against the pre-defection state.
struct RecoveryResult {
  double fidelity;  // overlap of the averaged system density with the
                    // error-free encoded state
  double purity;    // trace of the averaged system density squared
};

RecoveryResult run_theorem6_recovery(const CssTriple& css,
                                     const std::vector<Amplitude>& logical,
                                     const DefectionSpec& defect,
                                     CorrectorStyle style =
                                         CorrectorStyle::in_place);

}  // namespace qcss
