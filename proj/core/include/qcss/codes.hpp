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

#include <optional>
#include <string>
#include <vector>

#include "qcss/gf2.hpp"

namespace qcss {

/// An [n, k, d] linear code over GF(2).
///
/// The stored generator is in reduced row echelon form with rank k; the
/// check matrix has n - k rows and every generator row satisfies every
/// check row. Minimum distance is computed by exhaustive codeword
/// enumeration (k <= 24) the first time it is asked for, then cached.
class LinearCode {
 public:
  static LinearCode from_generator(const BinaryMatrix& generator);
  static LinearCode from_check(const BinaryMatrix& check);
  /// The [n, n, 1] code of all words.
  static LinearCode full(int n);

  int n() const { return n_; }
  int k() const { return k_; }
  const BinaryMatrix& generator() const { return generator_; }
  const BinaryMatrix& check() const { return check_; }

  /// Min nonzero codeword weight; d = n by convention for k = 0.
  int min_distance() const;

  /// All 2^k codewords, ascending.
  std::vector<BitWord> codewords() const;
  bool contains(const BitWord& w) const;

  /// Parity-check outcomes of w against the check rows, as an
  /// (n-k)-bit word; bit r set iff check row r fails.
  BitWord syndrome(const BitWord& w) const;

  LinearCode dual() const;

  /// Adds the given rows to the check matrix; dimension drops by
  /// exactly the row count. Throws if any row is dependent on the
  /// existing checks or on the other new rows.
  LinearCode kth_order_subcode(const BinaryMatrix& extra_checks) const;

  bool same_codewords(const LinearCode& other) const {
    return generator_.same_row_space(other.generator_);
  }

 private:
  LinearCode(int n, BinaryMatrix generator, BinaryMatrix check);

  int n_;
  int k_;
  BinaryMatrix generator_;
  BinaryMatrix check_;
  mutable std::optional<int> min_distance_;
};

/// A code shifted by XOR with a fixed offset word.
struct Coset {
  LinearCode base;
  BitWord offset;

  std::vector<BitWord> words() const;
  bool contains(const BitWord& w) const;
};

/// Splits c into the 2^x cosets indexed by the basis-1 values of the
/// chosen bit positions: coset j holds the words of c whose bits at
/// `positions` spell j (as an x-bit word, positions in given order).
/// Throws unless every value of j is realised, i.e. the position
/// indicator rows are independent of c's checks.
std::vector<Coset> coset_decompose(const LinearCode& c,
                                   const std::vector<int>& positions);

/// Coset-leader decoding table: syndrome -> minimum-weight error,
/// ties broken by lexicographically smallest word.
struct SyndromeTable {
  BinaryMatrix check_rows;   // rows the syndromes refer to
  std::vector<BitWord> map;  // indexed by syndrome value
  int max_correctable = 0;   // floor((d-1)/2) of the decoded code

  const BitWord& leader(const BitWord& syndrome) const {
    return map.at(syndrome.value());
  }
};

SyndromeTable build_syndrome_table(const LinearCode& c);
/// Same, but against an explicit (full-rank) set of check rows.
SyndromeTable build_syndrome_table(const BinaryMatrix& check_rows,
                                   int max_correctable);

/// The code triple of a CSS construction:
///   c_plus [n, x+K, d1]  -supcode->  c [n, x]  <-dual->  c_perp [n, n-x, d2]
/// with K extra check rows distinguishing the 2^K cosets of c inside
/// c_plus. Satisfies k1 + k2 = n + K.
struct CssTriple {
  LinearCode c_plus;
  LinearCode c;
  LinearCode c_perp;
  BinaryMatrix extra_rows;
  int logical_count = 0;  // K

  int n() const { return c_plus.n(); }
  int d1() const { return c_plus.min_distance(); }
  int d2() const { return c_perp.min_distance(); }
};

CssTriple build_css(const LinearCode& c_plus, const BinaryMatrix& extra_rows);

/// Randomized search for a triple with d1, d2 >= d_target encoding K
/// qubits in n. Deterministic for a fixed seed; bounded attempts.
std::optional<CssTriple> search_weakly_self_dual(int n, int logical_count,
                                                 int d_target,
                                                 std::uint64_t seed,
                                                 int max_attempts = 100000);

/// The built-in codes, stored as the verbatim matrices.
namespace zoo {

BinaryMatrix simplex_generator();   // 3 rows of 7 bits
BinaryMatrix hamming_check();       // check of the [7,4,3] Hamming code
BinaryMatrix simplex_check();       // 4-row check of the simplex code
BinaryMatrix repetition_check();    // check of {000, 111}

LinearCode repetition3();   // [3,1,3]
LinearCode even_parity3();  // [3,2,2]
LinearCode hamming7();      // [7,4,3]
LinearCode simplex7();      // [7,3,4]

/// The 7-qubit scheme: c_plus = Hamming [7,4,3], extra row 1111111.
CssTriple steane_triple();
/// The 3-qubit scheme: c_plus = [3,3,1] full code, extra row 111.
CssTriple three_qubit_triple();

std::optional<LinearCode> find_code(std::string_view name);
std::vector<std::string> code_names();

}  // namespace zoo

}  // namespace qcss
