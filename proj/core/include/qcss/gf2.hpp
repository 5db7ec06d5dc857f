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

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qcss {

/// A fixed-length word over GF(2), packed into a machine integer.
///
/// Bit index 0 is the leftmost character of the printed word; bit j
/// contributes 2^(n-1-j) to value(). This makes the printed form match
/// basis-state ket labels, and lexicographic order on words equal
/// numeric order on value().
class BitWord {
 public:
  static constexpr int kMaxLength = 32;

  BitWord() = default;
  BitWord(std::uint32_t value, int length);

  static BitWord zero(int length) { return BitWord(0, length); }
  static BitWord ones(int length);
  static BitWord unit(int length, int pos);
  static BitWord parse(std::string_view text);

  int length() const { return n_; }
  std::uint32_t value() const { return value_; }
  bool bit(int j) const;
  BitWord with_bit(int j, bool v) const;
  int weight() const { return std::popcount(value_); }

  BitWord operator^(const BitWord& other) const;
  BitWord operator&(const BitWord& other) const;
  BitWord& operator^=(const BitWord& other);

  bool operator==(const BitWord&) const = default;
  bool operator<(const BitWord& other) const;

  std::string str() const;

 private:
  void check_compatible(const BitWord& other) const;

  std::uint32_t value_ = 0;
  int n_ = 0;
};

/// Satisfied iff weight(h AND u) is even.
bool parity_check(const BitWord& h, const BitWord& u);

/// weight(a XOR b): number of positions where a and b differ.
int hamming_distance(const BitWord& a, const BitWord& b);

/// A list of equal-length rows over GF(2).
class BinaryMatrix {
 public:
  explicit BinaryMatrix(int cols) : cols_(cols) {}
  BinaryMatrix(std::initializer_list<std::string_view> rows);
  explicit BinaryMatrix(std::vector<BitWord> rows);

  static BinaryMatrix identity(int n);
  static BinaryMatrix parse(std::string_view text);

  int cols() const { return cols_; }
  int row_count() const { return static_cast<int>(rows_.size()); }
  const BitWord& row(int i) const { return rows_.at(i); }
  const std::vector<BitWord>& rows() const { return rows_; }
  void append_row(const BitWord& w);

  /// Reduced row echelon form; leftmost-column pivots, zero rows dropped.
  struct Echelon;
  Echelon row_reduce() const;

  int rank() const;

  /// Generator of {v : parity_check(row, v) for all rows}.
  /// Result has n - rank(this) rows.
  BinaryMatrix null_space() const;

  bool in_row_space(const BitWord& w) const;
  bool same_row_space(const BinaryMatrix& other) const;

  bool operator==(const BinaryMatrix&) const = default;

  /// One word per line.
  std::string str() const;

 private:
  int cols_;
  std::vector<BitWord> rows_;
};

struct BinaryMatrix::Echelon {
  BinaryMatrix reduced;
  int rank = 0;
  std::vector<int> pivot_columns;
};

inline int BinaryMatrix::rank() const { return row_reduce().rank; }

}  // namespace qcss
