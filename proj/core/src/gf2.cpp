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

#include "qcss/gf2.hpp"

#include <algorithm>
#include <sstream>

namespace qcss {

BitWord::BitWord(std::uint32_t value, int length) : value_(value), n_(length) {
  if (length < 0 || length > kMaxLength) {
    throw std::invalid_argument("BitWord length must be in [0, 32]");
  }
  if (length < kMaxLength && (value >> length) != 0) {
    throw std::invalid_argument("BitWord value does not fit in length");
  }
}

BitWord BitWord::ones(int length) {
  if (length == 0) return BitWord(0, 0);
  return BitWord(length == kMaxLength ? ~0u : ((1u << length) - 1u), length);
}

BitWord BitWord::unit(int length, int pos) {
  return BitWord::zero(length).with_bit(pos, true);
}

BitWord BitWord::parse(std::string_view text) {
  if (text.size() > kMaxLength) {
    throw std::invalid_argument("word longer than 32 bits");
  }
  std::uint32_t v = 0;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("word must consist of '0' and '1'");
    }
    v = (v << 1) | static_cast<std::uint32_t>(c - '0');
  }
  return BitWord(v, static_cast<int>(text.size()));
}

bool BitWord::bit(int j) const {
  if (j < 0 || j >= n_) throw std::out_of_range("bit index out of range");
  return (value_ >> (n_ - 1 - j)) & 1u;
}

BitWord BitWord::with_bit(int j, bool v) const {
  if (j < 0 || j >= n_) throw std::out_of_range("bit index out of range");
  std::uint32_t mask = 1u << (n_ - 1 - j);
  return BitWord(v ? (value_ | mask) : (value_ & ~mask), n_);
}

void BitWord::check_compatible(const BitWord& other) const {
  if (n_ != other.n_) {
    throw std::invalid_argument("BitWord length mismatch");
  }
}

BitWord BitWord::operator^(const BitWord& other) const {
  check_compatible(other);
  return BitWord(value_ ^ other.value_, n_);
}

BitWord BitWord::operator&(const BitWord& other) const {
  check_compatible(other);
  return BitWord(value_ & other.value_, n_);
}

BitWord& BitWord::operator^=(const BitWord& other) {
  check_compatible(other);
  value_ ^= other.value_;
  return *this;
}

bool BitWord::operator<(const BitWord& other) const {
  check_compatible(other);
  return value_ < other.value_;
}

std::string BitWord::str() const {
  std::string s(static_cast<std::size_t>(n_), '0');
  for (int j = 0; j < n_; ++j) {
    if (bit(j)) s[static_cast<std::size_t>(j)] = '1';
  }
  return s;
}

bool parity_check(const BitWord& h, const BitWord& u) {
  return (h & u).weight() % 2 == 0;
}

int hamming_distance(const BitWord& a, const BitWord& b) {
  return (a ^ b).weight();
}

BinaryMatrix::BinaryMatrix(std::initializer_list<std::string_view> rows)
    : cols_(0) {
  for (auto r : rows) append_row(BitWord::parse(r));
  if (rows.size() == 0) {
    throw std::invalid_argument("cannot infer width of empty matrix literal");
  }
}

BinaryMatrix::BinaryMatrix(std::vector<BitWord> rows) : cols_(0) {
  if (rows.empty()) {
    throw std::invalid_argument("cannot infer width of empty row list");
  }
  cols_ = rows.front().length();
  for (const auto& r : rows) {
    if (r.length() != cols_) {
      throw std::invalid_argument("matrix rows must have equal length");
    }
  }
  rows_ = std::move(rows);
}

BinaryMatrix BinaryMatrix::identity(int n) {
  BinaryMatrix m(n);
  for (int i = 0; i < n; ++i) m.append_row(BitWord::unit(n, i));
  return m;
}

BinaryMatrix BinaryMatrix::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<BitWord> rows;
  std::string line;
  int cols = -1;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.pop_back();
    }
    if (line.empty()) continue;
    rows.push_back(BitWord::parse(line));
    if (cols < 0) cols = rows.back().length();
  }
  if (rows.empty()) throw std::invalid_argument("empty matrix text");
  return BinaryMatrix(std::move(rows));
}

void BinaryMatrix::append_row(const BitWord& w) {
  if (rows_.empty() && cols_ == 0) cols_ = w.length();
  if (w.length() != cols_) {
    throw std::invalid_argument("matrix rows must have equal length");
  }
  rows_.push_back(w);
}

BinaryMatrix::Echelon BinaryMatrix::row_reduce() const {
  std::vector<BitWord> work = rows_;
  std::vector<int> pivots;
  std::size_t next_row = 0;
  for (int col = 0; col < cols_ && next_row < work.size(); ++col) {
    // First (leftmost) column wins; first available row is the pivot row.
    std::size_t pivot = next_row;
    while (pivot < work.size() && !work[pivot].bit(col)) ++pivot;
    if (pivot == work.size()) continue;
    std::swap(work[next_row], work[pivot]);
    for (std::size_t r = 0; r < work.size(); ++r) {
      if (r != next_row && work[r].bit(col)) work[r] ^= work[next_row];
    }
    pivots.push_back(col);
    ++next_row;
  }
  Echelon result{BinaryMatrix(cols_), static_cast<int>(next_row),
                 std::move(pivots)};
  for (std::size_t r = 0; r < next_row; ++r) result.reduced.append_row(work[r]);
  return result;
}

BinaryMatrix BinaryMatrix::null_space() const {
  Echelon e = row_reduce();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
  for (int p : e.pivot_columns) is_pivot[static_cast<std::size_t>(p)] = true;

  BinaryMatrix basis(cols_);
  for (int f = 0; f < cols_; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    BitWord v = BitWord::unit(cols_, f);
    for (int r = 0; r < e.rank; ++r) {
      if (e.reduced.row(r).bit(f)) {
        v = v.with_bit(e.pivot_columns[static_cast<std::size_t>(r)], true);
      }
    }
    basis.append_row(v);
  }
  return basis;
}

bool BinaryMatrix::in_row_space(const BitWord& w) const {
  if (w.length() != cols_) {
    throw std::invalid_argument("word length does not match matrix width");
  }
  Echelon e = row_reduce();
  BitWord v = w;
  for (int r = 0; r < e.rank; ++r) {
    if (v.bit(e.pivot_columns[static_cast<std::size_t>(r)])) {
      v ^= e.reduced.row(r);
    }
  }
  return v.weight() == 0;
}

bool BinaryMatrix::same_row_space(const BinaryMatrix& other) const {
  if (cols_ != other.cols_) return false;
  return row_reduce().reduced == other.row_reduce().reduced;
}

std::string BinaryMatrix::str() const {
  std::string out;
  for (const auto& r : rows_) {
    out += r.str();
    out += '\n';
  }
  return out;
}

}  // namespace qcss
