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

#include "qcss/codes.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace qcss {

LinearCode::LinearCode(int n, BinaryMatrix generator, BinaryMatrix check)
    : n_(n),
      k_(generator.row_count()),
      generator_(std::move(generator)),
      check_(std::move(check)) {}

LinearCode LinearCode::from_generator(const BinaryMatrix& generator) {
  auto e = generator.row_reduce();
  BinaryMatrix check = e.reduced.row_count() > 0
                           ? e.reduced.null_space()
                           : BinaryMatrix::identity(generator.cols());
  return LinearCode(generator.cols(), std::move(e.reduced), std::move(check));
}

LinearCode LinearCode::from_check(const BinaryMatrix& check) {
  auto gen = check.null_space();
  if (gen.row_count() == 0) {
    // [n, 0] code: empty generator, full-rank check.
    return LinearCode(check.cols(), BinaryMatrix(check.cols()),
                      check.row_reduce().reduced);
  }
  return LinearCode(check.cols(), gen.row_reduce().reduced, check);
}

LinearCode LinearCode::full(int n) {
  return LinearCode(n, BinaryMatrix::identity(n), BinaryMatrix(n));
}

int LinearCode::min_distance() const {
  if (min_distance_) return *min_distance_;
  if (k_ == 0) {
    min_distance_ = n_;  // convention
    return *min_distance_;
  }
  if (k_ > 24) {
    throw std::runtime_error(
        "min_distance: dimension too large for exhaustive enumeration "
        "(k <= 24)");
  }
  int best = n_;
  BitWord w = BitWord::zero(n_);
  // Gray-code walk over all 2^k row combinations.
  for (std::uint32_t i = 1; i < (1u << k_); ++i) {
    int flipped = std::countr_zero(i);
    w ^= generator_.row(k_ - 1 - flipped);
    if (int wt = w.weight(); wt > 0 && wt < best) best = wt;
  }
  min_distance_ = best;
  return best;
}

std::vector<BitWord> LinearCode::codewords() const {
  if (k_ > 24) {
    throw std::runtime_error("codewords: dimension too large (k <= 24)");
  }
  std::vector<BitWord> words;
  words.reserve(1u << k_);
  BitWord w = BitWord::zero(n_);
  words.push_back(w);
  for (std::uint32_t i = 1; i < (1u << k_); ++i) {
    w ^= generator_.row(k_ - 1 - std::countr_zero(i));
    words.push_back(w);
  }
  std::sort(words.begin(), words.end());
  return words;
}

bool LinearCode::contains(const BitWord& w) const {
  for (const auto& h : check_.rows()) {
    if (!parity_check(h, w)) return false;
  }
  return true;
}

BitWord LinearCode::syndrome(const BitWord& w) const {
  BitWord s = BitWord::zero(check_.row_count());
  for (int r = 0; r < check_.row_count(); ++r) {
    if (!parity_check(check_.row(r), w)) s = s.with_bit(r, true);
  }
  return s;
}

LinearCode LinearCode::dual() const {
  if (k_ == 0) return LinearCode::full(n_);
  return LinearCode::from_check(generator_);
}

LinearCode LinearCode::kth_order_subcode(
    const BinaryMatrix& extra_checks) const {
  if (extra_checks.cols() != n_) {
    throw std::invalid_argument("extra check rows have wrong length");
  }
  BinaryMatrix combined = check_;
  for (const auto& row : extra_checks.rows()) {
    if (combined.row_count() > 0 && combined.in_row_space(row)) {
      throw std::invalid_argument(
          "extra check row lies in the span of the existing checks");
    }
    if (row.weight() == 0) {
      throw std::invalid_argument("extra check row is zero");
    }
    combined.append_row(row);
  }
  if (combined.rank() != combined.row_count()) {
    throw std::invalid_argument("extra check rows are mutually dependent");
  }
  return LinearCode::from_check(combined);
}

std::vector<BitWord> Coset::words() const {
  auto ws = base.codewords();
  for (auto& w : ws) w ^= offset;
  std::sort(ws.begin(), ws.end());
  return ws;
}

bool Coset::contains(const BitWord& w) const {
  return base.contains(w ^ offset);
}

std::vector<Coset> coset_decompose(const LinearCode& c,
                                   const std::vector<int>& positions) {
  const int x = static_cast<int>(positions.size());
  if (x == 0) return {Coset{c, BitWord::zero(c.n())}};
  if (x > c.k()) {
    throw std::invalid_argument("more positions than code dimension");
  }
  BinaryMatrix indicators(c.n());
  for (int p : positions) indicators.append_row(BitWord::unit(c.n(), p));
  LinearCode base = c.kth_order_subcode(indicators);

  // Representative for each value j of the chosen bits.
  std::vector<Coset> cosets;
  auto all = c.codewords();
  for (std::uint32_t j = 0; j < (1u << x); ++j) {
    auto rep = std::find_if(all.begin(), all.end(), [&](const BitWord& w) {
      for (int i = 0; i < x; ++i) {
        if (w.bit(positions[static_cast<std::size_t>(i)]) !=
            (((j >> (x - 1 - i)) & 1u) != 0)) {
          return false;
        }
      }
      return true;
    });
    if (rep == all.end()) {
      throw std::invalid_argument(
          "positions do not induce a full coset decomposition");
    }
    cosets.push_back(Coset{base, *rep});
  }
  return cosets;
}

SyndromeTable build_syndrome_table(const BinaryMatrix& check_rows,
                                   int max_correctable) {
  const int n = check_rows.cols();
  const int m = check_rows.row_count();
  if (n > 20) {
    throw std::runtime_error(
        "syndrome table: code too long for exhaustive leader search (n <= "
        "20)");
  }
  SyndromeTable table{check_rows, {}, max_correctable};
  table.map.assign(1u << m, BitWord::zero(n));
  std::vector<bool> filled(1u << m, false);
  // Ascending word value = ascending lexicographic order, so the first
  // minimum-weight word seen for a syndrome is the tie-break winner.
  std::vector<int> best_weight(1u << m, n + 1);
  for (std::uint32_t v = 0; v < (1u << n); ++v) {
    BitWord e(v, n);
    BitWord s = BitWord::zero(m);
    for (int r = 0; r < m; ++r) {
      if (!parity_check(check_rows.row(r), e)) s = s.with_bit(r, true);
    }
    if (e.weight() < best_weight[s.value()]) {
      best_weight[s.value()] = e.weight();
      table.map[s.value()] = e;
      filled[s.value()] = true;
    }
  }
  for (bool f : filled) {
    if (!f) throw std::runtime_error("syndrome table: check rows dependent");
  }
  return table;
}

SyndromeTable build_syndrome_table(const LinearCode& c) {
  return build_syndrome_table(c.check(), (c.min_distance() - 1) / 2);
}

CssTriple build_css(const LinearCode& c_plus, const BinaryMatrix& extra_rows) {
  LinearCode c = c_plus.kth_order_subcode(extra_rows);
  LinearCode c_perp = c.dual();
  CssTriple triple{c_plus, std::move(c), std::move(c_perp), extra_rows,
                   extra_rows.row_count()};
  // k1 + k2 = n + K must hold by construction.
  if (triple.c_plus.k() + triple.c_perp.k() !=
      triple.n() + triple.logical_count) {
    throw std::logic_error("CSS triple violates k1 + k2 = n + K");
  }
  return triple;
}

namespace {

// Completes the checks of `sub` (a subcode of `code`) to a full check
// matrix of `sub` using rows that are generator rows of `code`'s dual
// complement; returns the K completion rows.
BinaryMatrix completion_rows(const LinearCode& code, const LinearCode& sub) {
  BinaryMatrix span = code.check();
  BinaryMatrix extra(code.n());
  for (const auto& row : sub.check().rows()) {
    if (span.row_count() == 0 || !span.in_row_space(row)) {
      span.append_row(row);
      extra.append_row(row);
    }
  }
  return extra;
}

}  // namespace

std::optional<CssTriple> search_weakly_self_dual(int n, int logical_count,
                                                 int d_target,
                                                 std::uint64_t seed,
                                                 int max_attempts) {
  if (n < 1 || n > 20 || logical_count < 1) {
    throw std::invalid_argument("search: need 1 <= n <= 20 and K >= 1");
  }
  if (d_target <= 1) {
    // The full code with unit-vector extra rows always works.
    BinaryMatrix extra(n);
    for (int i = 0; i < logical_count; ++i) {
      extra.append_row(BitWord::unit(n, i));
    }
    return build_css(LinearCode::full(n), extra);
  }
  // Look for a self-orthogonal code C of dimension (n - K) / 2 whose
  // dual has distance >= d_target; then c_plus = dual(C) and the extra
  // rows complete C's checks beyond those of c_plus.
  if ((n - logical_count) % 2 != 0) return std::nullopt;
  const int x = (n - logical_count) / 2;
  if (x < 1) return std::nullopt;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> word_dist(
      1, (n == 32 ? ~0u : (1u << n) - 1u));
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    BinaryMatrix gen(n);
    int tries = 0;
    while (gen.row_count() < x && tries < 64 * x) {
      ++tries;
      BitWord cand(word_dist(rng), n);
      if (cand.weight() % 2 != 0) continue;  // must be self-orthogonal
      bool ok = true;
      for (const auto& r : gen.rows()) {
        if (!parity_check(r, cand)) ok = false;
      }
      if (!ok) continue;
      if (gen.row_count() > 0 && gen.in_row_space(cand)) continue;
      gen.append_row(cand);
    }
    if (gen.row_count() < x) continue;

    LinearCode c = LinearCode::from_generator(gen);
    LinearCode c_perp = c.dual();
    if (c_perp.min_distance() < d_target) continue;
    // Self-orthogonality gives C subset of C_perp; C_perp is c_plus.
    BinaryMatrix extra = completion_rows(c_perp, c);
    if (extra.row_count() != logical_count) continue;
    CssTriple triple = build_css(c_perp, extra);
    if (triple.d1() >= d_target && triple.d2() >= d_target) return triple;
  }
  return std::nullopt;
}

namespace zoo {

BinaryMatrix simplex_generator() {
  return BinaryMatrix{"0001111", "0110011", "1010101"};
}

BinaryMatrix hamming_check() {
  return BinaryMatrix{"0111100", "1011010", "1101001"};
}

BinaryMatrix simplex_check() {
  return BinaryMatrix{"1101001", "0101010", "1001100", "1110000"};
}

BinaryMatrix repetition_check() { return BinaryMatrix{"110", "101"}; }

LinearCode repetition3() {
  return LinearCode::from_check(repetition_check());
}

LinearCode even_parity3() {
  return LinearCode::from_check(BinaryMatrix{"111"});
}

LinearCode hamming7() { return LinearCode::from_check(hamming_check()); }

LinearCode simplex7() {
  return LinearCode::from_generator(simplex_generator());
}

CssTriple steane_triple() {
  return build_css(hamming7(), BinaryMatrix{"1111111"});
}

CssTriple three_qubit_triple() {
  return build_css(LinearCode::full(3), BinaryMatrix{"111"});
}

std::optional<LinearCode> find_code(std::string_view name) {
  if (name == "repetition3") return repetition3();
  if (name == "even_parity3") return even_parity3();
  if (name == "hamming7") return hamming7();
  if (name == "simplex7") return simplex7();
  return std::nullopt;
}

std::vector<std::string> code_names() {
  return {"repetition3", "even_parity3", "hamming7", "simplex7"};
}

}  // namespace zoo

}  // namespace qcss
