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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "qcss/codes.hpp"

using namespace qcss;

TEST_CASE("repetition code basics") {
  const LinearCode c = zoo::repetition3();
  CHECK(c.n() == 3);
  CHECK(c.k() == 1);
  CHECK(c.min_distance() == 3);
  const auto words = c.codewords();
  REQUIRE(words.size() == 2);
  CHECK(words[0].str() == "000");
  CHECK(words[1].str() == "111");
  CHECK(c.dual().same_codewords(zoo::even_parity3()));
}

TEST_CASE("hamming code and simplex code are dual") {
  const LinearCode h = zoo::hamming7();
  const LinearCode s = zoo::simplex7();
  CHECK(h.n() == 7);
  CHECK(h.k() == 4);
  CHECK(h.min_distance() == 3);
  CHECK(s.k() == 3);
  CHECK(s.min_distance() == 4);
  CHECK(h.dual().same_codewords(s));
  CHECK(s.dual().same_codewords(h));
  // Self-orthogonal: every simplex word passes every Hamming check.
  for (const BitWord& w : s.codewords()) CHECK(h.contains(w));
}

TEST_CASE("zoo matrices are stored verbatim") {
  CHECK(zoo::simplex_generator() ==
        BinaryMatrix{"0001111", "0110011", "1010101"});
  CHECK(zoo::hamming_check() == BinaryMatrix{"0111100", "1011010", "1101001"});
  CHECK(zoo::simplex_check() ==
        BinaryMatrix{"1101001", "0101010", "1001100", "1110000"});
  CHECK(zoo::repetition_check() == BinaryMatrix{"110", "101"});
}

TEST_CASE("simplex codewords are the eight listed words") {
  const std::set<std::string> expect = {"0000000", "1010101", "0110011",
                                        "1100110", "0001111", "1011010",
                                        "0111100", "1101001"};
  std::set<std::string> got;
  for (const BitWord& w : zoo::simplex7().codewords()) got.insert(w.str());
  CHECK(got == expect);
}

TEST_CASE("dual of dual returns the original code") {
  for (const auto& name : zoo::code_names()) {
    const auto c = zoo::find_code(name);
    REQUIRE(c.has_value());
    CHECK(c->dual().dual().same_codewords(*c));
    CHECK(c->k() + c->dual().k() == c->n());
  }
}

TEST_CASE("syndrome of a codeword is zero") {
  const LinearCode h = zoo::hamming7();
  for (const BitWord& w : h.codewords()) {
    CHECK(h.syndrome(w).value() == 0);
  }
  CHECK(h.syndrome(BitWord::parse("1000000")).value() != 0);
}

TEST_CASE("repetition syndrome table decodes the known leader") {
  const SyndromeTable t = build_syndrome_table(zoo::repetition3());
  CHECK(t.max_correctable == 1);
  CHECK(t.leader(BitWord::parse("11")).str() == "100");
  CHECK(t.leader(BitWord::parse("10")).str() == "010");
  CHECK(t.leader(BitWord::parse("01")).str() == "001");
  CHECK(t.leader(BitWord::parse("00")).str() == "000");
}

TEST_CASE("hamming syndrome table corrects every single flip") {
  const LinearCode h = zoo::hamming7();
  const SyndromeTable t = build_syndrome_table(h);
  for (const BitWord& c : h.codewords()) {
    for (int i = 0; i < 7; ++i) {
      const BitWord corrupted = c ^ BitWord::unit(7, i);
      const BitWord fixed = corrupted ^ t.leader(h.syndrome(corrupted));
      CHECK(fixed == c);
    }
  }
}

TEST_CASE("coset decomposition partitions the code") {
  const LinearCode h = zoo::hamming7();
  const std::vector<int> positions = {0, 1};
  const auto cosets = coset_decompose(h, positions);
  REQUIRE(cosets.size() == 4);
  std::set<BitWord> all;
  for (std::size_t j = 0; j < cosets.size(); ++j) {
    const auto words = cosets[j].words();
    CHECK(words.size() == 4);
    for (const BitWord& w : words) {
      CHECK(h.contains(w));
      const std::uint32_t label =
          (static_cast<std::uint32_t>(w.bit(0)) << 1) |
          static_cast<std::uint32_t>(w.bit(1));
      CHECK(label == j);
      all.insert(w);
    }
  }
  CHECK(all.size() == 16);
}

TEST_CASE("coset decomposition rejects degenerate positions") {
  // Bit 0 of the repetition code equals bit 1 on every codeword, so
  // splitting on both cannot realise all four labels.
  CHECK_THROWS(coset_decompose(zoo::repetition3(), {0, 1}));
}

TEST_CASE("kth order subcode drops dimension by the row count") {
  const LinearCode h = zoo::hamming7();
  const LinearCode sub = h.kth_order_subcode(BinaryMatrix{"1111111"});
  CHECK(sub.k() == 3);
  for (const BitWord& w : sub.codewords()) {
    CHECK(h.contains(w));
    CHECK(w.weight() % 2 == 0);
  }
  CHECK_THROWS(sub.kth_order_subcode(BinaryMatrix{"1111111"}));
}

TEST_CASE("seven qubit triple has the advertised parameters") {
  const CssTriple t = zoo::steane_triple();
  CHECK(t.n() == 7);
  CHECK(t.logical_count == 1);
  CHECK(t.c_plus.k() == 4);
  CHECK(t.c.k() == 3);
  CHECK(t.c_perp.k() == 4);
  CHECK(t.d1() == 3);
  CHECK(t.d2() == 3);
  CHECK(t.c.k() + 1 == t.c_plus.k());
  CHECK(t.c.dual().same_codewords(t.c_perp));
  // k1 + k2 = n + K.
  CHECK(t.c_plus.k() + t.c_perp.k() == t.n() + t.logical_count);
}

TEST_CASE("three qubit triple") {
  const CssTriple t = zoo::three_qubit_triple();
  CHECK(t.n() == 3);
  CHECK(t.c_plus.k() == 3);
  CHECK(t.c.same_codewords(zoo::even_parity3()));
  CHECK(t.c_perp.same_codewords(zoo::repetition3()));
  CHECK(t.d2() == 3);
  CHECK(t.c_plus.k() + t.c_perp.k() == t.n() + t.logical_count);
}

TEST_CASE("build_css rejects dependent extra rows") {
  CHECK_THROWS(build_css(zoo::hamming7(), BinaryMatrix{"0001111"}));
}

TEST_CASE("randomized triple search finds the n=7 K=1 d=3 case") {
  const auto t = search_weakly_self_dual(7, 1, 3, 42);
  REQUIRE(t.has_value());
  CHECK(t->n() == 7);
  CHECK(t->logical_count == 1);
  CHECK(t->d1() >= 3);
  CHECK(t->d2() >= 3);
  CHECK(t->c_plus.k() + t->c_perp.k() == 8);
  // Deterministic for a fixed seed.
  const auto again = search_weakly_self_dual(7, 1, 3, 42);
  REQUIRE(again.has_value());
  CHECK(t->c_plus.generator() == again->c_plus.generator());
}

TEST_CASE("randomized triple search reports not found when impossible") {
  CHECK(!search_weakly_self_dual(3, 1, 3, 1, 2000).has_value());
}

TEST_CASE("distance target of one is trivially satisfiable") {
  const auto t = search_weakly_self_dual(5, 2, 1, 9);
  REQUIRE(t.has_value());
  CHECK(t->logical_count == 2);
  CHECK(t->d1() >= 1);
  CHECK(t->d2() >= 1);
}

TEST_CASE("full code has distance one") {
  const LinearCode f = LinearCode::full(4);
  CHECK(f.k() == 4);
  CHECK(f.min_distance() == 1);
  CHECK(f.dual().k() == 0);
  CHECK(f.dual().min_distance() == 4);
}
