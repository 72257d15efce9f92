// Copyright 2026 The pfsym Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "oracles.hpp"
#include "pfsym/error.hpp"
#include "pfsym/ncsym.hpp"
#include "pfsym/word.hpp"
#include "support.hpp"

using namespace pfsym;
using testing::pf;
using testing::seq;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::kParseError;
}

}  // namespace

TEST_CASE("words reject zero letters") {
  CHECK(code_of([] { Word w{1, 0, 2}; }) == Errc::kInvalidLetter);
  CHECK(Word{}.empty());
  CHECK(code_of([] { (void)Word{}.min(); }) == Errc::kEmptyWord);
}

TEST_CASE("parking condition") {
  CHECK(is_parking_function(Word{}));
  CHECK(is_parking_function(parse_word("56357622315")));
  CHECK_FALSE(is_parking_function(Word{2, 3, 3}));
  CHECK(code_of([] { ParkingFunction a{2, 3, 3}; }) == Errc::kNotParkingFunction);
}

TEST_CASE("parking condition agrees with the counting oracle on all short words") {
  for (unsigned n = 0; n <= 5; ++n) {
    for (const auto& w : oracle::all_words(n, n + 1)) {
      CHECK(is_parking_function(testing::word(w)) == oracle::is_pf(w));
    }
  }
}

TEST_CASE("|P_n| = (n+1)^(n-1)") {
  for (unsigned n = 1; n <= 5; ++n) {
    std::size_t count = 0;
    for (const auto& w : oracle::all_words(n, n)) count += is_parking_function(testing::word(w));
    CHECK(count == oracle::pf_count(n));
  }
}

TEST_CASE("left-to-right minima") {
  CHECK(lr_minima_positions(parse_word("56357622315")) == std::vector<std::size_t>{1, 3, 7, 10});
  CHECK(lr_minima_positions(Word{1, 1, 1}) == std::vector<std::size_t>{1});
  CHECK(lr_minima_positions(Word{3, 2, 1}) == std::vector<std::size_t>{1, 2, 3});
  CHECK(code_of([] { lr_minima_positions(Word{}); }) == Errc::kEmptyWord);
}

TEST_CASE("LR-decomposition examples") {
  CHECK(to_string(lr_decompose(parse_word("56357622315"))) == "(15,223,3576,56)");
  CHECK(lr_decompose(Word{}).empty());
  CHECK(to_string(lr_decompose(parse_word("445132"))) == "(132,445)");
  CHECK(lr_compose(std::vector<Word>{Word{1, 5}, Word{2, 2, 3}, Word{3, 5, 7, 6}, Word{5, 6}}) ==
        pf("56357622315"));
  CHECK(lr_compose(std::vector<Word>{}) == ParkingFunction{});
  CHECK(lr_compose(std::vector<Word>{Word{1, 2}, Word{2}}) == pf("212"));
}

TEST_CASE("lr_compose reports the first violated condition in the order 2, 3, 1") {
  auto detail_of = [](std::vector<Word> parts) {
    try {
      lr_compose(parts);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::kConditionViolated);
      return e.detail();
    }
    return 0;
  };
  CHECK(detail_of({Word{2, 1}}) == 2);
  CHECK(detail_of({Word{2}, Word{1}}) == 3);
  CHECK(detail_of({Word{1}, Word{3}}) == 1);
  // (2) is reported before (3) even when both fail.
  CHECK(detail_of({Word{3}, Word{2, 1}}) == 2);
}

TEST_CASE("LR-decomposition matches the index formula and round-trips on P_n") {
  for (unsigned n = 0; n <= 6; ++n) {
    for (const auto& a : oracle::all_pfs(n)) {
      const LRDecomposition f = lr_decompose(testing::word(a));
      oracle::Parts parts;
      for (const Word& w : f) parts.push_back(seq(w));
      REQUIRE(parts == oracle::lr_parts(a));
      CHECK(seq(lr_compose(f)) == a);
      CHECK(lr_decompose(lr_compose(f)) == f);
    }
  }
}

TEST_CASE("d values") {
  CHECK(d_value(parse_word("875221")) == 4);
  CHECK(d_value(parse_word("764221")) == 5);
  CHECK(d_value(parse_word("654221")) == 7);
  CHECK(d_value(Word{1}) == 2);
  CHECK(code_of([] { d_value(Word{}); }) == Errc::kEmptyWord);
}

TEST_CASE("parkization examples") {
  CHECK(parkize(parse_word("875221")) == pf("654221"));
  CHECK(parkize(parse_word("445132")) == pf("445132"));
  CHECK(parkize(Word{4, 4, 5}) == pf("112"));
  CHECK(parkize(Word{}) == ParkingFunction{});
}

TEST_CASE("parkization matches the literal recursion on random words") {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 4000; ++trial) {
    const unsigned n = 1 + rng() % 8;
    oracle::Seq w(n);
    for (auto& x : w) x = 1 + rng() % (2 * n);
    const ParkingFunction p = parkize(testing::word(w));
    REQUIRE(seq(p) == oracle::parkize(w));
    CHECK(parkize(p.word()) == p);
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned j = 0; j < n; ++j) {
        CHECK((w[i] < w[j]) == (p[i] < p[j]));
        CHECK((w[i] == w[j]) == (p[i] == p[j]));
      }
    }
  }
}

TEST_CASE("parkization of duplicate-free words is standardization") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const unsigned n = 1 + rng() % 8;
    std::vector<Letter> letters(3 * n);
    for (unsigned i = 0; i < letters.size(); ++i) letters[i] = i + 1;
    std::shuffle(letters.begin(), letters.end(), rng);
    letters.resize(n);
    Word w(letters);
    CHECK(parkize(w).word() == standardize_word(w));
    CHECK(seq(standardize_word(w)) == oracle::standardize(seq(w)));
  }
}

TEST_CASE("shift") {
  CHECK(shift(parse_word("353112"), 3) == parse_word("686445"));
  CHECK(shift(parse_word("11"), 2) == parse_word("33"));
  CHECK(shift(parse_word("11"), 0) == parse_word("11"));
}

TEST_CASE("text forms") {
  CHECK(to_string(pf("445132")) == "4,4,5,1,3,2");
  CHECK(to_string(Word{}) == "-");
  CHECK(parse_word("4,4,5,1,3,2") == parse_word("445132"));
  CHECK(parse_word("10,1") == Word{10, 1});
  CHECK(parse_word("-").empty());
  try {
    parse_word("1,x,2");
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kParseError);
    CHECK(e.detail() == 2);
  }
  CHECK(code_of([] { parse_word("1,0"); }) == Errc::kParseError);
  CHECK(code_of([] { parse_word(""); }) == Errc::kParseError);
  CHECK(code_of([] { parse_parking_function("33"); }) == Errc::kNotParkingFunction);
}

TEST_CASE("word order is shortlex") {
  CHECK(Word{2} < Word{1, 1});
  CHECK(Word{1, 2} < Word{2, 1});
}
