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

// Words on positive integers, parking functions and the left-to-right minima
// (LR) decomposition.
//
// Positions handed across the API are 1-based. Indexing with operator[] is
// the usual 0-based container access.

#ifndef PFSYM_WORD_HPP
#define PFSYM_WORD_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pfsym {

using Letter = std::uint32_t;

/// A finite sequence of positive integers.
///
/// Words are ordered shortlex (length first, then lexicographically); this is
/// the canonical label order used for map keys and rendering.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);
  Word(std::initializer_list<Letter> letters);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const noexcept { return letters_[i]; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  /// Smallest letter. Throws kEmptyWord on ε.
  Letter min() const;
  Letter max() const;

  Word& append(const Word& other);
  friend Word operator+(Word lhs, const Word& rhs) { return lhs.append(rhs); }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::vector<Letter> letters_;
};

/// A word whose nondecreasing rearrangement b satisfies b_i <= i.
class ParkingFunction {
 public:
  ParkingFunction() = default;
  /// Throws kNotParkingFunction if `word` fails the parking condition.
  explicit ParkingFunction(Word word);
  ParkingFunction(std::initializer_list<Letter> letters)
      : ParkingFunction(Word(letters)) {}

  /// Skips validation; the caller guarantees the parking condition.
  static ParkingFunction trusted(Word word) {
    ParkingFunction pf;
    pf.word_ = std::move(word);
    return pf;
  }

  const Word& word() const noexcept { return word_; }
  operator const Word&() const noexcept { return word_; }
  std::size_t size() const noexcept { return word_.size(); }
  bool empty() const noexcept { return word_.empty(); }
  Letter operator[](std::size_t i) const noexcept { return word_[i]; }

  friend bool operator==(const ParkingFunction&, const ParkingFunction&) = default;
  friend auto operator<=>(const ParkingFunction& a, const ParkingFunction& b) {
    return a.word_ <=> b.word_;
  }

 private:
  Word word_;
};

/// Parts (w_1, ..., w_k) of an LR-decomposition, stored by increasing minima.
///
/// Construction enforces that every part is dominated (first letter is its
/// minimum) and that minima strictly increase. Whether the parts reassemble
/// into a parking function is checked by lr_compose.
class LRDecomposition {
 public:
  LRDecomposition() = default;
  /// Throws kConditionViolated with detail 2 (a part is not dominated, or is
  /// empty) or detail 3 (minima not strictly increasing).
  explicit LRDecomposition(std::vector<Word> parts);

  static LRDecomposition trusted(std::vector<Word> parts) {
    LRDecomposition f;
    f.parts_ = std::move(parts);
    return f;
  }

  std::size_t size() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  const Word& operator[](std::size_t i) const noexcept { return parts_[i]; }
  const std::vector<Word>& parts() const noexcept { return parts_; }
  auto begin() const noexcept { return parts_.begin(); }
  auto end() const noexcept { return parts_.end(); }

  /// Total number of letters over all parts.
  std::size_t length() const noexcept;

  /// Concatenation w_k ... w_2 w_1, the word this decomposition belongs to.
  Word word() const;

  friend bool operator==(const LRDecomposition&, const LRDecomposition&) = default;

 private:
  std::vector<Word> parts_;
};

bool is_parking_function(const Word& w);

/// 1-based positions of left-to-right minima. Throws kEmptyWord on ε.
std::vector<std::size_t> lr_minima_positions(const Word& w);

/// LR-decomposition of an arbitrary word (the parts are dominated and ordered
/// by increasing minima for every word, parking or not). ε gives ().
LRDecomposition lr_decompose(const Word& w);

/// Inverse of lr_decompose on parking functions. Throws kConditionViolated
/// with the first failing condition checked in the order 2, 3, 1.
ParkingFunction lr_compose(const LRDecomposition& f);
ParkingFunction lr_compose(const std::vector<Word>& parts);

/// min{i >= 1 : #{j : a_j <= i} < i}; equals n+1 exactly on parking functions.
Letter d_value(const Word& w);

/// Parkization: the fixed point of decrementing every letter above d(w).
ParkingFunction parkize(const Word& w);

Word shift(const Word& w, Letter m);

/// Comma-separated letters, `-` for ε.
std::string to_string(const Word& w);
std::string to_string(const ParkingFunction& a);
/// Digits without separators when every letter is at most 9, else commas.
std::string to_compact_string(const Word& w);
/// Parts rendered as `(15,223,3576,56)` in compact form.
std::string to_string(const LRDecomposition& f);

/// Accepts `4,4,5`, `445` (single-digit letters) or `-` for ε. Throws
/// kParseError with the offending character offset.
Word parse_word(std::string_view text);
ParkingFunction parse_parking_function(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Word& w);
std::ostream& operator<<(std::ostream& os, const ParkingFunction& a);
std::ostream& operator<<(std::ostream& os, const LRDecomposition& f);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
  std::size_t operator()(const ParkingFunction& a) const noexcept {
    return (*this)(a.word());
  }
};

}  // namespace pfsym

#endif  // PFSYM_WORD_HPP
