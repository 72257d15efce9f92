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

#include "pfsym/word.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "pfsym/error.hpp"

namespace pfsym {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::kEmptyWord: return "EmptyWord";
    case Errc::kInvalidLetter: return "InvalidLetter";
    case Errc::kNotParkingFunction: return "NotParkingFunction";
    case Errc::kConditionViolated: return "ConditionViolated";
    case Errc::kInvalidMatching: return "InvalidMatching";
    case Errc::kInvalidResult: return "InvalidResult";
    case Errc::kBasisMismatch: return "BasisMismatch";
    case Errc::kLengthMismatch: return "LengthMismatch";
    case Errc::kDegreeTooLarge: return "DegreeTooLarge";
    case Errc::kNotComparable: return "NotComparable";
    case Errc::kOverlappingSets: return "OverlappingSets";
    case Errc::kInvalidPartition: return "InvalidPartition";
    case Errc::kParseError: return "ParseError";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Word

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (Letter x : letters_) {
    if (x == 0) throw Error(Errc::kInvalidLetter, "word letters must be positive");
  }
}

Word::Word(std::initializer_list<Letter> letters)
    : Word(std::vector<Letter>(letters)) {}

Letter Word::min() const {
  if (empty()) throw Error(Errc::kEmptyWord, "min of the empty word");
  return *std::min_element(letters_.begin(), letters_.end());
}

Letter Word::max() const {
  if (empty()) throw Error(Errc::kEmptyWord, "max of the empty word");
  return *std::max_element(letters_.begin(), letters_.end());
}

Word& Word::append(const Word& other) {
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  return *this;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(),
                                                b.end());
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = w.size();
  for (Letter x : w) h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

// ---------------------------------------------------------------------------
// ParkingFunction

bool is_parking_function(const Word& w) {
  std::vector<Letter> sorted(w.begin(), w.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] > i + 1) return false;
  }
  return true;
}

ParkingFunction::ParkingFunction(Word word) : word_(std::move(word)) {
  if (!is_parking_function(word_)) {
    throw Error(Errc::kNotParkingFunction,
                "not a parking function: " + to_string(word_));
  }
}

// ---------------------------------------------------------------------------
// LR-decomposition

LRDecomposition::LRDecomposition(std::vector<Word> parts) : parts_(std::move(parts)) {
  for (const Word& w : parts_) {
    if (w.empty() || w[0] != w.min()) {
      throw Error(Errc::kConditionViolated,
                  "part " + to_string(w) + " is not dominated", 2);
    }
  }
  for (std::size_t i = 1; i < parts_.size(); ++i) {
    if (!(parts_[i - 1][0] < parts_[i][0])) {
      throw Error(Errc::kConditionViolated,
                  "part minima are not strictly increasing", 3);
    }
  }
}

std::size_t LRDecomposition::length() const noexcept {
  std::size_t n = 0;
  for (const Word& w : parts_) n += w.size();
  return n;
}

Word LRDecomposition::word() const {
  std::vector<Letter> out;
  out.reserve(length());
  for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
    out.insert(out.end(), it->begin(), it->end());
  }
  return Word(std::move(out));
}

std::vector<std::size_t> lr_minima_positions(const Word& w) {
  if (w.empty()) throw Error(Errc::kEmptyWord, "lr(ε) is undefined");
  std::vector<std::size_t> positions{1};
  Letter running = w[0];
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] < running) {
      positions.push_back(i + 1);
      running = w[i];
    }
  }
  return positions;
}

LRDecomposition lr_decompose(const Word& w) {
  if (w.empty()) return {};
  // Segments between consecutive LR-minima, read right to left.
  std::vector<std::size_t> starts = lr_minima_positions(w);
  std::vector<Word> parts;
  parts.reserve(starts.size());
  std::size_t stop = w.size();
  for (auto it = starts.rbegin(); it != starts.rend(); ++it) {
    std::size_t begin = *it - 1;
    parts.emplace_back(std::vector<Letter>(w.begin() + begin, w.begin() + stop));
    stop = begin;
  }
  return LRDecomposition::trusted(std::move(parts));
}

ParkingFunction lr_compose(const LRDecomposition& f) {
  Word w = f.word();
  if (!is_parking_function(w)) {
    throw Error(Errc::kConditionViolated,
                "parts do not concatenate to a parking function: " + to_string(w), 1);
  }
  return ParkingFunction::trusted(std::move(w));
}

ParkingFunction lr_compose(const std::vector<Word>& parts) {
  return lr_compose(LRDecomposition(parts));
}

// ---------------------------------------------------------------------------
// Parkization

Letter d_value(const Word& w) {
  if (w.empty()) throw Error(Errc::kEmptyWord, "d(ε) is undefined");
  const std::size_t n = w.size();
  // counts[i] = #{j : a_j = i} for i <= n+1; larger letters never matter.
  std::vector<std::size_t> counts(n + 2, 0);
  for (Letter x : w) {
    if (x <= n + 1) ++counts[x];
  }
  std::size_t at_most = 0;
  for (std::size_t i = 1; i <= n + 1; ++i) {
    at_most += counts[i];
    if (at_most < i) return static_cast<Letter>(i);
  }
  return static_cast<Letter>(n + 1);  // unreachable: at_most <= n < n+1
}

ParkingFunction parkize(const Word& w) {
  if (w.empty()) return {};
  std::vector<Letter> a(w.begin(), w.end());
  const Letter done = static_cast<Letter>(a.size() + 1);
  for (;;) {
    Letter d = d_value(Word(a));
    if (d == done) break;
    // While no letter equals d+1, each single decrement leaves d unchanged,
    // so the run of such steps collapses into one jump.
    Letter next_above = 0;
    for (Letter x : a) {
      if (x > d && (next_above == 0 || x < next_above)) next_above = x;
    }
    Letter step = next_above - d;
    for (Letter& x : a) {
      if (x > d) x -= step;
    }
  }
  return ParkingFunction::trusted(Word(std::move(a)));
}

Word shift(const Word& w, Letter m) {
  std::vector<Letter> out(w.begin(), w.end());
  for (Letter& x : out) x += m;
  return Word(std::move(out));
}

// ---------------------------------------------------------------------------
// Text forms

std::string to_string(const Word& w) {
  if (w.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

std::string to_string(const ParkingFunction& a) { return to_string(a.word()); }

std::string to_compact_string(const Word& w) {
  if (w.empty()) return "-";
  if (std::all_of(w.begin(), w.end(), [](Letter x) { return x <= 9; })) {
    std::string out;
    for (Letter x : w) out += static_cast<char>('0' + x);
    return out;
  }
  return to_string(w);
}

std::string to_string(const LRDecomposition& f) {
  std::string out = "(";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ',';
    out += to_compact_string(f[i]);
  }
  return out + ")";
}

Word parse_word(std::string_view text) {
  auto fail = [&](std::size_t pos, const std::string& why) -> Error {
    return Error(Errc::kParseError,
                 "cannot parse word '" + std::string(text) + "' at offset " +
                     std::to_string(pos) + ": " + why,
                 static_cast<int>(pos));
  };
  if (text == "-") return {};
  if (text.empty()) throw fail(0, "empty input (use '-' for the empty word)");

  std::vector<Letter> letters;
  if (text.find(',') == std::string_view::npos) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      char c = text[i];
      if (c < '1' || c > '9') throw fail(i, "expected a digit 1-9");
      letters.push_back(static_cast<Letter>(c - '0'));
    }
    return Word(std::move(letters));
  }
  std::size_t pos = 0;
  for (;;) {
    std::size_t comma = text.find(',', pos);
    std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    Letter value = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + end;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (first == last || ec != std::errc() || ptr != last) {
      throw fail(ec == std::errc() && first != last
                     ? static_cast<std::size_t>(ptr - text.data())
                     : pos,
                 "expected a positive integer");
    }
    if (value == 0) throw fail(pos, "letters must be positive");
    letters.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Word(std::move(letters));
}

ParkingFunction parse_parking_function(std::string_view text) {
  return ParkingFunction(parse_word(text));
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << to_string(w); }
std::ostream& operator<<(std::ostream& os, const ParkingFunction& a) {
  return os << to_string(a.word());
}
std::ostream& operator<<(std::ostream& os, const LRDecomposition& f) {
  return os << to_string(f);
}

}  // namespace pfsym
