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

#include "pfsym/ncsym.hpp"

#include <algorithm>
#include <charconv>

#include <json.hpp>

#include "pfsym/error.hpp"
#include "pfsym/matching.hpp"

namespace pfsym {

namespace {

void canonicalize(std::vector<SetPartition::Block>& blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
}

}  // namespace

SetPartition::SetPartition(std::vector<Block> blocks) {
  std::size_t n = 0;
  for (const Block& b : blocks) {
    if (b.empty()) throw Error(Errc::kInvalidPartition, "empty block");
    n += b.size();
  }
  std::vector<bool> seen(n + 1, false);
  for (const Block& b : blocks) {
    for (Letter x : b) {
      if (x < 1 || x > n || seen[x]) {
        throw Error(Errc::kInvalidPartition,
                    "blocks must be disjoint and cover [" + std::to_string(n) + "]");
      }
      seen[x] = true;
    }
  }
  canonicalize(blocks);
  blocks_ = std::move(blocks);
  size_ = n;
}

SetPartition SetPartition::trusted(std::vector<Block> blocks) {
  SetPartition p;
  for (const Block& b : blocks) p.size_ += b.size();
  canonicalize(blocks);
  p.blocks_ = std::move(blocks);
  return p;
}

std::strong_ordering operator<=>(const SetPartition& a, const SetPartition& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  return a.blocks_ <=> b.blocks_;
}

namespace {

// Restricted growth strings: block index of element i+1 is at most one more
// than the largest index used so far.
void grow(std::size_t n, std::vector<SetPartition::Block>& blocks,
          std::vector<SetPartition>& out) {
  const Letter next = static_cast<Letter>(1 + [&] {
    std::size_t used = 0;
    for (const auto& b : blocks) used += b.size();
    return used;
  }());
  if (next > n) {
    out.push_back(SetPartition::trusted(blocks));
    return;
  }
  for (std::size_t i = 0; i <= blocks.size(); ++i) {
    if (i == blocks.size()) {
      blocks.push_back({next});
      grow(n, blocks, out);
      blocks.pop_back();
    } else {
      blocks[i].push_back(next);
      grow(n, blocks, out);
      blocks[i].pop_back();
    }
  }
}

}  // namespace

std::vector<SetPartition> set_partitions(std::size_t n) {
  std::vector<SetPartition> out;
  std::vector<SetPartition::Block> blocks;
  grow(n, blocks, out);
  return out;
}

SetPartition standardize_partition(std::vector<SetPartition::Block> sets) {
  std::vector<Letter> all;
  for (const auto& s : sets) {
    if (s.empty()) throw Error(Errc::kInvalidPartition, "empty set");
    all.insert(all.end(), s.begin(), s.end());
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw Error(Errc::kOverlappingSets, "sets are not disjoint");
  }
  for (auto& s : sets) {
    for (Letter& x : s) {
      x = static_cast<Letter>(std::lower_bound(all.begin(), all.end(), x) - all.begin() + 1);
    }
  }
  return SetPartition::trusted(std::move(sets));
}

Word standardize_word(const Word& w) {
  std::vector<Letter> sorted(w.begin(), w.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(Errc::kInvalidLetter, "word " + to_string(w) + " repeats a letter");
  }
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter x : w) {
    out.push_back(
        static_cast<Letter>(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin() + 1));
  }
  return Word(std::move(out));
}

PartitionComb ncsym_product(const SetPartition& pi, const SetPartition& sigma) {
  const Letter m = static_cast<Letter>(pi.size());
  std::vector<SetPartition::Block> right;
  for (const auto& b : sigma) {
    SetPartition::Block shifted(b);
    for (Letter& x : shifted) x += m;
    right.push_back(std::move(shifted));
  }
  PartitionComb out;
  for_each_matching(pi.block_count(), right.size(), [&](const Matching& theta) {
    std::vector<SetPartition::Block> blocks(pi.blocks());
    std::vector<bool> used(right.size() + 1, false);
    for (auto [i, j] : theta.edges) {
      auto& b = blocks[i - 1];
      b.insert(b.end(), right[j - 1].begin(), right[j - 1].end());
      used[j] = true;
    }
    for (std::size_t j = 1; j <= right.size(); ++j) {
      if (!used[j]) blocks.push_back(right[j - 1]);
    }
    out.add(SetPartition::trusted(std::move(blocks)), 1);
  });
  return out;
}

PartitionTensorComb ncsym_coproduct(const SetPartition& pi) {
  const std::size_t k = pi.block_count();
  PartitionTensorComb out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::vector<SetPartition::Block> left, right;
    for (std::size_t i = 0; i < k; ++i) ((mask >> i) & 1 ? left : right).push_back(pi[i]);
    out.add({standardize_partition(std::move(left)), standardize_partition(std::move(right))}, 1);
  }
  return out;
}

ParkingFunction omega(const SetPartition& pi) {
  std::vector<Letter> letters;
  letters.reserve(pi.size());
  for (auto it = pi.blocks().rbegin(); it != pi.blocks().rend(); ++it) {
    letters.insert(letters.end(), it->begin(), it->end());
  }
  return ParkingFunction::trusted(Word(std::move(letters)));
}

std::optional<SetPartition> omega_inverse(const ParkingFunction& a) {
  if (!in_family(a, Family::kPiTilde)) return std::nullopt;
  std::vector<SetPartition::Block> blocks;
  for (const Word& w : lr_decompose(a)) blocks.emplace_back(w.begin(), w.end());
  return SetPartition::trusted(std::move(blocks));
}

PfComb omega_bar(const PartitionComb& x) {
  PfComb out;
  for (const auto& [pi, c] : x) out.add(omega(pi), c);
  return out;
}

PfTensorComb omega_bar(const PartitionTensorComb& x) {
  PfTensorComb out;
  for (const auto& [lr, c] : x) out.add({omega(lr.first), omega(lr.second)}, c);
  return out;
}

bool partition_covers(const SetPartition& pi, const SetPartition& sigma) {
  if (pi.size() != sigma.size()) {
    throw Error(Errc::kLengthMismatch, "partitions of different sets: " + to_string(pi) +
                                           " vs " + to_string(sigma));
  }
  if (sigma.block_count() + 1 != pi.block_count()) return false;
  for (std::size_t i = 0; i < pi.block_count(); ++i) {
    for (std::size_t j = i + 1; j < pi.block_count(); ++j) {
      if (pi[i].back() >= pi[j].front()) continue;
      std::vector<SetPartition::Block> blocks;
      for (std::size_t t = 0; t < pi.block_count(); ++t) {
        if (t == i) {
          SetPartition::Block merged(pi[i]);
          merged.insert(merged.end(), pi[j].begin(), pi[j].end());
          blocks.push_back(std::move(merged));
        } else if (t != j) {
          blocks.push_back(pi[t]);
        }
      }
      if (SetPartition::trusted(std::move(blocks)) == sigma) return true;
    }
  }
  return false;
}

bool membership(const ParkingFunction& a, Family family) { return in_family(a, family); }

// ---------------------------------------------------------------------------
// Text forms

std::string to_string(const SetPartition& pi) {
  if (pi.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < pi.block_count(); ++i) {
    if (i) out += "|";
    for (std::size_t k = 0; k < pi[i].size(); ++k) {
      if (k) out += ",";
      out += std::to_string(pi[i][k]);
    }
  }
  return out;
}

std::string to_json(const SetPartition& pi) {
  return nlohmann::json(pi.blocks()).dump();
}

SetPartition parse_set_partition(std::string_view text) {
  auto fail = [&](std::size_t pos, const std::string& why) -> Error {
    return Error(Errc::kParseError,
                 "cannot parse set partition '" + std::string(text) + "' at offset " +
                     std::to_string(pos) + ": " + why,
                 static_cast<int>(pos));
  };
  if (text == "-") return {};
  if (text.empty()) throw fail(0, "empty input (use '-' for the empty partition)");
  std::vector<SetPartition::Block> blocks(1);
  std::size_t pos = 0;
  for (;;) {
    std::size_t end = text.find_first_of(",|", pos);
    if (end == std::string_view::npos) end = text.size();
    const char* first = text.data() + pos;
    const char* last = text.data() + end;
    Letter value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (first == last || ec != std::errc() || ptr != last) {
      throw fail(ec == std::errc() && first != last ? static_cast<std::size_t>(ptr - text.data())
                                                    : pos,
                 "expected a positive integer");
    }
    if (value == 0) throw fail(pos, "elements must be positive");
    blocks.back().push_back(value);
    if (end == text.size()) break;
    if (text[end] == '|') blocks.emplace_back();
    pos = end + 1;
  }
  return SetPartition(std::move(blocks));
}

std::string render_label(const SetPartition& pi) {
  if (pi.empty()) return "1";
  return "M[" + to_string(pi) + "]";
}

std::string to_string(const PartitionComb& x) {
  if (x.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [pi, c] : x) {
    append_term(out, c, render_label(pi), first);
    first = false;
  }
  return out;
}

std::string to_string(const PartitionTensorComb& x) {
  if (x.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [lr, c] : x) {
    append_term(out, c, render_label(lr.first) + "⊗" + render_label(lr.second), first);
    first = false;
  }
  return out;
}

}  // namespace pfsym
