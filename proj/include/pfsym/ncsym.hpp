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

// Symmetric functions in noncommuting variables: the monomial basis indexed
// by set partitions, and the embedding ω into the parking function algebra.

#ifndef PFSYM_NCSYM_HPP
#define PFSYM_NCSYM_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pfsym/algebra.hpp"
#include "pfsym/bases.hpp"
#include "pfsym/linear.hpp"
#include "pfsym/word.hpp"

namespace pfsym {

/// A set partition of [n]. Blocks are sorted internally and ordered by their
/// minima.
class SetPartition {
 public:
  using Block = std::vector<Letter>;

  /// The empty partition of the empty set.
  SetPartition() = default;
  /// Canonicalizes the block order. Throws kInvalidPartition unless the
  /// blocks are nonempty, disjoint and cover [n].
  explicit SetPartition(std::vector<Block> blocks);

  static SetPartition trusted(std::vector<Block> blocks);

  /// n, the size of the ground set.
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return blocks_.empty(); }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  const Block& operator[](std::size_t i) const { return blocks_[i]; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  auto begin() const noexcept { return blocks_.begin(); }
  auto end() const noexcept { return blocks_.end(); }

  /// By ground-set size, then blocks lexicographically.
  friend std::strong_ordering operator<=>(const SetPartition& a, const SetPartition& b);
  friend bool operator==(const SetPartition& a, const SetPartition& b) = default;

 private:
  std::vector<Block> blocks_;
  std::size_t size_ = 0;
};

using PartitionComb = LinComb<SetPartition>;
using PartitionTensorComb = TensorComb<SetPartition>;

/// Π_n in restricted-growth-string order.
std::vector<SetPartition> set_partitions(std::size_t n);

/// Order-isomorphic relabelling of disjoint nonempty sets onto [N]. Throws
/// kOverlappingSets if two sets share an element, kInvalidPartition if a set
/// is empty.
SetPartition standardize_partition(std::vector<SetPartition::Block> sets);

/// Replaces each letter of a duplicate-free word by its rank. Throws
/// kInvalidLetter on repeated letters.
Word standardize_word(const Word& w);

/// M_π M_σ: one term per matching between the blocks of π and of σ + n.
PartitionComb ncsym_product(const SetPartition& pi, const SetPartition& sigma);

/// Δ(M_π) = sum over π₁ ⊔ π₂ = π of M_st(π₁) ⊗ M_st(π₂).
PartitionTensorComb ncsym_coproduct(const SetPartition& pi);

/// ω(π) = w(B_k) · ... · w(B_1), with w(B) the increasing word of B.
ParkingFunction omega(const SetPartition& pi);

/// The partition whose image is a, if a lies in Π̃ = N ∩ S.
std::optional<SetPartition> omega_inverse(const ParkingFunction& a);

/// ω̄(M_π) = M_ω(π), extended linearly.
PfComb omega_bar(const PartitionComb& x);
PfTensorComb omega_bar(const PartitionTensorComb& x);

/// σ covers π when σ merges two blocks B_i, B_j of π (B_i first) with
/// max(B_i) < min(B_j). Throws kLengthMismatch on different ground sets.
bool partition_covers(const SetPartition& pi, const SetPartition& sigma);

/// Membership in N, D, S or C; other families are forwarded to in_family.
bool membership(const ParkingFunction& a, Family family);

/// `1,3|2,4`, `-` for ∅.
std::string to_string(const SetPartition& pi);
/// `[[1,3],[2,4]]`.
std::string to_json(const SetPartition& pi);
/// Parses the text form. Throws kParseError with the offset, or
/// kInvalidPartition.
SetPartition parse_set_partition(std::string_view text);

/// `M[1,3|2,4]`, `1` for ∅.
std::string render_label(const SetPartition& pi);
std::string to_string(const PartitionComb& x);
std::string to_string(const PartitionTensorComb& x);

}  // namespace pfsym

#endif  // PFSYM_NCSYM_HPP
