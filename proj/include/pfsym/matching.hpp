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

// Matchings between the parts of two LR-decompositions, and the merged
// decomposition they index.

#ifndef PFSYM_MATCHING_HPP
#define PFSYM_MATCHING_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "pfsym/word.hpp"

namespace pfsym {

/// Injective partial pairing between left parts 1..r and right parts 1..s.
/// Edges are 1-based (i, j) pairs kept sorted by i.
struct Matching {
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::size_t size() const noexcept { return edges.size(); }
  friend bool operator==(const Matching&, const Matching&) = default;
  friend auto operator<=>(const Matching&, const Matching&) = default;
};

/// True if no vertex is used twice and every index lies in range.
bool is_valid_matching(const Matching& m, std::size_t r, std::size_t s);

/// sum_k k! C(r,k) C(s,k)
std::uint64_t matching_count(std::size_t r, std::size_t s);

/// Visits every matching once: by edge count, then lexicographically on the
/// sorted edge list. The visitor sees a reference valid only during the call.
void for_each_matching(std::size_t r, std::size_t s,
                       const std::function<void(const Matching&)>& visit);

std::vector<Matching> enumerate_matchings(std::size_t r, std::size_t s);

/// Parts {u_i (w_j + m) : (i,j) in theta} plus unmatched u_i and w_j + m,
/// re-sorted by minimum. Throws kInvalidMatching if theta does not fit the
/// part counts and kInvalidResult if the merged parts are not a valid
/// decomposition (only possible when m is smaller than needed).
LRDecomposition apply_matching(const LRDecomposition& left,
                               const LRDecomposition& right, Letter m,
                               const Matching& theta);

/// {a Θ b : Θ in R(a,b)} in matching enumeration order, with shift l(a).
std::vector<ParkingFunction> product_expansion(const ParkingFunction& a,
                                               const ParkingFunction& b);

std::string to_string(const Matching& m);

}  // namespace pfsym

#endif  // PFSYM_MATCHING_HPP
