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

#include "pfsym/matching.hpp"

#include <algorithm>

#include "pfsym/error.hpp"

namespace pfsym {

namespace {

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::uint64_t out = 1;
  for (std::size_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

// Depth-first extension with increasing left index; each depth picks the
// next left vertex then the right vertex, both ascending, which yields the
// lexicographic order on edge lists of a fixed size.
void extend(std::size_t r, std::size_t s, std::size_t target, std::size_t next_i,
            std::vector<bool>& used_j, Matching& current,
            const std::function<void(const Matching&)>& visit) {
  if (current.size() == target) {
    visit(current);
    return;
  }
  const std::size_t remaining = target - current.size();
  for (std::size_t i = next_i; i + remaining <= r + 1; ++i) {
    for (std::size_t j = 1; j <= s; ++j) {
      if (used_j[j]) continue;
      used_j[j] = true;
      current.edges.emplace_back(i, j);
      extend(r, s, target, i + 1, used_j, current, visit);
      current.edges.pop_back();
      used_j[j] = false;
    }
  }
}

}  // namespace

bool is_valid_matching(const Matching& m, std::size_t r, std::size_t s) {
  std::vector<bool> seen_i(r + 1, false), seen_j(s + 1, false);
  for (auto [i, j] : m.edges) {
    if (i < 1 || i > r || j < 1 || j > s) return false;
    if (seen_i[i] || seen_j[j]) return false;
    seen_i[i] = seen_j[j] = true;
  }
  return true;
}

std::uint64_t matching_count(std::size_t r, std::size_t s) {
  std::uint64_t total = 0;
  std::uint64_t factorial = 1;
  for (std::size_t k = 0; k <= std::min(r, s); ++k) {
    if (k) factorial *= k;
    total += factorial * binomial(r, k) * binomial(s, k);
  }
  return total;
}

void for_each_matching(std::size_t r, std::size_t s,
                       const std::function<void(const Matching&)>& visit) {
  std::vector<bool> used_j(s + 1, false);
  Matching current;
  for (std::size_t k = 0; k <= std::min(r, s); ++k) {
    extend(r, s, k, 1, used_j, current, visit);
  }
}

std::vector<Matching> enumerate_matchings(std::size_t r, std::size_t s) {
  std::vector<Matching> out;
  out.reserve(matching_count(r, s));
  for_each_matching(r, s, [&](const Matching& m) { out.push_back(m); });
  return out;
}

namespace {

std::vector<Word> merged_parts(const LRDecomposition& left,
                               const LRDecomposition& right, Letter m,
                               const Matching& theta) {
  std::vector<Word> parts;
  parts.reserve(left.size() + right.size());
  std::vector<bool> right_used(right.size() + 1, false);
  std::vector<std::size_t> partner(left.size() + 1, 0);
  for (auto [i, j] : theta.edges) {
    partner[i] = j;
    right_used[j] = true;
  }
  for (std::size_t i = 1; i <= left.size(); ++i) {
    Word part = left[i - 1];
    if (partner[i]) part.append(shift(right[partner[i] - 1], m));
    parts.push_back(std::move(part));
  }
  for (std::size_t j = 1; j <= right.size(); ++j) {
    if (!right_used[j]) parts.push_back(shift(right[j - 1], m));
  }
  // Every part is dominated, so its first letter is its minimum.
  std::sort(parts.begin(), parts.end(),
            [](const Word& x, const Word& y) { return x[0] < y[0]; });
  return parts;
}

}  // namespace

LRDecomposition apply_matching(const LRDecomposition& left,
                               const LRDecomposition& right, Letter m,
                               const Matching& theta) {
  if (!is_valid_matching(theta, left.size(), right.size())) {
    throw Error(Errc::kInvalidMatching, "matching " + to_string(theta) +
                                            " does not fit part counts " +
                                            std::to_string(left.size()) + "," +
                                            std::to_string(right.size()));
  }
  // A glued part is dominated only if its tail stays at or above the head's
  // minimum.
  for (auto [i, j] : theta.edges) {
    const Word& u = left[i - 1];
    Word tail = shift(right[j - 1], m);
    if (tail.min() < u[0]) {
      throw Error(Errc::kInvalidResult, "merged part " + to_string(u + tail) +
                                            " is not dominated for shift " +
                                            std::to_string(m));
    }
  }
  std::vector<Word> parts = merged_parts(left, right, m, theta);
  try {
    return LRDecomposition(std::move(parts));
  } catch (const Error& e) {
    throw Error(Errc::kInvalidResult,
                std::string("merged parts are not a decomposition: ") + e.what());
  }
}

std::vector<ParkingFunction> product_expansion(const ParkingFunction& a,
                                               const ParkingFunction& b) {
  if (a.empty()) return {b};
  if (b.empty()) return {a};
  const LRDecomposition fa = lr_decompose(a);
  const LRDecomposition fb = lr_decompose(b);
  const Letter m = static_cast<Letter>(a.size());
  std::vector<ParkingFunction> out;
  out.reserve(matching_count(fa.size(), fb.size()));
  for_each_matching(fa.size(), fb.size(), [&](const Matching& theta) {
    // With shift l(a) every tail letter exceeds every letter of a, so the
    // merged parts are always a valid decomposition of a parking function.
    auto parts = merged_parts(fa, fb, m, theta);
    out.push_back(ParkingFunction::trusted(LRDecomposition::trusted(std::move(parts)).word()));
  });
  return out;
}

std::string to_string(const Matching& m) {
  std::string out = "{";
  for (std::size_t k = 0; k < m.edges.size(); ++k) {
    if (k) out += ",";
    out += "(" + std::to_string(m.edges[k].first) + "," +
           std::to_string(m.edges[k].second) + ")";
  }
  return out + "}";
}

}  // namespace pfsym
