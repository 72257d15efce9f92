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

// Slow reference implementations straight from the definitions. They work on
// plain vectors and share no code with the library beyond the Letter type.

#ifndef PFSYM_TESTS_ORACLES_HPP
#define PFSYM_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Seq = std::vector<unsigned>;
using Parts = std::vector<Seq>;

inline bool is_pf(const Seq& a) {
  const unsigned n = static_cast<unsigned>(a.size());
  for (unsigned i = 1; i <= n; ++i) {
    unsigned count = 0;
    for (unsigned x : a) count += x <= i;
    if (count < i) return false;
  }
  for (unsigned x : a) {
    if (x == 0) return false;
  }
  return true;
}

/// All words of length n over [k], lexicographic.
inline std::vector<Seq> all_words(unsigned n, unsigned k) {
  std::vector<Seq> out;
  Seq w(n, 1);
  for (;;) {
    out.push_back(w);
    int i = static_cast<int>(n) - 1;
    while (i >= 0 && w[i] == k) w[i--] = 1;
    if (i < 0) break;
    ++w[i];
  }
  if (n == 0) out.assign(1, Seq{});
  return out;
}

inline std::vector<Seq> all_pfs(unsigned n) {
  std::vector<Seq> out;
  for (auto& w : all_words(n, std::max(n, 1u))) {
    if (is_pf(w)) out.push_back(w);
  }
  return out;
}

inline std::uint64_t pf_count(unsigned n) {
  std::uint64_t p = 1;
  for (unsigned i = 1; i < n; ++i) p *= n + 1;
  return p;
}

inline std::uint64_t catalan(unsigned n) {
  std::uint64_t c = 1;
  for (unsigned i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

inline std::uint64_t bell(unsigned n) {
  // Bell triangle.
  std::vector<std::uint64_t> row{1};
  for (unsigned i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto x : row) next.push_back(next.back() + x);
    row = next;
  }
  return row.front();
}

/// Strict left-to-right minima, 1-based.
inline std::vector<unsigned> lr_positions(const Seq& a) {
  std::vector<unsigned> out;
  for (unsigned i = 0; i < a.size(); ++i) {
    bool minimum = true;
    for (unsigned j = 0; j < i; ++j) minimum = minimum && a[i] < a[j];
    if (minimum) out.push_back(i + 1);
  }
  return out;
}

/// Segments starting at the left-to-right minima, listed by increasing minimum.
inline Parts lr_parts(const Seq& a) {
  const auto pos = lr_positions(a);
  Parts parts;
  for (std::size_t k = 0; k < pos.size(); ++k) {
    const unsigned end = k + 1 < pos.size() ? pos[k + 1] - 1 : static_cast<unsigned>(a.size());
    parts.emplace_back(a.begin() + (pos[k] - 1), a.begin() + end);
  }
  std::reverse(parts.begin(), parts.end());
  return parts;
}

inline Seq concat_reversed(const Parts& parts) {
  Seq out;
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) out.insert(out.end(), it->begin(), it->end());
  return out;
}

/// Park by the literal recursion: decrement everything above d until d = n+1.
inline Seq parkize(Seq a) {
  for (;;) {
    const unsigned n = static_cast<unsigned>(a.size());
    unsigned d = 1;
    for (;; ++d) {
      unsigned count = 0;
      for (unsigned x : a) count += x <= d;
      if (count < d) break;
    }
    if (d == n + 1) return a;
    for (unsigned& x : a) {
      if (x > d) --x;
    }
  }
}

inline Seq standardize(const Seq& a) {
  Seq out;
  for (unsigned x : a) {
    unsigned rank = 1;
    for (unsigned y : a) rank += y < x;
    out.push_back(rank);
  }
  return out;
}

/// Every partial matching between [r] and [s] as a subset of [r]×[s].
inline std::vector<std::vector<std::pair<unsigned, unsigned>>> all_matchings(unsigned r, unsigned s) {
  std::vector<std::vector<std::pair<unsigned, unsigned>>> out;
  const unsigned cells = r * s;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
    std::vector<std::pair<unsigned, unsigned>> edges;
    std::set<unsigned> rows, cols;
    bool ok = true;
    for (unsigned c = 0; c < cells && ok; ++c) {
      if (!((mask >> c) & 1)) continue;
      const unsigned i = c / s + 1, j = c % s + 1;
      ok = rows.insert(i).second && cols.insert(j).second;
      edges.emplace_back(i, j);
    }
    if (ok) out.push_back(edges);
  }
  return out;
}

/// M_a ⋆ M_b as a map word -> multiplicity.
inline std::map<Seq, int> m_product(const Seq& a, const Seq& b) {
  const unsigned m = static_cast<unsigned>(a.size());
  const Parts fa = lr_parts(a);
  Parts fb = lr_parts(b);
  for (auto& p : fb) {
    for (auto& x : p) x += m;
  }
  std::map<Seq, int> out;
  for (const auto& edges : all_matchings(static_cast<unsigned>(fa.size()),
                                         static_cast<unsigned>(fb.size()))) {
    Parts parts = fa;
    std::vector<bool> used(fb.size(), false);
    for (auto [i, j] : edges) {
      parts[i - 1].insert(parts[i - 1].end(), fb[j - 1].begin(), fb[j - 1].end());
      used[j - 1] = true;
    }
    for (std::size_t j = 0; j < fb.size(); ++j) {
      if (!used[j]) parts.push_back(fb[j]);
    }
    std::sort(parts.begin(), parts.end(),
              [](const Seq& x, const Seq& y) { return *std::min_element(x.begin(), x.end()) <
                                                      *std::min_element(y.begin(), y.end()); });
    ++out[concat_reversed(parts)];
  }
  return out;
}

/// Δ(M_a) via subwords: a' keeps the letters of the chosen parts in place.
inline std::map<std::pair<Seq, Seq>, int> m_coproduct(const Seq& a) {
  const auto pos = lr_positions(a);
  // Segment index of every position.
  std::vector<unsigned> seg(a.size());
  for (std::size_t k = 0; k < pos.size(); ++k) {
    const unsigned end = k + 1 < pos.size() ? pos[k + 1] - 1 : static_cast<unsigned>(a.size());
    for (unsigned p = pos[k]; p <= end; ++p) seg[p - 1] = static_cast<unsigned>(k);
  }
  std::map<std::pair<Seq, Seq>, int> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pos.size()); ++mask) {
    Seq left, right;
    for (std::size_t p = 0; p < a.size(); ++p) ((mask >> seg[p]) & 1 ? left : right).push_back(a[p]);
    ++out[{parkize(left), parkize(right)}];
  }
  return out;
}

/// a∘b from the padded partwise formula.
inline Seq split_product(const Seq& a, const Seq& b) {
  const unsigned m = static_cast<unsigned>(a.size());
  Parts fa = a.empty() ? Parts{} : lr_parts(a);
  Parts fb = b.empty() ? Parts{} : lr_parts(b);
  for (auto& p : fb) {
    for (auto& x : p) x += m;
  }
  Parts out;
  for (std::size_t i = 0; i < std::max(fa.size(), fb.size()); ++i) {
    Seq part = i < fa.size() ? fa[i] : Seq{};
    if (i < fb.size()) part.insert(part.end(), fb[i].begin(), fb[i].end());
    out.push_back(part);
  }
  return concat_reversed(out);
}

/// a|b = (b+m) a.
inline Seq slash_product(const Seq& a, const Seq& b) {
  Seq out;
  for (unsigned x : b) out.push_back(x + static_cast<unsigned>(a.size()));
  out.insert(out.end(), a.begin(), a.end());
  return out;
}

/// True if a = f(b, c) for nonempty parking functions b, c.
inline bool decomposes(const Seq& a, const std::function<Seq(const Seq&, const Seq&)>& f) {
  const unsigned n = static_cast<unsigned>(a.size());
  for (unsigned k = 1; k < n; ++k) {
    for (const auto& b : all_pfs(k)) {
      for (const auto& c : all_pfs(n - k)) {
        if (f(b, c) == a) return true;
      }
    }
  }
  return false;
}

/// a = b·(c + l(b)) for nonempty parking functions b, c.
inline bool is_connected(const Seq& a) {
  return !decomposes(a, [](const Seq& b, const Seq& c) {
    Seq out = b;
    for (unsigned x : c) out.push_back(x + static_cast<unsigned>(b.size()));
    return out;
  });
}

/// Every b covering a, generated by merging parts.
inline std::set<Seq> upper_covers(const Seq& a) {
  const Parts f = lr_parts(a);
  std::set<Seq> out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      if (*std::max_element(f[i].begin(), f[i].end()) >
          *std::min_element(f[j].begin(), f[j].end())) {
        continue;
      }
      Parts g;
      for (std::size_t k = 0; k < f.size(); ++k) {
        if (k == i) {
          Seq w = f[i];
          w.insert(w.end(), f[j].begin(), f[j].end());
          g.push_back(w);
        } else if (k != j) {
          g.push_back(f[k]);
        }
      }
      out.insert(concat_reversed(g));
    }
  }
  return out;
}

/// {b : a ≤* b} by search along covers.
inline std::set<Seq> up_set(const Seq& a) {
  std::set<Seq> seen{a};
  std::vector<Seq> stack{a};
  while (!stack.empty()) {
    Seq x = stack.back();
    stack.pop_back();
    for (const auto& y : upper_covers(x)) {
      if (seen.insert(y).second) stack.push_back(y);
    }
  }
  return seen;
}

/// b covers a: F_b comes from F_a by gluing w_i w_j (i < j) when
/// max(w_i) <= min(w_j).
inline bool covers(const Seq& a, const Seq& b) {
  const Parts fa = lr_parts(a), fb = lr_parts(b);
  for (std::size_t i = 0; i < fa.size(); ++i) {
    for (std::size_t j = i + 1; j < fa.size(); ++j) {
      if (*std::max_element(fa[i].begin(), fa[i].end()) >
          *std::min_element(fa[j].begin(), fa[j].end())) {
        continue;
      }
      Parts g;
      for (std::size_t k = 0; k < fa.size(); ++k) {
        if (k == i) {
          Seq w = fa[i];
          w.insert(w.end(), fa[j].begin(), fa[j].end());
          g.push_back(w);
        } else if (k != j) {
          g.push_back(fa[k]);
        }
      }
      if (g == fb) return true;
    }
  }
  return false;
}

/// Reflexive-transitive closure of the cover relation on `elems`, and the
/// Möbius function from the recursive definition.
struct Poset {
  std::vector<Seq> elems;
  std::vector<std::vector<bool>> leq;
  std::map<std::pair<std::size_t, std::size_t>, long> mu_memo;

  explicit Poset(std::vector<Seq> e) : elems(std::move(e)) {
    const std::size_t n = elems.size();
    leq.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
      leq[i][i] = true;
      for (std::size_t j = 0; j < n; ++j) {
        if (covers(elems[i], elems[j])) leq[i][j] = true;
      }
    }
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (leq[i][k])
          for (std::size_t j = 0; j < n; ++j)
            if (leq[k][j]) leq[i][j] = true;
  }

  std::size_t index(const Seq& a) const {
    return static_cast<std::size_t>(std::find(elems.begin(), elems.end(), a) - elems.begin());
  }

  long mu(std::size_t a, std::size_t b) {
    if (!leq[a][b]) return 0;
    if (a == b) return 1;
    if (auto it = mu_memo.find({a, b}); it != mu_memo.end()) return it->second;
    long sum = 0;
    for (std::size_t c = 0; c < elems.size(); ++c) {
      if (c != b && leq[a][c] && leq[c][b]) sum += mu(a, c);
    }
    return mu_memo[{a, b}] = -sum;
  }
};

/// All set partitions of [n] as sorted lists of sorted blocks, by brute force
/// over block-label functions.
inline std::set<std::vector<Seq>> all_set_partitions(unsigned n) {
  std::set<std::vector<Seq>> out;
  for (const auto& labels : all_words(n, std::max(n, 1u))) {
    std::map<unsigned, Seq> blocks;
    for (unsigned i = 0; i < n; ++i) blocks[labels[i]].push_back(i + 1);
    std::vector<Seq> p;
    for (auto& [k, b] : blocks) p.push_back(b);
    std::sort(p.begin(), p.end());
    out.insert(p);
  }
  return out;
}

/// M_π M_σ by brute force over matchings, result blocks sorted.
inline std::map<std::vector<Seq>, int> ncsym_product(const std::vector<Seq>& pi,
                                                     const std::vector<Seq>& sigma) {
  unsigned m = 0;
  for (const auto& b : pi) m += static_cast<unsigned>(b.size());
  std::vector<Seq> right = sigma;
  for (auto& b : right) {
    for (auto& x : b) x += m;
  }
  std::map<std::vector<Seq>, int> out;
  for (const auto& edges : all_matchings(static_cast<unsigned>(pi.size()),
                                         static_cast<unsigned>(right.size()))) {
    std::vector<Seq> blocks = pi;
    std::vector<bool> used(right.size(), false);
    for (auto [i, j] : edges) {
      blocks[i - 1].insert(blocks[i - 1].end(), right[j - 1].begin(), right[j - 1].end());
      used[j - 1] = true;
    }
    for (std::size_t j = 0; j < right.size(); ++j) {
      if (!used[j]) blocks.push_back(right[j]);
    }
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end());
    ++out[blocks];
  }
  return out;
}

}  // namespace oracle

#endif  // PFSYM_TESTS_ORACLES_HPP
