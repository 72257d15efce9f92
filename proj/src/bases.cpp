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

#include "pfsym/bases.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "pfsym/error.hpp"

namespace pfsym {

// ---------------------------------------------------------------------------
// Split and slash products

ParkingFunction split_product(const ParkingFunction& a, const ParkingFunction& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  const LRDecomposition fa = lr_decompose(a);
  const LRDecomposition fb = lr_decompose(b);
  const Letter m = static_cast<Letter>(a.size());
  const std::size_t r = fa.size(), s = fb.size();
  std::vector<Word> parts;
  parts.reserve(std::max(r, s));
  for (std::size_t i = 0; i < std::min(r, s); ++i) parts.push_back(fa[i] + shift(fb[i], m));
  for (std::size_t i = s; i < r; ++i) parts.push_back(fa[i]);
  for (std::size_t i = r; i < s; ++i) parts.push_back(shift(fb[i], m));
  return ParkingFunction::trusted(LRDecomposition::trusted(std::move(parts)).word());
}

ParkingFunction slash_product(const ParkingFunction& a, const ParkingFunction& b) {
  Word out = shift(b.word(), static_cast<Letter>(a.size()));
  out.append(a.word());
  return ParkingFunction::trusted(std::move(out));
}

std::optional<std::pair<ParkingFunction, ParkingFunction>> split_at(
    const ParkingFunction& a, std::size_t m) {
  const std::size_t n = a.size();
  if (m == 0 || m >= n) return std::nullopt;
  // The only candidates: b is the subword of letters <= m, c the rest shifted
  // down by m.
  std::vector<Letter> small, large;
  for (Letter x : a.word()) (x <= m ? small : large).push_back(x <= m ? x : x - m);
  if (small.size() != m) return std::nullopt;
  Word b(std::move(small)), c(std::move(large));
  if (!is_parking_function(b) || !is_parking_function(c)) return std::nullopt;
  auto pb = ParkingFunction::trusted(std::move(b));
  auto pc = ParkingFunction::trusted(std::move(c));
  if (split_product(pb, pc) != a) return std::nullopt;
  return std::make_pair(std::move(pb), std::move(pc));
}

std::optional<std::pair<ParkingFunction, ParkingFunction>> slash_at(
    const ParkingFunction& a, std::size_t m) {
  const std::size_t n = a.size();
  if (m == 0 || m >= n) return std::nullopt;
  // a = (c + m) · b with l(b) = m.
  std::vector<Letter> prefix, suffix(a.word().begin() + (n - m), a.word().end());
  for (std::size_t i = 0; i < n - m; ++i) {
    if (a[i] <= m) return std::nullopt;
    prefix.push_back(a[i] - static_cast<Letter>(m));
  }
  Word b(std::move(suffix)), c(std::move(prefix));
  if (!is_parking_function(b) || !is_parking_function(c)) return std::nullopt;
  return std::make_pair(ParkingFunction::trusted(std::move(b)),
                        ParkingFunction::trusted(std::move(c)));
}

bool is_unsplitable(const ParkingFunction& a) {
  if (a.empty()) throw Error(Errc::kEmptyWord, "unsplitability of ε is undefined");
  for (std::size_t m = 1; m < a.size(); ++m) {
    if (split_at(a, m)) return false;
  }
  return true;
}

bool is_atomic(const ParkingFunction& a) {
  if (a.empty()) throw Error(Errc::kEmptyWord, "atomicity of ε is undefined");
  for (std::size_t m = 1; m < a.size(); ++m) {
    if (slash_at(a, m)) return false;
  }
  return true;
}

bool is_connected(const ParkingFunction& a) {
  if (a.empty()) throw Error(Errc::kEmptyWord, "connectedness of ε is undefined");
  const std::size_t n = a.size();
  for (std::size_t m = 1; m < n; ++m) {
    Word prefix(std::vector<Letter>(a.word().begin(), a.word().begin() + m));
    if (!is_parking_function(prefix)) continue;
    std::vector<Letter> rest;
    bool above = true;
    for (std::size_t i = m; i < n && above; ++i) {
      above = a[i] > m;
      rest.push_back(a[i] - static_cast<Letter>(m));
    }
    if (above && is_parking_function(Word(std::move(rest)))) return false;
  }
  return true;
}

namespace {

using Splitter = std::optional<std::pair<ParkingFunction, ParkingFunction>> (*)(
    const ParkingFunction&, std::size_t);

void factor_into(const ParkingFunction& a, Splitter split,
                 std::vector<ParkingFunction>& out) {
  for (std::size_t m = 1; m < a.size(); ++m) {
    if (auto parts = split(a, m)) {
      factor_into(parts->first, split, out);
      factor_into(parts->second, split, out);
      return;
    }
  }
  out.push_back(a);
}

}  // namespace

ParkingFunction Factorization::recombine() const {
  ParkingFunction acc;
  for (const ParkingFunction& f : factors) {
    acc = kind == FactorKind::kSplit ? split_product(acc, f) : slash_product(acc, f);
  }
  return acc;
}

Factorization split_factorization(const ParkingFunction& a) {
  if (a.empty()) throw Error(Errc::kEmptyWord, "cannot factor ε");
  Factorization f{FactorKind::kSplit, {}};
  factor_into(a, &split_at, f.factors);
  return f;
}

Factorization slash_factorization(const ParkingFunction& a) {
  if (a.empty()) throw Error(Errc::kEmptyWord, "cannot factor ε");
  Factorization f{FactorKind::kSlash, {}};
  factor_into(a, &slash_at, f.factors);
  return f;
}

std::string to_string(const Factorization& f) {
  std::string out;
  const char* sep = f.kind == FactorKind::kSplit ? " ∘ " : " | ";
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    if (i) out += sep;
    out += to_string(f.factors[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Orders

bool star_less(const Word& a, const Word& b) {
  const std::size_t k = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < k; ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  // One is a prefix of the other: the longer word comes first.
  return a.size() > b.size();
}

bool lex_star_less(const LRDecomposition& f, const LRDecomposition& g) {
  const std::size_t k = std::min(f.size(), g.size());
  for (std::size_t i = 0; i < k; ++i) {
    if (f[i] != g[i]) return star_less(f[i], g[i]);
  }
  return false;
}

namespace {

void require_same_length(const ParkingFunction& a, const ParkingFunction& b) {
  if (a.size() != b.size()) {
    throw Error(Errc::kLengthMismatch, "lengths differ: " + to_string(a) + " vs " +
                                           to_string(b));
  }
}

std::vector<LRDecomposition> merges(const LRDecomposition& f) {
  std::vector<LRDecomposition> out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Letter top = f[i].max();
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      if (top > f[j].min()) continue;
      std::vector<Word> parts;
      parts.reserve(f.size() - 1);
      for (std::size_t k = 0; k < f.size(); ++k) {
        if (k == i) parts.push_back(f[i] + f[j]);
        else if (k != j) parts.push_back(f[k]);
      }
      out.push_back(LRDecomposition::trusted(std::move(parts)));
    }
  }
  return out;
}

}  // namespace

bool total_order_less(const ParkingFunction& a, const ParkingFunction& b) {
  require_same_length(a, b);
  return lex_star_less(lr_decompose(a), lr_decompose(b));
}

bool covers(const ParkingFunction& a, const ParkingFunction& b) {
  require_same_length(a, b);
  const LRDecomposition fb = lr_decompose(b);
  for (const LRDecomposition& g : merges(lr_decompose(a))) {
    if (g == fb) return true;
  }
  return false;
}

std::vector<ParkingFunction> upper_covers(const ParkingFunction& a) {
  std::vector<ParkingFunction> out;
  for (const LRDecomposition& g : merges(lr_decompose(a))) {
    out.push_back(ParkingFunction::trusted(g.word()));
  }
  sort_star_lex(out);
  return out;
}

void sort_star_lex(std::vector<ParkingFunction>& items) {
  std::vector<LRDecomposition> keys;
  keys.reserve(items.size());
  for (const auto& a : items) keys.push_back(lr_decompose(a));
  std::vector<std::size_t> order(items.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (items[x].size() != items[y].size()) return items[x].size() < items[y].size();
    return lex_star_less(keys[x], keys[y]);
  });
  std::vector<ParkingFunction> sorted;
  sorted.reserve(items.size());
  for (std::size_t i : order) sorted.push_back(std::move(items[i]));
  items = std::move(sorted);
}

// ---------------------------------------------------------------------------
// Poset

namespace {

void check_degree(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw Error(Errc::kDegreeTooLarge, "degree " + std::to_string(n) +
                                           " exceeds the cap " + std::to_string(cap));
  }
}

}  // namespace

Poset Poset::build(std::size_t n, std::size_t max_degree) {
  check_degree(n, max_degree);
  Poset p;
  p.degree_ = n;
  p.elements_ = parking_functions(n, std::max(max_degree, n));
  const std::size_t size = p.elements_.size();
  p.index_.reserve(size);
  for (Index i = 0; i < size; ++i) p.index_.emplace(p.elements_[i].word(), i);

  std::vector<std::size_t> rank(size);  // number of parts
  std::vector<std::vector<Index>> upper(size);
  for (Index i = 0; i < size; ++i) {
    const LRDecomposition f = lr_decompose(p.elements_[i]);
    rank[i] = f.size();
    for (const LRDecomposition& g : merges(f)) {
      Index j = p.index_.at(g.word());
      upper[i].push_back(j);
      p.cover_pairs_.emplace_back(i, j);
    }
    std::sort(upper[i].begin(), upper[i].end());
    upper[i].erase(std::unique(upper[i].begin(), upper[i].end()), upper[i].end());
  }
  std::sort(p.cover_pairs_.begin(), p.cover_pairs_.end());
  p.cover_pairs_.erase(std::unique(p.cover_pairs_.begin(), p.cover_pairs_.end()),
                       p.cover_pairs_.end());

  // Covers strictly lower the number of parts, so filling up-sets from the
  // fewest parts upward sees every cover's up-set already complete.
  std::vector<Index> by_rank(size);
  std::iota(by_rank.begin(), by_rank.end(), 0);
  std::stable_sort(by_rank.begin(), by_rank.end(),
                   [&](Index x, Index y) { return rank[x] < rank[y]; });
  p.up_sets_.assign(size, {});
  for (Index i : by_rank) {
    std::vector<Index> up{i};
    for (Index j : upper[i]) {
      std::vector<Index> merged;
      std::set_union(up.begin(), up.end(), p.up_sets_[j].begin(), p.up_sets_[j].end(),
                     std::back_inserter(merged));
      up = std::move(merged);
    }
    p.up_sets_[i] = std::move(up);
  }

  p.moebius_.assign(size, {});
  for (Index a = 0; a < size; ++a) {
    const auto& up = p.up_sets_[a];
    std::vector<std::size_t> order(up.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return rank[up[x]] > rank[up[y]];
    });
    std::vector<std::int64_t> mu(up.size(), 0);
    for (std::size_t oc = 0; oc < order.size(); ++oc) {
      const std::size_t c = order[oc];
      if (up[c] == a) {
        mu[c] = 1;
        continue;
      }
      std::int64_t sum = 0;
      for (std::size_t ob = 0; ob < oc; ++ob) {
        const std::size_t b = order[ob];
        if (rank[up[b]] > rank[up[c]] && p.leq(up[b], up[c])) sum += mu[b];
      }
      mu[c] = -sum;
    }
    p.moebius_[a] = std::move(mu);
  }

  if (n <= 4) {
    for (Index a = 0; a < size; ++a) {
      if (!p.leq(a, a)) throw std::logic_error("≤* is not reflexive");
      for (Index b : p.up_sets_[a]) {
        if (b != a && p.leq(b, a)) throw std::logic_error("≤* is not antisymmetric");
        for (Index c : p.up_sets_[b]) {
          if (!p.leq(a, c)) throw std::logic_error("≤* is not transitive");
        }
      }
    }
  }
  return p;
}

std::optional<Poset::Index> Poset::index_of(const ParkingFunction& a) const {
  auto it = index_.find(a.word());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Poset::Index Poset::require(const ParkingFunction& a) const {
  auto i = index_of(a);
  if (!i) {
    throw Error(Errc::kLengthMismatch, to_string(a) + " is not in P_" + std::to_string(degree_));
  }
  return *i;
}

bool Poset::leq(Index a, Index b) const {
  const auto& up = up_sets_[a];
  return std::binary_search(up.begin(), up.end(), b);
}

bool Poset::leq(const ParkingFunction& a, const ParkingFunction& b) const {
  return leq(require(a), require(b));
}

std::int64_t Poset::moebius(Index a, Index b) const {
  const auto& up = up_sets_[a];
  auto it = std::lower_bound(up.begin(), up.end(), b);
  if (it == up.end() || *it != b) {
    throw Error(Errc::kNotComparable, to_string(elements_[a]) + " is not ≤* " +
                                          to_string(elements_[b]));
  }
  return moebius_[a][static_cast<std::size_t>(it - up.begin())];
}

std::int64_t Poset::moebius(const ParkingFunction& a, const ParkingFunction& b) const {
  return moebius(require(a), require(b));
}

std::string Poset::to_dot() const {
  std::string out = "digraph P" + std::to_string(degree_) + " {\n";
  out += "  rankdir=BT;\n";
  for (const auto& a : elements_) out += "  \"" + to_compact_string(a.word()) + "\";\n";
  for (auto [lo, hi] : cover_pairs_) {
    out += "  \"" + to_compact_string(elements_[lo].word()) + "\" -> \"" +
           to_compact_string(elements_[hi].word()) + "\";\n";
  }
  out += "}\n";
  return out;
}

const Poset& poset(std::size_t n, std::size_t max_degree) {
  check_degree(n, max_degree);
  static std::mutex mutex;
  static std::map<std::size_t, std::unique_ptr<Poset>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<Poset>(Poset::build(n, max_degree));
  return *slot;
}

// ---------------------------------------------------------------------------
// Q and R bases

Element q_to_m(const ParkingFunction& a, std::size_t max_degree) {
  if (a.empty()) return Element::one(Basis::M);
  const Poset& p = poset(a.size(), max_degree);
  PfComb out;
  for (Poset::Index b : p.up_set(*p.index_of(a))) out.add(p.element(b), 1);
  return Element(Basis::M, std::move(out));
}

Element m_to_q(const ParkingFunction& a, std::size_t max_degree) {
  if (a.empty()) return Element::one(Basis::Q);
  const Poset& p = poset(a.size(), max_degree);
  const Poset::Index i = *p.index_of(a);
  PfComb out;
  for (Poset::Index b : p.up_set(i)) out.add(p.element(b), Rational(p.moebius(i, b)));
  return Element(Basis::Q, std::move(out));
}

Element q_product(const ParkingFunction& a, const ParkingFunction& b) {
  return Element::monomial(Basis::Q, slash_product(a, b));
}

TensorElement q_coproduct(const ParkingFunction& a) {
  PfTensorComb out;
  for (const auto& [left, right] : lr_splits(a)) out.add({parkize(left), parkize(right)}, 1);
  return TensorElement(Basis::Q, std::move(out));
}

Element r_basis_to_m(const ParkingFunction& a) {
  Element acc = Element::one(Basis::M);
  if (a.empty()) return acc;
  for (const ParkingFunction& f : split_factorization(a).factors) {
    acc = m_product(acc, Element::monomial(Basis::M, f));
  }
  return acc;
}

Element m_to_r(const ParkingFunction& a) {
  static std::mutex mutex;
  static std::map<ParkingFunction, PfComb> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(a); it != memo.end()) return Element(Basis::R, it->second);
  }
  // M_a = R_a - sum_{b ≻ a} t_b M_b, with every b strictly later in ≺*_lex.
  PfComb out(a, 1);
  for (const auto& [b, t] : r_basis_to_m(a)) {
    if (b == a) continue;
    out.add_scaled(m_to_r(b).terms(), -t);
  }
  std::lock_guard lock(mutex);
  memo.try_emplace(a, out);
  return Element(Basis::R, std::move(out));
}

namespace {

Element to_m(const Element& x, std::size_t cap) {
  if (x.basis() == Basis::M) return x;
  Element out(Basis::M);
  for (const auto& [a, c] : x) {
    out += (x.basis() == Basis::Q ? q_to_m(a, cap) : r_basis_to_m(a)) * c;
  }
  return out;
}

Element from_m(const Element& x, Basis target, std::size_t cap) {
  if (target == Basis::M) return x;
  Element out(target);
  for (const auto& [a, c] : x) {
    out += (target == Basis::Q ? m_to_q(a, cap) : m_to_r(a)) * c;
  }
  return out;
}

}  // namespace

Element convert(const Element& x, Basis target, std::size_t max_degree) {
  if (x.basis() == target) return x;
  return from_m(to_m(x, max_degree), target, max_degree);
}

Element product(const Element& x, const Element& y) {
  if (x.basis() != y.basis()) {
    throw Error(Errc::kBasisMismatch, std::string("basis mismatch: ") +
                                          basis_letter(x.basis()) + " vs " +
                                          basis_letter(y.basis()));
  }
  switch (x.basis()) {
    case Basis::M:
      return m_product(x, y);
    case Basis::Q:
      return Element(Basis::Q, bilinear_product(x.terms(), y.terms(),
                                                [](const ParkingFunction& a,
                                                   const ParkingFunction& b) {
                                                  return PfComb(slash_product(a, b));
                                                }));
    case Basis::R:
      return Element(Basis::R, bilinear_product(x.terms(), y.terms(),
                                                [](const ParkingFunction& a,
                                                   const ParkingFunction& b) {
                                                  return PfComb(split_product(a, b));
                                                }));
  }
  return Element(x.basis());
}

TensorElement coproduct(const Element& x, std::size_t max_degree) {
  switch (x.basis()) {
    case Basis::M:
      return m_coproduct(x);
    case Basis::Q: {
      TensorElement out(Basis::Q);
      for (const auto& [a, c] : x) {
        PfTensorComb t;
        t.add_scaled(q_coproduct(a).terms(), c);
        out += TensorElement(Basis::Q, std::move(t));
      }
      return out;
    }
    case Basis::R: {
      PfTensorComb out;
      for (const auto& [lr, c] : m_coproduct(convert(x, Basis::M, max_degree))) {
        for (const auto& [l, cl] : m_to_r(lr.first)) {
          for (const auto& [r, cr] : m_to_r(lr.second)) out.add({l, r}, c * cl * cr);
        }
      }
      return TensorElement(Basis::R, std::move(out));
    }
  }
  return TensorElement(x.basis());
}

// ---------------------------------------------------------------------------
// Families

Family parse_family(std::string_view text) {
  static const std::pair<std::string_view, Family> kNames[] = {
      {"P", Family::kP},   {"UP", Family::kUP}, {"AP", Family::kAP}, {"N", Family::kN},
      {"D", Family::kD},   {"S", Family::kS},   {"C", Family::kC},   {"AC", Family::kAC},
      {"AN", Family::kAN}, {"UN", Family::kUN}, {"AD", Family::kAD}, {"UD", Family::kUD},
      {"AS", Family::kAS}, {"US", Family::kUS}, {"PI", Family::kPiTilde},
  };
  std::string upper(text);
  for (char& ch : upper) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  for (auto [name, f] : kNames) {
    if (upper == name) return f;
  }
  throw Error(Errc::kParseError, "unknown family '" + std::string(text) + "'");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::kP: return "P";
    case Family::kUP: return "UP";
    case Family::kAP: return "AP";
    case Family::kN: return "N";
    case Family::kD: return "D";
    case Family::kS: return "S";
    case Family::kC: return "C";
    case Family::kAC: return "AC";
    case Family::kAN: return "AN";
    case Family::kUN: return "UN";
    case Family::kAD: return "AD";
    case Family::kUD: return "UD";
    case Family::kAS: return "AS";
    case Family::kUS: return "US";
    case Family::kPiTilde: return "PI";
  }
  return "?";
}

namespace {

bool nondecreasing_parts(const ParkingFunction& a) {
  for (const Word& w : lr_decompose(a)) {
    if (!std::is_sorted(w.begin(), w.end())) return false;
  }
  return true;
}

bool disjoint_parts(const ParkingFunction& a) {
  std::vector<std::size_t> owner(a.size() + 1, 0);
  std::size_t id = 0;
  for (const Word& w : lr_decompose(a)) {
    ++id;
    for (Letter x : w) {
      if (owner[x] != 0 && owner[x] != id) return false;
      owner[x] = id;
    }
  }
  return true;
}

bool is_permutation_word(const ParkingFunction& a) {
  std::vector<bool> seen(a.size() + 1, false);
  for (Letter x : a.word()) {
    if (seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

bool nonincreasing(const ParkingFunction& a) {
  return std::is_sorted(a.word().begin(), a.word().end(), std::greater<>());
}

}  // namespace

bool in_family(const ParkingFunction& a, Family f) {
  switch (f) {
    case Family::kP: return true;
    case Family::kUP: return !a.empty() && is_unsplitable(a);
    case Family::kAP: return !a.empty() && is_atomic(a);
    case Family::kN: return nondecreasing_parts(a);
    case Family::kD: return disjoint_parts(a);
    case Family::kS: return is_permutation_word(a);
    case Family::kC: return nonincreasing(a);
    case Family::kAC: return in_family(a, Family::kAP) && nonincreasing(a);
    case Family::kAN: return in_family(a, Family::kAP) && nondecreasing_parts(a);
    case Family::kUN: return in_family(a, Family::kUP) && nondecreasing_parts(a);
    case Family::kAD: return in_family(a, Family::kAP) && disjoint_parts(a);
    case Family::kUD: return in_family(a, Family::kUP) && disjoint_parts(a);
    case Family::kAS: return in_family(a, Family::kAP) && is_permutation_word(a);
    case Family::kUS: return in_family(a, Family::kUP) && is_permutation_word(a);
    case Family::kPiTilde: return nondecreasing_parts(a) && is_permutation_word(a);
  }
  return false;
}

namespace {

// Nondecreasing parking functions: b_1 <= b_2 <= ... with b_i <= i.
void nondecreasing_pfs(std::size_t n, std::vector<Letter>& prefix,
                       std::vector<std::vector<Letter>>& out) {
  const std::size_t i = prefix.size() + 1;
  if (prefix.size() == n) {
    out.push_back(prefix);
    return;
  }
  const Letter low = prefix.empty() ? 1 : prefix.back();
  for (Letter x = low; x <= i; ++x) {
    prefix.push_back(x);
    nondecreasing_pfs(n, prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::vector<Letter>> nondecreasing_pfs(std::size_t n) {
  std::vector<std::vector<Letter>> out;
  std::vector<Letter> prefix;
  nondecreasing_pfs(n, prefix, out);
  return out;
}

}  // namespace

std::vector<ParkingFunction> parking_functions(std::size_t n, std::size_t max_degree) {
  check_degree(n, max_degree);
  std::vector<ParkingFunction> out;
  for (std::vector<Letter>& letters : nondecreasing_pfs(n)) {
    do {
      out.push_back(ParkingFunction::trusted(Word(letters)));
    } while (std::next_permutation(letters.begin(), letters.end()));
  }
  sort_star_lex(out);
  return out;
}

std::vector<ParkingFunction> enumerate_family(Family f, std::size_t n,
                                              std::size_t max_degree) {
  check_degree(n, max_degree);
  std::vector<ParkingFunction> base;
  switch (f) {
    case Family::kC:
    case Family::kAC:
      for (std::vector<Letter>& letters : nondecreasing_pfs(n)) {
        std::reverse(letters.begin(), letters.end());
        base.push_back(ParkingFunction::trusted(Word(std::move(letters))));
      }
      break;
    case Family::kS:
    case Family::kAS:
    case Family::kUS:
    case Family::kPiTilde: {
      std::vector<Letter> letters(n);
      std::iota(letters.begin(), letters.end(), Letter{1});
      do {
        base.push_back(ParkingFunction::trusted(Word(letters)));
      } while (std::next_permutation(letters.begin(), letters.end()));
      break;
    }
    default:
      base = parking_functions(n, max_degree);
  }
  std::vector<ParkingFunction> out;
  for (auto& a : base) {
    if (in_family(a, f)) out.push_back(std::move(a));
  }
  sort_star_lex(out);
  return out;
}

}  // namespace pfsym
