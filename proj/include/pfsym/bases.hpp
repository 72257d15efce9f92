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

// Split and slash products with their irreducibles, the orders ≺* and ≤*,
// Möbius inversion, and the Q and R bases.

#ifndef PFSYM_BASES_HPP
#define PFSYM_BASES_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pfsym/algebra.hpp"
#include "pfsym/word.hpp"

namespace pfsym {

/// Default cap for poset construction and family enumeration.
inline constexpr std::size_t kPosetDegreeCap = 6;

// ---------------------------------------------------------------------------
// Split product ∘ and slash product |

/// Partwise concatenation of F_a with F_b + l(a), padding the shorter side.
ParkingFunction split_product(const ParkingFunction& a, const ParkingFunction& b);

/// (b + l(a)) · a.
ParkingFunction slash_product(const ParkingFunction& a, const ParkingFunction& b);

/// If a = b ∘ c with l(b) = m and both nonempty, returns (b, c).
std::optional<std::pair<ParkingFunction, ParkingFunction>> split_at(
    const ParkingFunction& a, std::size_t m);
/// If a = b | c with l(b) = m and both nonempty, returns (b, c).
std::optional<std::pair<ParkingFunction, ParkingFunction>> slash_at(
    const ParkingFunction& a, std::size_t m);

/// Throws kEmptyWord on ε.
bool is_unsplitable(const ParkingFunction& a);
bool is_atomic(const ParkingFunction& a);

/// No decomposition a = b · (c + l(b)) into nonempty parking functions.
bool is_connected(const ParkingFunction& a);

enum class FactorKind { kSplit, kSlash };

struct Factorization {
  FactorKind kind;
  std::vector<ParkingFunction> factors;

  /// Folds the factors back together with ∘ or |.
  ParkingFunction recombine() const;
};

/// Unique factorization into unsplitable (split) or atomic (slash) factors.
/// Throws kEmptyWord on ε.
Factorization split_factorization(const ParkingFunction& a);
Factorization slash_factorization(const ParkingFunction& a);

std::string to_string(const Factorization& f);

// ---------------------------------------------------------------------------
// Orders

/// The word order ≺*: a ≺* b if b is a proper prefix of a, or else a is not
/// a proper prefix of b and a <lex b.
bool star_less(const Word& a, const Word& b);

/// Lexicographic extension of ≺* to LR-decompositions.
bool lex_star_less(const LRDecomposition& f, const LRDecomposition& g);

/// ≺*_lex on P_n. Throws kLengthMismatch if the lengths differ.
bool total_order_less(const ParkingFunction& a, const ParkingFunction& b);

/// True if F_b is obtained from F_a by replacing w_i with w_i·w_j and dropping
/// w_j, for some i < j with max(w_i) <= min(w_j). Throws kLengthMismatch.
bool covers(const ParkingFunction& a, const ParkingFunction& b);

/// Every b covering a, in ≺*_lex order.
std::vector<ParkingFunction> upper_covers(const ParkingFunction& a);

/// (P_n, ≤*) with elements indexed in ≺*_lex order. Immutable once built.
class Poset {
 public:
  using Index = std::uint32_t;

  /// Throws kDegreeTooLarge if n > max_degree, kLengthMismatch-free otherwise.
  static Poset build(std::size_t n, std::size_t max_degree = kPosetDegreeCap);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<ParkingFunction>& elements() const noexcept { return elements_; }
  const ParkingFunction& element(Index i) const { return elements_[i]; }
  std::optional<Index> index_of(const ParkingFunction& a) const;

  /// Cover pairs (lower, upper), sorted.
  const std::vector<std::pair<Index, Index>>& cover_pairs() const noexcept {
    return cover_pairs_;
  }

  /// Sorted indices of {b : a ≤* b}, including a.
  std::span<const Index> up_set(Index a) const { return up_sets_[a]; }
  bool leq(Index a, Index b) const;
  bool leq(const ParkingFunction& a, const ParkingFunction& b) const;

  /// μ(a, b). Throws kNotComparable unless a ≤* b.
  std::int64_t moebius(Index a, Index b) const;
  std::int64_t moebius(const ParkingFunction& a, const ParkingFunction& b) const;

  /// Graphviz digraph with one edge lower -> upper per cover.
  std::string to_dot() const;

 private:
  Index require(const ParkingFunction& a) const;

  std::size_t degree_ = 0;
  std::vector<ParkingFunction> elements_;
  std::unordered_map<Word, Index, WordHash> index_;
  std::vector<std::pair<Index, Index>> cover_pairs_;
  std::vector<std::vector<Index>> up_sets_;
  // moebius_[a][k] = μ(a, up_sets_[a][k])
  std::vector<std::vector<std::int64_t>> moebius_;
};

/// Shared, lazily built poset for degree n.
const Poset& poset(std::size_t n, std::size_t max_degree = kPosetDegreeCap);

// ---------------------------------------------------------------------------
// Q and R bases

/// Q_a = sum over a ≤* b of M_b.
Element q_to_m(const ParkingFunction& a, std::size_t max_degree = kPosetDegreeCap);
/// M_a = sum over a ≤* b of μ(a,b) Q_b.
Element m_to_q(const ParkingFunction& a, std::size_t max_degree = kPosetDegreeCap);

/// Q_a ⋆ Q_b = Q_{a|b}.
Element q_product(const ParkingFunction& a, const ParkingFunction& b);
/// Δ(Q_a): the M-basis split rule with Q labels.
TensorElement q_coproduct(const ParkingFunction& a);

/// R_a = M_{a1} ⋆ ... ⋆ M_{ak} over the split factorization of a.
Element r_basis_to_m(const ParkingFunction& a);
/// Inverse of r_basis_to_m, by unitriangularity under ≺*_lex.
Element m_to_r(const ParkingFunction& a);

/// Change of basis for a whole element.
Element convert(const Element& x, Basis target, std::size_t max_degree = kPosetDegreeCap);

/// Product and coproduct in the element's own basis. Q and R use their
/// multiplicative rules; the R coproduct goes through the M basis.
Element product(const Element& x, const Element& y);
TensorElement coproduct(const Element& x, std::size_t max_degree = kPosetDegreeCap);

// ---------------------------------------------------------------------------
// Families

enum class Family {
  kP, kUP, kAP, kN, kD, kS, kC, kAC, kAN, kUN, kAD, kUD, kAS, kUS, kPiTilde,
};

/// Accepts P, UP, AP, N, D, S, C, AC, AN, UN, AD, UD, AS, US and PI (Π̃).
Family parse_family(std::string_view text);
std::string family_name(Family f);

bool in_family(const ParkingFunction& a, Family f);

/// Family members of length n in ≺*_lex order. Throws kDegreeTooLarge.
std::vector<ParkingFunction> enumerate_family(Family f, std::size_t n,
                                              std::size_t max_degree = kPosetDegreeCap);

/// P_n in ≺*_lex order, generated from nondecreasing parking functions.
std::vector<ParkingFunction> parking_functions(std::size_t n,
                                               std::size_t max_degree = kAlgebraDegreeCap);

/// Stable sort by ≺*_lex.
void sort_star_lex(std::vector<ParkingFunction>& items);

}  // namespace pfsym

#endif  // PFSYM_BASES_HPP
