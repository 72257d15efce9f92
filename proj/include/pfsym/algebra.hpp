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

// The graded vector space spanned by parking functions, with elements written
// in one of the M, Q or R bases, and the M-basis Hopf structure.

#ifndef PFSYM_ALGEBRA_HPP
#define PFSYM_ALGEBRA_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

#include "pfsym/linear.hpp"
#include "pfsym/word.hpp"

namespace pfsym {

enum class Basis { M, Q, R };

char basis_letter(Basis b) noexcept;
/// "M", "Q" or "R" (case-insensitive). Throws kParseError otherwise.
Basis parse_basis(std::string_view text);

/// Operations that enumerate all of P_n refuse degrees above this unless the
/// caller raises the cap. |P_7| = 262144.
inline constexpr std::size_t kAlgebraDegreeCap = 7;

struct BasisLabel {
  Basis basis;
  ParkingFunction pf;

  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
  friend auto operator<=>(const BasisLabel& a, const BasisLabel& b) {
    if (auto c = a.basis <=> b.basis; c != 0) return c;
    return a.pf <=> b.pf;
  }
};

using PfComb = LinComb<ParkingFunction>;
using PfTensorComb = TensorComb<ParkingFunction>;

/// Linear combination of basis elements X_a, all in the same basis X.
class Element {
 public:
  explicit Element(Basis basis = Basis::M) : basis_(basis) {}
  Element(Basis basis, PfComb terms) : basis_(basis), terms_(std::move(terms)) {}

  static Element monomial(Basis basis, const ParkingFunction& a,
                          const Rational& coeff = 1) {
    return Element(basis, PfComb(a, coeff));
  }
  /// X_ε, the unit.
  static Element one(Basis basis) { return monomial(basis, ParkingFunction{}); }

  Basis basis() const noexcept { return basis_; }
  const PfComb& terms() const noexcept { return terms_; }
  Rational coeff(const ParkingFunction& a) const { return terms_.coeff(a); }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  auto begin() const noexcept { return terms_.begin(); }
  auto end() const noexcept { return terms_.end(); }

  /// Throws kBasisMismatch if rhs is in another basis.
  Element& operator+=(const Element& rhs);
  Element& operator-=(const Element& rhs);
  Element& operator*=(const Rational& s) {
    terms_ *= s;
    return *this;
  }
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Rational& s) { return a *= s; }
  friend Element operator*(const Rational& s, Element a) { return a *= s; }
  friend Element operator-(Element a) { return a *= -1; }
  friend bool operator==(const Element&, const Element&) = default;

 private:
  Basis basis_;
  PfComb terms_;
};

/// Element of the tensor square, both factors in the same basis.
class TensorElement {
 public:
  explicit TensorElement(Basis basis = Basis::M) : basis_(basis) {}
  TensorElement(Basis basis, PfTensorComb terms)
      : basis_(basis), terms_(std::move(terms)) {}

  static TensorElement monomial(Basis basis, const ParkingFunction& left,
                                const ParkingFunction& right,
                                const Rational& coeff = 1) {
    return TensorElement(basis, PfTensorComb({left, right}, coeff));
  }

  Basis basis() const noexcept { return basis_; }
  const PfTensorComb& terms() const noexcept { return terms_; }
  Rational coeff(const ParkingFunction& l, const ParkingFunction& r) const {
    return terms_.coeff({l, r});
  }
  std::size_t size() const noexcept { return terms_.size(); }
  auto begin() const noexcept { return terms_.begin(); }
  auto end() const noexcept { return terms_.end(); }

  TensorElement& operator+=(const TensorElement& rhs);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) {
    return a += b;
  }
  friend bool operator==(const TensorElement&, const TensorElement&) = default;

 private:
  Basis basis_;
  PfTensorComb terms_;
};

// ---------------------------------------------------------------------------
// Structure maps on basis labels (M basis)

/// M_a ⋆ M_b = sum over matchings Θ of M_{aΘb}.
PfComb m_product(const ParkingFunction& a, const ParkingFunction& b);

/// Δ(M_a) = sum over splits of F_a of M_Park(a') ⊗ M_Park(a'').
PfTensorComb m_coproduct(const ParkingFunction& a);

/// The 2^k raw splits of F_a, before parkization and collection, as pairs of
/// subwords (a', a'') in subset-mask order.
std::vector<std::pair<Word, Word>> lr_splits(const Word& a);

// ---------------------------------------------------------------------------
// Element-level operations

/// Throws kBasisMismatch unless both are in the M basis.
Element m_product(const Element& x, const Element& y);
TensorElement m_coproduct(const Element& x);

/// Coefficient of the unit; basis independent since X_ε = 1 for X in M, Q, R.
Rational counit(const Element& x);

/// Antipode in the M basis, from the graded connected recursion.
Element antipode(const Element& x);
PfComb m_antipode(const ParkingFunction& a);

/// (a ⊗ b)(c ⊗ d) = (a⋆c) ⊗ (b⋆d) in the M basis.
TensorElement tensor_product(const TensorElement& x, const TensorElement& y);

/// τ: swap tensor factors.
TensorElement flip(const TensorElement& x);

// ---------------------------------------------------------------------------
// Text forms

/// `M[2,1,1]`, `1` for the unit.
std::string to_string(Basis basis, const ParkingFunction& a);
/// `c·M[w]` terms joined by ` + ` / ` - `, by degree and then decreasing ≺*_lex
/// (tensors compare left factor first); `0` if empty.
std::string to_string(const Element& x);
std::string to_string(const TensorElement& x);

/// Structured text: {"basis":"M","terms":[{"coeff":"7","pf":[2,1,1]},...]}.
std::string to_json(const Element& x);
std::string to_json(const TensorElement& x);
Element element_from_json(std::string_view text);

/// Parses the rendered form, e.g. `2·M[2,1] - M[1,2] + 3`. `*` is accepted
/// in place of `·`; a bare rational is a multiple of the unit. Every term
/// must use `basis`. Throws kParseError or kBasisMismatch.
Element parse_element(std::string_view text, Basis basis);

std::ostream& operator<<(std::ostream& os, const Element& x);
std::ostream& operator<<(std::ostream& os, const TensorElement& x);

}  // namespace pfsym

#endif  // PFSYM_ALGEBRA_HPP
