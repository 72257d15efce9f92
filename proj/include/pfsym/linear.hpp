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

// Sparse formal linear combinations with exact rational coefficients.

#ifndef PFSYM_LINEAR_HPP
#define PFSYM_LINEAR_HPP

#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <utility>

#include <gmpxx.h>

namespace pfsym {

using Rational = mpq_class;

std::string to_string(const Rational& q);
bool is_integral(const Rational& q);

/// Appends `c·body` to a rendered sum, with ` + ` / ` - ` separators. A body
/// of "1" (the unit) renders as the bare coefficient.
void append_term(std::string& out, const Rational& c, const std::string& body, bool first);

/// Finite sum of keys with nonzero rational coefficients, kept in key order.
template <class Key>
class LinComb {
 public:
  using map_type = std::map<Key, Rational>;
  using const_iterator = typename map_type::const_iterator;

  LinComb() = default;
  explicit LinComb(const Key& key, const Rational& coeff = 1) { add(key, coeff); }

  void add(const Key& key, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coeff(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool contains(const Key& key) const { return terms_.contains(key); }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  const_iterator begin() const noexcept { return terms_.begin(); }
  const_iterator end() const noexcept { return terms_.end(); }
  const map_type& terms() const noexcept { return terms_; }

  LinComb& operator+=(const LinComb& rhs) {
    for (const auto& [k, c] : rhs.terms_) add(k, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& rhs) {
    for (const auto& [k, c] : rhs.terms_) add(k, -c);
    return *this;
  }
  LinComb& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [k, c] : terms_) c *= s;
    }
    return *this;
  }
  /// this += s * rhs
  LinComb& add_scaled(const LinComb& rhs, const Rational& s) {
    if (s == 0) return *this;
    for (const auto& [k, c] : rhs.terms_) add(k, c * s);
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(LinComb a, const Rational& s) { return a *= s; }
  friend LinComb operator*(const Rational& s, LinComb a) { return a *= s; }
  friend LinComb operator-(LinComb a) { return a *= -1; }
  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

 private:
  map_type terms_;
};

template <class Key>
using TensorComb = LinComb<std::pair<Key, Key>>;

template <class Key>
using Tensor3Comb = LinComb<std::tuple<Key, Key, Key>>;

/// Bilinear extension of a product defined on basis keys.
template <class Key, class ProductFn>
LinComb<Key> bilinear_product(const LinComb<Key>& x, const LinComb<Key>& y,
                              ProductFn&& product) {
  LinComb<Key> out;
  for (const auto& [a, ca] : x) {
    for (const auto& [b, cb] : y) out.add_scaled(product(a, b), ca * cb);
  }
  return out;
}

/// Linear extension of a coproduct defined on basis keys.
template <class Key, class CoproductFn>
TensorComb<Key> linear_coproduct(const LinComb<Key>& x, CoproductFn&& coproduct) {
  TensorComb<Key> out;
  for (const auto& [a, ca] : x) out.add_scaled(coproduct(a), ca);
  return out;
}

/// (a ⊗ b)(c ⊗ d) = ac ⊗ bd, extended bilinearly.
template <class Key, class ProductFn>
TensorComb<Key> tensor_product(const TensorComb<Key>& x, const TensorComb<Key>& y,
                               ProductFn&& product) {
  TensorComb<Key> out;
  for (const auto& [ab, c1] : x) {
    for (const auto& [cd, c2] : y) {
      LinComb<Key> left = product(ab.first, cd.first);
      LinComb<Key> right = product(ab.second, cd.second);
      for (const auto& [l, cl] : left) {
        for (const auto& [r, cr] : right) out.add({l, r}, c1 * c2 * cl * cr);
      }
    }
  }
  return out;
}

}  // namespace pfsym

#endif  // PFSYM_LINEAR_HPP
