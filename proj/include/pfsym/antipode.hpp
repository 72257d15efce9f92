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

#ifndef PFSYM_ANTIPODE_HPP
#define PFSYM_ANTIPODE_HPP

#include <functional>
#include <map>
#include <mutex>

#include "pfsym/linear.hpp"

namespace pfsym {

/// Antipode of a graded connected bialgebra, memoized per basis key.
///
/// For a key of positive degree, S(a) = -sum c * S(x) * y over the coproduct
/// terms c (x ⊗ y) of Δ(a) with deg x < deg a. This is the solution of
/// m (S ⊗ id) Δ = η ε provided the counit law holds, so Δ(a) has a ⊗ 1 as
/// its only top-degree left factor.
template <class Key>
class GradedAntipode {
 public:
  using Product = std::function<LinComb<Key>(const Key&, const Key&)>;
  using Coproduct = std::function<TensorComb<Key>(const Key&)>;
  using Degree = std::function<std::size_t(const Key&)>;

  GradedAntipode(Product product, Coproduct coproduct, Degree degree)
      : product_(std::move(product)),
        coproduct_(std::move(coproduct)),
        degree_(std::move(degree)) {}

  LinComb<Key> operator()(const Key& a) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = memo_.find(a); it != memo_.end()) return it->second;
    }
    LinComb<Key> result;
    if (degree_(a) == 0) {
      result.add(a, 1);
    } else {
      const std::size_t top = degree_(a);
      for (const auto& [xy, c] : coproduct_(a)) {
        if (degree_(xy.first) >= top) continue;
        LinComb<Key> sx = (*this)(xy.first);
        result.add_scaled(bilinear_product(sx, LinComb<Key>(xy.second), product_), -c);
      }
    }
    std::lock_guard lock(mutex_);
    return memo_.try_emplace(a, std::move(result)).first->second;
  }

  LinComb<Key> apply(const LinComb<Key>& x) {
    LinComb<Key> out;
    for (const auto& [a, c] : x) out.add_scaled((*this)(a), c);
    return out;
  }

 private:
  Product product_;
  Coproduct coproduct_;
  Degree degree_;
  std::mutex mutex_;
  std::map<Key, LinComb<Key>> memo_;
};

}  // namespace pfsym

#endif  // PFSYM_ANTIPODE_HPP
