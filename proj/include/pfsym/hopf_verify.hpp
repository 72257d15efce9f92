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

// Exhaustive checks of the Hopf algebra axioms on basis elements up to a
// degree bound, for any graded algebra given by its structure maps on labels.

#ifndef PFSYM_HOPF_VERIFY_HPP
#define PFSYM_HOPF_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "pfsym/algebra.hpp"
#include "pfsym/antipode.hpp"
#include "pfsym/bases.hpp"
#include "pfsym/linear.hpp"
#include "pfsym/ncsym.hpp"

namespace pfsym {

/// Largest bound accepted by the checks.
inline constexpr std::size_t kVerifyDegreeCap = 6;

/// A graded connected bialgebra presented on a basis.
template <class Label>
struct AlgebraHandle {
  std::string name;
  std::function<std::vector<Label>(std::size_t)> basis;
  std::function<LinComb<Label>(const Label&, const Label&)> product;
  std::function<TensorComb<Label>(const Label&)> coproduct;
  std::function<Rational(const Label&)> counit;
  std::function<std::size_t(const Label&)> degree;
  std::function<std::string(const Label&)> render;
  Label unit;
};

enum class Axiom { kAssoc, kCoassoc, kUnit, kCounit, kCompat, kCocommut, kAntipode, kGrading };

/// All axioms, in report order.
const std::vector<Axiom>& all_axioms();
std::string axiom_name(Axiom a);
/// Throws kParseError on unknown names.
Axiom parse_axiom(std::string_view text);

struct Counterexample {
  std::vector<std::string> labels;
  std::string lhs;
  std::string rhs;
};

struct AxiomReport {
  std::string instance;
  std::string check;
  std::size_t bound = 0;
  bool pass = true;
  std::uint64_t checked = 0;
  std::optional<Counterexample> counterexample;
  std::string details;
};

/// One JSON object per report.
std::string to_json(const AxiomReport& r);
/// Fixed-width summary table.
std::string summary_table(const std::vector<AxiomReport>& reports);

// ---------------------------------------------------------------------------
// Rendering helpers for generic labels

template <class Label>
std::string render(const AlgebraHandle<Label>& h, const LinComb<Label>& x) {
  if (x.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [a, c] : x) {
    append_term(out, c, h.render(a), first);
    first = false;
  }
  return out;
}

template <class Label>
std::string render(const AlgebraHandle<Label>& h, const TensorComb<Label>& x) {
  if (x.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [lr, c] : x) {
    append_term(out, c, h.render(lr.first) + "⊗" + h.render(lr.second), first);
    first = false;
  }
  return out;
}

template <class Label>
std::string render(const AlgebraHandle<Label>& h, const Tensor3Comb<Label>& x) {
  if (x.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [t, c] : x) {
    append_term(out, c,
                h.render(std::get<0>(t)) + "⊗" + h.render(std::get<1>(t)) + "⊗" +
                    h.render(std::get<2>(t)),
                first);
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// The checks

namespace detail {

void check_bound(std::size_t bound);

template <class Label>
std::vector<std::vector<Label>> graded_basis(const AlgebraHandle<Label>& h,
                                             std::size_t bound) {
  std::vector<std::vector<Label>> out;
  for (std::size_t n = 0; n <= bound; ++n) out.push_back(h.basis(n));
  return out;
}

template <class Label>
LinComb<Label> mul(const AlgebraHandle<Label>& h, const LinComb<Label>& x,
                   const LinComb<Label>& y) {
  return bilinear_product(x, y, h.product);
}

template <class Label>
TensorComb<Label> comul(const AlgebraHandle<Label>& h, const LinComb<Label>& x) {
  return linear_coproduct(x, h.coproduct);
}

template <class Label>
Tensor3Comb<Label> delta_left(const AlgebraHandle<Label>& h, const TensorComb<Label>& t) {
  Tensor3Comb<Label> out;
  for (const auto& [lr, c] : t) {
    for (const auto& [xy, d] : h.coproduct(lr.first)) {
      out.add({xy.first, xy.second, lr.second}, c * d);
    }
  }
  return out;
}

template <class Label>
Tensor3Comb<Label> delta_right(const AlgebraHandle<Label>& h, const TensorComb<Label>& t) {
  Tensor3Comb<Label> out;
  for (const auto& [lr, c] : t) {
    for (const auto& [xy, d] : h.coproduct(lr.second)) {
      out.add({lr.first, xy.first, xy.second}, c * d);
    }
  }
  return out;
}

}  // namespace detail

/// Exhaustively checks one axiom on basis elements whose degrees sum to at
/// most `bound`. Enumeration is by degree tuple, then basis order, so the
/// first counterexample is deterministic. Throws kDegreeTooLarge.
template <class Label>
AxiomReport check_axiom(const AlgebraHandle<Label>& h, Axiom axiom, std::size_t bound) {
  detail::check_bound(bound);
  AxiomReport r{h.name, axiom_name(axiom), bound, true, 0, std::nullopt, {}};
  const auto basis = detail::graded_basis(h, bound);
  auto fail = [&](std::vector<Label> labels, std::string lhs, std::string rhs) {
    Counterexample ce;
    for (const Label& a : labels) ce.labels.push_back(h.render(a));
    ce.lhs = std::move(lhs);
    ce.rhs = std::move(rhs);
    r.pass = false;
    r.counterexample = std::move(ce);
  };
  using Comb = LinComb<Label>;

  switch (axiom) {
    case Axiom::kAssoc:
      for (std::size_t i = 0; i <= bound && r.pass; ++i)
        for (std::size_t j = 0; i + j <= bound && r.pass; ++j)
          for (std::size_t k = 0; i + j + k <= bound && r.pass; ++k)
            for (const Label& a : basis[i])
              for (const Label& b : basis[j]) {
                if (!r.pass) break;
                const Comb ab = h.product(a, b);
                for (const Label& c : basis[k]) {
                  ++r.checked;
                  Comb lhs = detail::mul(h, ab, Comb(c));
                  Comb rhs = detail::mul(h, Comb(a), h.product(b, c));
                  if (lhs != rhs) {
                    fail({a, b, c}, render(h, lhs), render(h, rhs));
                    break;
                  }
                }
              }
      break;

    case Axiom::kCoassoc:
      for (std::size_t n = 0; n <= bound && r.pass; ++n)
        for (const Label& a : basis[n]) {
          ++r.checked;
          const auto d = h.coproduct(a);
          auto lhs = detail::delta_left(h, d);
          auto rhs = detail::delta_right(h, d);
          if (lhs != rhs) {
            fail({a}, render(h, lhs), render(h, rhs));
            break;
          }
        }
      break;

    case Axiom::kUnit:
      for (std::size_t n = 0; n <= bound && r.pass; ++n)
        for (const Label& a : basis[n]) {
          ++r.checked;
          const Comb left = h.product(h.unit, a);
          const Comb right = h.product(a, h.unit);
          if (left != Comb(a) || right != Comb(a)) {
            fail({a}, render(h, left != Comb(a) ? left : right), render(h, Comb(a)));
            break;
          }
        }
      break;

    case Axiom::kCounit:
      for (std::size_t n = 0; n <= bound && r.pass; ++n)
        for (const Label& a : basis[n]) {
          ++r.checked;
          Comb left, right;
          for (const auto& [lr, c] : h.coproduct(a)) {
            left.add(lr.second, c * h.counit(lr.first));
            right.add(lr.first, c * h.counit(lr.second));
          }
          if (left != Comb(a) || right != Comb(a)) {
            fail({a}, render(h, left != Comb(a) ? left : right), render(h, Comb(a)));
            break;
          }
        }
      break;

    case Axiom::kCompat:
      for (std::size_t i = 0; i <= bound && r.pass; ++i)
        for (std::size_t j = 0; i + j <= bound && r.pass; ++j)
          for (const Label& a : basis[i]) {
            if (!r.pass) break;
            const auto da = h.coproduct(a);
            for (const Label& b : basis[j]) {
              ++r.checked;
              auto lhs = detail::comul(h, h.product(a, b));
              auto rhs = tensor_product(da, h.coproduct(b), h.product);
              if (lhs != rhs) {
                fail({a, b}, render(h, lhs), render(h, rhs));
                break;
              }
            }
          }
      break;

    case Axiom::kCocommut:
      for (std::size_t n = 0; n <= bound && r.pass; ++n)
        for (const Label& a : basis[n]) {
          ++r.checked;
          const auto d = h.coproduct(a);
          TensorComb<Label> flipped;
          for (const auto& [lr, c] : d) flipped.add({lr.second, lr.first}, c);
          if (flipped != d) {
            fail({a}, render(h, flipped), render(h, d));
            break;
          }
        }
      break;

    case Axiom::kAntipode: {
      GradedAntipode<Label> s(h.product, h.coproduct, h.degree);
      for (std::size_t n = 0; n <= bound && r.pass; ++n)
        for (const Label& a : basis[n]) {
          ++r.checked;
          Comb left, right;
          for (const auto& [lr, c] : h.coproduct(a)) {
            left.add_scaled(detail::mul(h, s(lr.first), Comb(lr.second)), c);
            right.add_scaled(detail::mul(h, Comb(lr.first), s(lr.second)), c);
          }
          const Comb expected(h.unit, h.counit(a));
          if (left != expected || right != expected) {
            fail({a}, render(h, left != expected ? left : right), render(h, expected));
            break;
          }
        }
      break;
    }

    case Axiom::kGrading:
      for (std::size_t i = 0; i <= bound && r.pass; ++i)
        for (std::size_t j = 0; i + j <= bound && r.pass; ++j)
          for (const Label& a : basis[i])
            for (const Label& b : basis[j]) {
              ++r.checked;
              const Comb ab = h.product(a, b);
              bool ok = true;
              for (const auto& [c, k] : ab) ok = ok && h.degree(c) == i + j;
              if (j == 0) {
                for (const auto& [lr, k] : h.coproduct(a)) {
                  ok = ok && h.degree(lr.first) + h.degree(lr.second) == i;
                }
                ok = ok && (i == 0 || h.counit(a) == 0);
              }
              if (!ok) {
                fail({a, b}, render(h, ab), "terms of degree " + std::to_string(i + j));
                break;
              }
            }
      break;
  }
  if (r.pass) r.details = std::to_string(r.checked) + " cases";
  return r;
}

/// Every product term and every coproduct tensor factor of family members
/// stays in the family.
template <class Label>
AxiomReport check_closure(const AlgebraHandle<Label>& h, const std::string& family_name,
                          const std::function<bool(const Label&)>& in_family,
                          std::size_t bound) {
  detail::check_bound(bound);
  AxiomReport r{h.name, "closure(" + family_name + ")", bound, true, 0, std::nullopt, {}};
  std::vector<std::vector<Label>> members;
  for (std::size_t n = 0; n <= bound; ++n) {
    members.emplace_back();
    for (const Label& a : h.basis(n)) {
      if (in_family(a)) members.back().push_back(a);
    }
  }
  auto fail = [&](std::vector<Label> labels, std::string got, const Label& outsider) {
    Counterexample ce;
    for (const Label& a : labels) ce.labels.push_back(h.render(a));
    ce.lhs = std::move(got);
    ce.rhs = "term " + h.render(outsider) + " is outside " + family_name;
    r.pass = false;
    r.counterexample = std::move(ce);
  };
  for (std::size_t i = 0; i <= bound && r.pass; ++i) {
    for (const Label& a : members[i]) {
      if (!r.pass) break;
      ++r.checked;
      const auto d = h.coproduct(a);
      for (const auto& [lr, c] : d) {
        const Label* bad = !in_family(lr.first) ? &lr.first
                           : !in_family(lr.second) ? &lr.second : nullptr;
        if (bad) {
          fail({a}, render(h, d), *bad);
          break;
        }
      }
      for (std::size_t j = 0; i + j <= bound && r.pass; ++j) {
        for (const Label& b : members[j]) {
          ++r.checked;
          const auto ab = h.product(a, b);
          for (const auto& [c, k] : ab) {
            if (!in_family(c)) {
              fail({a, b}, render(h, ab), c);
              break;
            }
          }
          if (!r.pass) break;
        }
      }
    }
  }
  if (r.pass) r.details = std::to_string(r.checked) + " cases";
  return r;
}

// ---------------------------------------------------------------------------
// Instances

enum class Instance { kPfsymM, kPfsymQ, kNcsym, kKN, kKD, kKS, kKC };

std::string instance_name(Instance i);
/// pfsym-m, pfsym-q, ncsym, kn, kd, ks, kc. Throws kParseError.
Instance parse_instance(std::string_view text);

/// PFSym in the M basis.
AlgebraHandle<ParkingFunction> pfsym_m_handle();
/// PFSym in the Q basis, using Q_a ⋆ Q_b = Q_{a|b}.
AlgebraHandle<ParkingFunction> pfsym_q_handle();
/// KN, KD, KS: the M basis restricted to a family. KC: the Q basis
/// restricted to C.
AlgebraHandle<ParkingFunction> subalgebra_handle(Instance which);
AlgebraHandle<SetPartition> ncsym_handle();

/// Adds `delta` to the coefficient of `term` in the product a ⋆ b.
template <class Label>
AlgebraHandle<Label> corrupt_product(AlgebraHandle<Label> h, const Label& a, const Label& b,
                                     const Label& term, const Rational& delta) {
  auto inner = h.product;
  h.name += "(corrupted)";
  h.product = [=](const Label& x, const Label& y) {
    LinComb<Label> out = inner(x, y);
    if (x == a && y == b) out.add(term, delta);
    return out;
  };
  return h;
}

/// Adds `delta` to the coefficient of left ⊗ right in Δ(a).
template <class Label>
AlgebraHandle<Label> corrupt_coproduct(AlgebraHandle<Label> h, const Label& a,
                                       const Label& left, const Label& right,
                                       const Rational& delta) {
  auto inner = h.coproduct;
  h.name += "(corrupted)";
  h.coproduct = [=](const Label& x) {
    TensorComb<Label> out = inner(x);
    if (x == a) out.add({left, right}, delta);
    return out;
  };
  return h;
}

/// The standard mutant: M_1 ⋆ M_1 loses its M_12 term.
AlgebraHandle<ParkingFunction> corrupted_pfsym_m_handle();

// ---------------------------------------------------------------------------
// Basis theorems and the ω embedding

enum class FreeGenerators {
  kMUnsplitable,   // {M_a : a ∈ UP} generates PFSym
  kQAtomic,        // {Q_a : a ∈ AP} generates PFSym
  kMUnsplitableN,  // {M_a : a ∈ UN} generates KN
  kQAtomicN,       // {Q_a : a ∈ AN} generates KN
  kMUnsplitableD,
  kQAtomicD,
  kMUnsplitableS,
  kQAtomicS,
  kQAtomicC,       // {Q_a : a ∈ AC} generates KC
};

std::string free_generators_name(FreeGenerators g);
/// m-unsplitable, q-atomic, m-unsplitable-n, q-atomic-n, ..., q-atomic-c.
FreeGenerators parse_free_generators(std::string_view text);

/// For each degree up to `bound`: the ordered products of generators are in
/// bijection with the ambient family via the split (M) or slash (Q)
/// factorization, and each product expands as expected. M case: the product
/// is unitriangular, with leading term the ∘-product of the factors and all
/// other terms later in ≺*_lex. Q case: the product, computed in the M basis
/// and converted back, is the single term Q_{g1|...|gk}. The details list the
/// generator count per degree.
AxiomReport check_free_generation(FreeGenerators g, std::size_t bound);

/// ω̄(M_π M_σ) = M_ω(π) ⋆ M_ω(σ) and (ω̄⊗ω̄)Δ(M_π) = Δ(M_ω(π)), and ω is a
/// bijection Π_n → Π̃_n, for sizes summing to at most `bound`.
AxiomReport check_omega_morphism(std::size_t bound);

/// For n <= bound, σ covers π exactly when ω(σ) covers ω(π).
AxiomReport check_omega_order(std::size_t bound);

/// Runs every axiom on an instance.
std::vector<AxiomReport> verify_instance(Instance which, std::size_t bound,
                                         const std::vector<Axiom>& axioms, bool corrupt);

}  // namespace pfsym

#endif  // PFSYM_HOPF_VERIFY_HPP
