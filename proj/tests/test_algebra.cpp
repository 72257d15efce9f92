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

#include <doctest.h>

#include "oracles.hpp"
#include "pfsym/algebra.hpp"
#include "pfsym/error.hpp"
#include "support.hpp"

using namespace pfsym;
using testing::as_map;
using testing::pf;
using testing::seq;

namespace {

Element m(const char* text) { return Element::monomial(Basis::M, pf(text)); }

ParkingFunction to_pf(const oracle::Seq& s) { return ParkingFunction(testing::word(s)); }

}  // namespace

TEST_CASE("worked product") {
  const Element x = m_product(m("211"), m("353112"));
  CHECK(x == m("686445211") + m("445268611") + m("445211686") + m("686244511") +
                 m("686211445") + m("268611445") + m("244511686"));
  CHECK(m_product(m("1"), m("1")) == m("21") + m("12"));
  CHECK(m_product(Element::one(Basis::M), m("2131")) == m("2131"));
  CHECK(m_product(m("2131"), Element::one(Basis::M)) == m("2131"));
}

TEST_CASE("worked coproduct") {
  const TensorElement d = m_coproduct(m("445132"));
  CHECK(as_map(d.terms()) == std::map<std::pair<oracle::Seq, oracle::Seq>, int>{
                                 {{{}, {4, 4, 5, 1, 3, 2}}, 1},
                                 {{{1, 1, 2}, {1, 3, 2}}, 1},
                                 {{{1, 3, 2}, {1, 1, 2}}, 1},
                                 {{{4, 4, 5, 1, 3, 2}, {}}, 1}});
  CHECK(m_coproduct(Element::one(Basis::M)) ==
        TensorElement::monomial(Basis::M, ParkingFunction{}, ParkingFunction{}));
  CHECK(m_coproduct(m("11")) == TensorElement::monomial(Basis::M, {}, pf("11")) +
                                    TensorElement::monomial(Basis::M, pf("11"), {}));
}

TEST_CASE("LR splits of a word") {
  const auto splits = lr_splits(parse_word("445132"));
  CHECK(splits.size() == 4);
  std::set<std::pair<std::string, std::string>> got;
  for (const auto& [l, r] : splits) got.insert({to_compact_string(l), to_compact_string(r)});
  CHECK(got == std::set<std::pair<std::string, std::string>>{
                   {"-", "445132"}, {"132", "445"}, {"445", "132"}, {"445132", "-"}});
}

TEST_CASE("M product agrees with the matching oracle up to total degree 6") {
  for (unsigned p = 0; p <= 6; ++p) {
    for (unsigned q = 0; p + q <= 6; ++q) {
      for (const auto& a : oracle::all_pfs(p)) {
        for (const auto& b : oracle::all_pfs(q)) {
          CHECK(as_map(m_product(to_pf(a), to_pf(b))) == oracle::m_product(a, b));
        }
      }
    }
  }
}

TEST_CASE("M coproduct agrees with the subword oracle up to degree 6") {
  for (unsigned n = 0; n <= 6; ++n) {
    for (const auto& a : oracle::all_pfs(n)) {
      const PfTensorComb d = m_coproduct(to_pf(a));
      int total = 0;
      for (const auto& [lr, c] : d) {
        CHECK(c > 0);
        CHECK(is_integral(c));
        total += static_cast<int>(c.get_num().get_si());
      }
      const int parts = n == 0 ? 0 : static_cast<int>(oracle::lr_positions(a).size());
      CHECK(total == (1 << parts));
      CHECK(as_map(d) == oracle::m_coproduct(a));
    }
  }
}

TEST_CASE("counit") {
  CHECK(counit(Element::one(Basis::M)) == 1);
  CHECK(counit(m("211")) == 0);
  CHECK(counit(Element::one(Basis::M) * Rational(3) + m("11") * Rational(2)) == 3);
}

TEST_CASE("antipode examples") {
  CHECK(antipode(Element::one(Basis::M)) == Element::one(Basis::M));
  CHECK(antipode(m("1")) == -m("1"));
  CHECK(antipode(m("11")) == -m("11"));
  // Δ(M_21) = 1⊗M_21 + 2 M_1⊗M_1 + M_21⊗1, so S(M_21) = -M_21 + 2 M_1⋆M_1.
  CHECK(antipode(m("21")) == m("21") + m("12") * Rational(2));
  CHECK_THROWS_AS(antipode(Element::monomial(Basis::Q, pf("1"))), Error);
}

TEST_CASE("antipode axiom against the oracle product up to degree 5") {
  for (unsigned n = 1; n <= 5; ++n) {
    for (const auto& a : oracle::all_pfs(n)) {
      std::map<oracle::Seq, long> left, right;
      for (const auto& [lr, c] : oracle::m_coproduct(a)) {
        for (const auto& [s, cs] : m_antipode(to_pf(lr.first))) {
          for (const auto& [w, k] : oracle::m_product(seq(s), lr.second)) {
            left[w] += c * k * cs.get_num().get_si();
          }
        }
        for (const auto& [s, cs] : m_antipode(to_pf(lr.second))) {
          for (const auto& [w, k] : oracle::m_product(lr.first, seq(s))) {
            right[w] += c * k * cs.get_num().get_si();
          }
        }
      }
      std::erase_if(left, [](const auto& kv) { return kv.second == 0; });
      std::erase_if(right, [](const auto& kv) { return kv.second == 0; });
      CHECK(left.empty());
      CHECK(right.empty());
    }
  }
}

TEST_CASE("tensor product and flip") {
  const TensorElement x = TensorElement::monomial(Basis::M, pf("1"), {});
  const TensorElement y = TensorElement::monomial(Basis::M, pf("1"), pf("1"));
  CHECK(tensor_product(x, y) == TensorElement::monomial(Basis::M, pf("21"), pf("1")) +
                                    TensorElement::monomial(Basis::M, pf("12"), pf("1")));
  CHECK(flip(x) == TensorElement::monomial(Basis::M, {}, pf("1")));
  CHECK(flip(flip(m_coproduct(m("445132")))) == m_coproduct(m("445132")));
}

TEST_CASE("compatibility on small degrees") {
  for (unsigned p = 1; p <= 2; ++p) {
    for (const auto& a : oracle::all_pfs(p)) {
      for (const auto& b : oracle::all_pfs(3 - p)) {
        const Element x = Element::monomial(Basis::M, to_pf(a));
        const Element y = Element::monomial(Basis::M, to_pf(b));
        CHECK(m_coproduct(m_product(x, y)) == tensor_product(m_coproduct(x), m_coproduct(y)));
      }
    }
  }
}

TEST_CASE("basis mismatch") {
  const Element q = Element::monomial(Basis::Q, pf("1"));
  try {
    Element x = m("1");
    x += q;
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kBasisMismatch);
  }
  CHECK_THROWS_AS(m_product(m("1"), q), Error);
}

TEST_CASE("rendering") {
  CHECK(to_string(Element(Basis::M)) == "0");
  CHECK(to_string(Element::one(Basis::M)) == "1");
  CHECK(to_string(m_product(m("1"), m("1"))) == "M[2,1] + M[1,2]");
  CHECK(to_string(m("21") - m("12") * Rational(3, 2)) == "M[2,1] - 3/2·M[1,2]");
  CHECK(to_string(m("1") * Rational(-1)) == "-M[1]");
  CHECK(to_string(m_coproduct(Element::one(Basis::M))) == "1⊗1");
  CHECK(to_string(m_coproduct(m("11"))) == "1⊗M[1,1] + M[1,1]⊗1");
  CHECK(to_string(Element::one(Basis::M) * Rational(3) + m("11")) == "3 + M[1,1]");
}

TEST_CASE("rendering is deterministic and parses back") {
  const Element x = m_product(m("211"), m("353112")) * Rational(2) - m("1") + Element::one(Basis::M);
  const std::string text = to_string(x);
  CHECK(parse_element(text, Basis::M) == x);
  CHECK(to_string(parse_element(text, Basis::M)) == text);
  CHECK(element_from_json(to_json(x)) == x);
  for (unsigned n = 0; n <= 4; ++n) {
    for (const auto& a : oracle::all_pfs(n)) {
      const Element y = antipode(Element::monomial(Basis::M, to_pf(a)));
      CHECK(parse_element(to_string(y), Basis::M) == y);
      CHECK(element_from_json(to_json(y)) == y);
    }
  }
}

TEST_CASE("json form") {
  CHECK(to_json(m("21") - m("12")) ==
        R"({"basis":"M","terms":[{"coeff":"1","pf":[2,1]},{"coeff":"-1","pf":[1,2]}]})");
  CHECK_THROWS_AS(element_from_json("{\"basis\":\"M\"}"), Error);
  CHECK_THROWS_AS(element_from_json(R"({"basis":"M","terms":[{"coeff":"1","pf":[3]}]})"), Error);
}

TEST_CASE("parse errors carry offsets") {
  auto offset = [](const char* text) {
    try {
      parse_element(text, Basis::M);
    } catch (const Error& e) {
      return std::pair{e.code(), e.detail()};
    }
    return std::pair{Errc::kEmptyWord, -1};
  };
  CHECK(offset("M[1] + M[1,x]") == std::pair{Errc::kParseError, 11});
  CHECK(offset("M[1] M[1]") == std::pair{Errc::kParseError, 5});
  CHECK(offset("M[1] + Q[1]").first == Errc::kBasisMismatch);
  CHECK(offset("M[2]").first == Errc::kNotParkingFunction);
  CHECK(offset("").first == Errc::kParseError);
  CHECK(parse_element("2·M[1] - 1/2*M[1]", Basis::M) == m("1") * Rational(3, 2));
  CHECK(parse_basis("q") == Basis::Q);
  CHECK_THROWS_AS(parse_basis("X"), Error);
}
