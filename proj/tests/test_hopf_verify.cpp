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
#include "pfsym/error.hpp"
#include "pfsym/hopf_verify.hpp"
#include "support.hpp"

using namespace pfsym;
using testing::pf;

namespace {

template <class Label>
bool caught(const AlgebraHandle<Label>& h, std::initializer_list<Axiom> axioms, std::size_t bound) {
  for (Axiom a : axioms) {
    const AxiomReport r = check_axiom(h, a, bound);
    if (!r.pass) {
      CHECK(r.counterexample.has_value());
      return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("axiom names round-trip") {
  for (Axiom a : all_axioms()) CHECK(parse_axiom(axiom_name(a)) == a);
  CHECK(all_axioms().size() == 8);
  CHECK_THROWS_AS(parse_axiom("commut"), Error);
  for (Instance i : {Instance::kPfsymM, Instance::kPfsymQ, Instance::kNcsym, Instance::kKN,
                     Instance::kKD, Instance::kKS, Instance::kKC}) {
    CHECK(parse_instance(instance_name(i)) == i);
  }
  CHECK(parse_instance("pfsym-m") == Instance::kPfsymM);
  CHECK(parse_free_generators("q-atomic-c") == FreeGenerators::kQAtomicC);
}

TEST_CASE("PFSym in the M basis satisfies every axiom") {
  const auto h = pfsym_m_handle();
  for (Axiom a : all_axioms()) {
    const AxiomReport r = check_axiom(h, a, 4);
    CHECK_MESSAGE(r.pass, axiom_name(a));
    CHECK(r.checked > 0);
    CHECK_FALSE(r.counterexample.has_value());
  }
  CHECK(check_axiom(h, Axiom::kCompat, 5).pass);
  CHECK(check_axiom(h, Axiom::kCocommut, 5).pass);
}

TEST_CASE("the other instances satisfy every axiom") {
  for (Instance i : {Instance::kPfsymQ, Instance::kNcsym, Instance::kKN, Instance::kKD,
                     Instance::kKS, Instance::kKC}) {
    for (const AxiomReport& r : verify_instance(i, 3, all_axioms(), false)) {
      CHECK_MESSAGE(r.pass, (r.instance + " " + r.check));
    }
  }
  const auto n = ncsym_handle();
  for (Axiom a : all_axioms()) CHECK_MESSAGE(check_axiom(n, a, 4).pass, axiom_name(a));
}

TEST_CASE("the corrupted instance fails associativity with a counterexample") {
  const AxiomReport r = check_axiom(corrupted_pfsym_m_handle(), Axiom::kAssoc, 4);
  CHECK_FALSE(r.pass);
  REQUIRE(r.counterexample.has_value());
  CHECK(r.counterexample->labels.size() == 3);
  CHECK(r.counterexample->lhs != r.counterexample->rhs);
  const auto reports = verify_instance(Instance::kPfsymM, 4, {Axiom::kAssoc}, true);
  REQUIRE(reports.size() == 1);
  CHECK_FALSE(reports[0].pass);
}

TEST_CASE("every single product constant change in low degree is caught") {
  const auto h = pfsym_m_handle();
  std::size_t tried = 0;
  for (std::size_t i = 0; i <= 2; ++i) {
    for (std::size_t j = 0; i + j <= 2; ++j) {
      for (const auto& a : h.basis(i)) {
        for (const auto& b : h.basis(j)) {
          for (const auto& c : h.basis(i + j)) {
            for (int delta : {-1, 1}) {
              const auto bad = corrupt_product(h, a, b, c, delta);
              CHECK_MESSAGE(caught(bad, {Axiom::kAssoc, Axiom::kCompat, Axiom::kCounit}, 4),
                            (h.render(a) + " * " + h.render(b) + " -> " + h.render(c)));
              ++tried;
            }
          }
        }
      }
    }
  }
  CHECK(tried > 0);
}

TEST_CASE("every single coproduct constant change in low degree is caught") {
  const auto h = pfsym_m_handle();
  for (std::size_t n = 0; n <= 2; ++n) {
    for (const auto& a : h.basis(n)) {
      for (std::size_t i = 0; i <= n; ++i) {
        for (const auto& l : h.basis(i)) {
          for (const auto& r : h.basis(n - i)) {
            for (int delta : {-1, 1}) {
              const auto bad = corrupt_coproduct(h, a, l, r, delta);
              CHECK_MESSAGE(caught(bad, {Axiom::kCoassoc, Axiom::kCompat, Axiom::kCounit}, 4),
                            (h.render(a) + " -> " + h.render(l) + "⊗" + h.render(r)));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("closure") {
  const auto m = pfsym_m_handle();
  for (Family f : {Family::kN, Family::kD, Family::kS, Family::kPiTilde}) {
    const AxiomReport r =
        check_closure<ParkingFunction>(m, family_name(f), [f](const ParkingFunction& a) {
          return in_family(a, f);
        }, 4);
    CHECK_MESSAGE(r.pass, family_name(f));
  }
  const auto in_c = [](const ParkingFunction& a) { return in_family(a, Family::kC); };
  CHECK(check_closure<ParkingFunction>(pfsym_q_handle(), "C", in_c, 5).pass);
  const AxiomReport bad = check_closure<ParkingFunction>(m, "C", in_c, 4);
  CHECK_FALSE(bad.pass);
  REQUIRE(bad.counterexample.has_value());
  CHECK(bad.counterexample->labels == std::vector<std::string>{"M[1]", "M[1]"});
}

TEST_CASE("free generation") {
  for (FreeGenerators g :
       {FreeGenerators::kMUnsplitable, FreeGenerators::kQAtomic, FreeGenerators::kMUnsplitableN,
        FreeGenerators::kQAtomicN, FreeGenerators::kMUnsplitableD, FreeGenerators::kQAtomicD,
        FreeGenerators::kMUnsplitableS, FreeGenerators::kQAtomicS, FreeGenerators::kQAtomicC}) {
    const AxiomReport r = check_free_generation(g, 4);
    CHECK_MESSAGE(r.pass, free_generators_name(g));
    CHECK(parse_free_generators(free_generators_name(g)) == g);
  }
  CHECK(check_free_generation(FreeGenerators::kQAtomicC, 5).details ==
        "generators per degree: 1,1,2,5,14");
  CHECK(check_free_generation(FreeGenerators::kQAtomic, 3).details ==
        "generators per degree: 1,2,11");
}

TEST_CASE("omega checks") {
  CHECK(check_omega_morphism(4).pass);
  CHECK(check_omega_order(4).pass);
}

TEST_CASE("bounds are capped") {
  try {
    check_axiom(pfsym_m_handle(), Axiom::kAssoc, kVerifyDegreeCap + 1);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kDegreeTooLarge);
  }
}

TEST_CASE("reports are deterministic") {
  auto run = [] {
    std::string out;
    for (const auto& r : verify_instance(Instance::kPfsymM, 3, all_axioms(), true)) out += to_json(r) + "\n";
    for (const auto& r : verify_instance(Instance::kNcsym, 3, all_axioms(), false)) out += to_json(r) + "\n";
    return out;
  };
  const std::string first = run();
  CHECK(first == run());
  const auto reports = verify_instance(Instance::kPfsymM, 2, {Axiom::kUnit}, false);
  CHECK(summary_table(reports) ==
        "instance  check  bound  result  cases\n"
        "pfsym-m   unit   2      pass    5\n");
}
