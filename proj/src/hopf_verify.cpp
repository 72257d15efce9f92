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

#include "pfsym/hopf_verify.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <map>
#include <memory>
#include <mutex>
#include <set>

#include <json.hpp>

#include "pfsym/error.hpp"

namespace pfsym {

namespace detail {

void check_bound(std::size_t bound) {
  if (bound > kVerifyDegreeCap) {
    throw Error(Errc::kDegreeTooLarge, "verification bound " + std::to_string(bound) +
                                           " exceeds " + std::to_string(kVerifyDegreeCap));
  }
}

}  // namespace detail

namespace {

std::string lower(std::string_view text) {
  std::string out(text);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

const std::vector<Axiom>& all_axioms() {
  static const std::vector<Axiom> kAll = {
      Axiom::kAssoc,  Axiom::kCoassoc,  Axiom::kUnit,     Axiom::kCounit,
      Axiom::kCompat, Axiom::kCocommut, Axiom::kAntipode, Axiom::kGrading,
  };
  return kAll;
}

std::string axiom_name(Axiom a) {
  switch (a) {
    case Axiom::kAssoc: return "assoc";
    case Axiom::kCoassoc: return "coassoc";
    case Axiom::kUnit: return "unit";
    case Axiom::kCounit: return "counit";
    case Axiom::kCompat: return "compat";
    case Axiom::kCocommut: return "cocommut";
    case Axiom::kAntipode: return "antipode";
    case Axiom::kGrading: return "grading";
  }
  return "?";
}

Axiom parse_axiom(std::string_view text) {
  const std::string name = lower(text);
  for (Axiom a : all_axioms()) {
    if (axiom_name(a) == name) return a;
  }
  throw Error(Errc::kParseError, "unknown axiom '" + std::string(text) + "'");
}

std::string to_json(const AxiomReport& r) {
  nlohmann::ordered_json j;
  j["instance"] = r.instance;
  j["check"] = r.check;
  j["bound"] = r.bound;
  j["pass"] = r.pass;
  j["checked"] = r.checked;
  if (r.counterexample) {
    j["counterexample"] = {{"labels", r.counterexample->labels},
                           {"lhs", r.counterexample->lhs},
                           {"rhs", r.counterexample->rhs}};
  } else {
    j["counterexample"] = nullptr;
  }
  j["details"] = r.details;
  return j.dump();
}

std::string summary_table(const std::vector<AxiomReport>& reports) {
  std::size_t wi = 8, wc = 5;
  for (const auto& r : reports) {
    wi = std::max(wi, r.instance.size());
    wc = std::max(wc, r.check.size());
  }
  auto pad = [](std::string s, std::size_t w) {
    s.resize(std::max(w, s.size()), ' ');
    return s;
  };
  std::string out = pad("instance", wi) + "  " + pad("check", wc) + "  bound  result  cases\n";
  for (const auto& r : reports) {
    out += pad(r.instance, wi) + "  " + pad(r.check, wc) + "  " +
           pad(std::to_string(r.bound), 5) + "  " + pad(r.pass ? "pass" : "FAIL", 6) + "  " +
           std::to_string(r.checked) + "\n";
    if (r.counterexample) {
      std::string labels;
      for (const auto& l : r.counterexample->labels) labels += (labels.empty() ? "" : ", ") + l;
      out += "  counterexample: (" + labels + ")\n";
      out += "    lhs: " + r.counterexample->lhs + "\n";
      out += "    rhs: " + r.counterexample->rhs + "\n";
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Instances

std::string instance_name(Instance i) {
  switch (i) {
    case Instance::kPfsymM: return "pfsym-m";
    case Instance::kPfsymQ: return "pfsym-q";
    case Instance::kNcsym: return "ncsym";
    case Instance::kKN: return "kn";
    case Instance::kKD: return "kd";
    case Instance::kKS: return "ks";
    case Instance::kKC: return "kc";
  }
  return "?";
}

Instance parse_instance(std::string_view text) {
  const std::string name = lower(text);
  for (Instance i : {Instance::kPfsymM, Instance::kPfsymQ, Instance::kNcsym, Instance::kKN,
                     Instance::kKD, Instance::kKS, Instance::kKC}) {
    if (instance_name(i) == name) return i;
  }
  throw Error(Errc::kParseError, "unknown instance '" + std::string(text) + "'");
}

namespace {

// Products are requested many times over during the checks.
template <class Label>
std::function<LinComb<Label>(const Label&, const Label&)> memoized(
    std::function<LinComb<Label>(const Label&, const Label&)> f) {
  struct Cache {
    std::mutex mutex;
    std::map<std::pair<Label, Label>, LinComb<Label>> values;
  };
  auto cache = std::make_shared<Cache>();
  return [f = std::move(f), cache](const Label& a, const Label& b) {
    {
      std::lock_guard lock(cache->mutex);
      if (auto it = cache->values.find({a, b}); it != cache->values.end()) return it->second;
    }
    LinComb<Label> value = f(a, b);
    std::lock_guard lock(cache->mutex);
    return cache->values.try_emplace({a, b}, std::move(value)).first->second;
  };
}

template <class Label>
std::function<TensorComb<Label>(const Label&)> memoized(
    std::function<TensorComb<Label>(const Label&)> f) {
  struct Cache {
    std::mutex mutex;
    std::map<Label, TensorComb<Label>> values;
  };
  auto cache = std::make_shared<Cache>();
  return [f = std::move(f), cache](const Label& a) {
    {
      std::lock_guard lock(cache->mutex);
      if (auto it = cache->values.find(a); it != cache->values.end()) return it->second;
    }
    TensorComb<Label> value = f(a);
    std::lock_guard lock(cache->mutex);
    return cache->values.try_emplace(a, std::move(value)).first->second;
  };
}

AlgebraHandle<ParkingFunction> pf_handle(std::string name, Basis basis, Family family) {
  AlgebraHandle<ParkingFunction> h;
  h.name = std::move(name);
  h.basis = [family](std::size_t n) { return enumerate_family(family, n, n); };
  if (basis == Basis::M) {
    h.product = memoized<ParkingFunction>(
        [](const ParkingFunction& a, const ParkingFunction& b) { return m_product(a, b); });
    h.coproduct = memoized<ParkingFunction>([](const ParkingFunction& a) { return m_coproduct(a); });
  } else {
    h.product = [](const ParkingFunction& a, const ParkingFunction& b) {
      return PfComb(slash_product(a, b));
    };
    h.coproduct =
        memoized<ParkingFunction>([](const ParkingFunction& a) { return q_coproduct(a).terms(); });
  }
  h.counit = [](const ParkingFunction& a) { return Rational(a.empty() ? 1 : 0); };
  h.degree = [](const ParkingFunction& a) { return a.size(); };
  h.render = [basis](const ParkingFunction& a) { return to_string(basis, a); };
  return h;
}

}  // namespace

AlgebraHandle<ParkingFunction> pfsym_m_handle() {
  return pf_handle("pfsym-m", Basis::M, Family::kP);
}

AlgebraHandle<ParkingFunction> pfsym_q_handle() {
  return pf_handle("pfsym-q", Basis::Q, Family::kP);
}

AlgebraHandle<ParkingFunction> subalgebra_handle(Instance which) {
  switch (which) {
    case Instance::kKN: return pf_handle("kn", Basis::M, Family::kN);
    case Instance::kKD: return pf_handle("kd", Basis::M, Family::kD);
    case Instance::kKS: return pf_handle("ks", Basis::M, Family::kS);
    case Instance::kKC: return pf_handle("kc", Basis::Q, Family::kC);
    case Instance::kPfsymM: return pfsym_m_handle();
    case Instance::kPfsymQ: return pfsym_q_handle();
    case Instance::kNcsym: break;
  }
  throw Error(Errc::kParseError, "ncsym is not a parking function instance");
}

AlgebraHandle<SetPartition> ncsym_handle() {
  AlgebraHandle<SetPartition> h;
  h.name = "ncsym";
  h.basis = [](std::size_t n) { return set_partitions(n); };
  h.product = memoized<SetPartition>(
      [](const SetPartition& a, const SetPartition& b) { return ncsym_product(a, b); });
  h.coproduct = memoized<SetPartition>([](const SetPartition& a) { return ncsym_coproduct(a); });
  h.counit = [](const SetPartition& a) { return Rational(a.empty() ? 1 : 0); };
  h.degree = [](const SetPartition& a) { return a.size(); };
  h.render = [](const SetPartition& a) { return render_label(a); };
  return h;
}

AlgebraHandle<ParkingFunction> corrupted_pfsym_m_handle() {
  const ParkingFunction one{1};
  return corrupt_product(pfsym_m_handle(), one, one, ParkingFunction{1, 2}, -1);
}

namespace {

template <class Label>
std::vector<AxiomReport> run_axioms(const AlgebraHandle<Label>& h, std::size_t bound,
                                    const std::vector<Axiom>& axioms) {
  std::vector<AxiomReport> out;
  for (Axiom a : axioms) out.push_back(check_axiom(h, a, bound));
  return out;
}

// Drops the first term of x ⋆ x for the first degree-one basis element x.
template <class Label>
AlgebraHandle<Label> standard_mutant(AlgebraHandle<Label> h) {
  const Label x = h.basis(1).front();
  const auto xx = h.product(x, x);
  const auto& [term, c] = *xx.begin();
  return corrupt_product(std::move(h), x, x, term, -c);
}

}  // namespace

std::vector<AxiomReport> verify_instance(Instance which, std::size_t bound,
                                         const std::vector<Axiom>& axioms, bool corrupt) {
  detail::check_bound(bound);
  if (which == Instance::kNcsym) {
    auto h = ncsym_handle();
    return run_axioms(corrupt ? standard_mutant(std::move(h)) : h, bound, axioms);
  }
  auto h = subalgebra_handle(which);
  return run_axioms(corrupt ? standard_mutant(std::move(h)) : h, bound, axioms);
}

// ---------------------------------------------------------------------------
// Free generation

namespace {

struct FreeSpec {
  const char* name;
  Basis basis;
  Family generators;
  Family ambient;
};

FreeSpec free_spec(FreeGenerators g) {
  switch (g) {
    case FreeGenerators::kMUnsplitable: return {"m-unsplitable", Basis::M, Family::kUP, Family::kP};
    case FreeGenerators::kQAtomic: return {"q-atomic", Basis::Q, Family::kAP, Family::kP};
    case FreeGenerators::kMUnsplitableN:
      return {"m-unsplitable-n", Basis::M, Family::kUN, Family::kN};
    case FreeGenerators::kQAtomicN: return {"q-atomic-n", Basis::Q, Family::kAN, Family::kN};
    case FreeGenerators::kMUnsplitableD:
      return {"m-unsplitable-d", Basis::M, Family::kUD, Family::kD};
    case FreeGenerators::kQAtomicD: return {"q-atomic-d", Basis::Q, Family::kAD, Family::kD};
    case FreeGenerators::kMUnsplitableS:
      return {"m-unsplitable-s", Basis::M, Family::kUS, Family::kS};
    case FreeGenerators::kQAtomicS: return {"q-atomic-s", Basis::Q, Family::kAS, Family::kS};
    case FreeGenerators::kQAtomicC: return {"q-atomic-c", Basis::Q, Family::kAC, Family::kC};
  }
  return {"?", Basis::M, Family::kP, Family::kP};
}

constexpr FreeGenerators kAllFree[] = {
    FreeGenerators::kMUnsplitable,  FreeGenerators::kQAtomic,   FreeGenerators::kMUnsplitableN,
    FreeGenerators::kQAtomicN,      FreeGenerators::kMUnsplitableD, FreeGenerators::kQAtomicD,
    FreeGenerators::kMUnsplitableS, FreeGenerators::kQAtomicS,  FreeGenerators::kQAtomicC,
};

void for_each_sequence(std::size_t n, const std::vector<std::vector<ParkingFunction>>& gens,
                       std::vector<ParkingFunction>& seq,
                       const std::function<bool(const std::vector<ParkingFunction>&)>& visit,
                       bool& stop) {
  if (stop) return;
  if (n == 0) {
    if (!seq.empty() && !visit(seq)) stop = true;
    return;
  }
  for (std::size_t k = 1; k <= n && !stop; ++k) {
    for (const ParkingFunction& g : gens[k]) {
      seq.push_back(g);
      for_each_sequence(n - k, gens, seq, visit, stop);
      seq.pop_back();
      if (stop) return;
    }
  }
}

std::string join_labels(Basis basis, const std::vector<ParkingFunction>& seq) {
  std::string out;
  for (const auto& g : seq) out += (out.empty() ? "" : " ⋆ ") + to_string(basis, g);
  return out;
}

}  // namespace

std::string free_generators_name(FreeGenerators g) { return free_spec(g).name; }

FreeGenerators parse_free_generators(std::string_view text) {
  const std::string name = lower(text);
  for (FreeGenerators g : kAllFree) {
    if (free_generators_name(g) == name) return g;
  }
  throw Error(Errc::kParseError, "unknown generator set '" + std::string(text) + "'");
}

AxiomReport check_free_generation(FreeGenerators which, std::size_t bound) {
  detail::check_bound(bound);
  const FreeSpec spec = free_spec(which);
  AxiomReport r{"pfsym", std::string("free(") + spec.name + ")", bound, true, 0, std::nullopt, {}};
  auto fail = [&](std::vector<std::string> labels, std::string lhs, std::string rhs) {
    r.pass = false;
    r.counterexample = Counterexample{std::move(labels), std::move(lhs), std::move(rhs)};
  };

  std::vector<std::vector<ParkingFunction>> gens(bound + 1);
  std::string counts;
  for (std::size_t n = 1; n <= bound; ++n) {
    gens[n] = enumerate_family(spec.generators, n, n);
    counts += (counts.empty() ? "" : ",") + std::to_string(gens[n].size());
  }

  for (std::size_t n = 1; n <= bound && r.pass; ++n) {
    const auto ambient = enumerate_family(spec.ambient, n, n);
    std::set<ParkingFunction> remaining(ambient.begin(), ambient.end());
    std::vector<ParkingFunction> seq;
    bool stop = false;
    for_each_sequence(n, gens, seq, [&](const std::vector<ParkingFunction>& s) {
      ++r.checked;
      ParkingFunction lead;
      for (const auto& g : s) {
        lead = spec.basis == Basis::M ? split_product(lead, g) : slash_product(lead, g);
      }
      const std::string product_text = join_labels(spec.basis, s);
      if (remaining.erase(lead) == 0) {
        fail({product_text}, to_string(spec.basis, lead),
             "label repeated or outside " + family_name(spec.ambient));
        return false;
      }
      const Factorization f =
          spec.basis == Basis::M ? split_factorization(lead) : slash_factorization(lead);
      if (f.factors != s) {
        fail({product_text}, to_string(f), "factorization differs from the generator sequence");
        return false;
      }
      if (spec.basis == Basis::M) {
        Element x = Element::one(Basis::M);
        for (const auto& g : s) x = m_product(x, Element::monomial(Basis::M, g));
        bool ok = x.coeff(lead) == 1;
        for (const auto& [b, c] : x) {
          ok = ok && (b == lead || total_order_less(lead, b)) && in_family(b, spec.ambient);
        }
        if (!ok) {
          fail({product_text}, to_string(x), "M[" + to_string(lead) + "] + later terms");
          return false;
        }
      } else {
        Element x = Element::one(Basis::M);
        for (const auto& g : s) x = m_product(x, q_to_m(g, bound));
        Element q = convert(x, Basis::Q, bound);
        if (q != Element::monomial(Basis::Q, lead)) {
          fail({product_text}, to_string(q), to_string(Basis::Q, lead));
          return false;
        }
      }
      return true;
    }, stop);
    if (r.pass && !remaining.empty()) {
      fail({"degree " + std::to_string(n)}, to_string(*remaining.begin()),
           "not a product of generators");
    }
  }
  r.details = "generators per degree: " + counts;
  return r;
}

// ---------------------------------------------------------------------------
// ω

AxiomReport check_omega_morphism(std::size_t bound) {
  detail::check_bound(bound);
  AxiomReport r{"ncsym→pfsym-m", "omega-morphism", bound, true, 0, std::nullopt, {}};
  auto fail = [&](std::vector<std::string> labels, std::string lhs, std::string rhs) {
    r.pass = false;
    r.counterexample = Counterexample{std::move(labels), std::move(lhs), std::move(rhs)};
  };
  std::vector<std::vector<SetPartition>> parts(bound + 1);
  for (std::size_t n = 0; n <= bound; ++n) parts[n] = set_partitions(n);

  for (std::size_t n = 0; n <= bound && r.pass; ++n) {
    std::set<ParkingFunction> image;
    for (const auto& pi : parts[n]) {
      ParkingFunction w = omega(pi);
      if (!in_family(w, Family::kPiTilde) || !image.insert(w).second) {
        fail({to_string(pi)}, to_string(w), "a new element of Π̃");
        break;
      }
    }
    if (r.pass && image.size() != enumerate_family(Family::kPiTilde, n, n).size()) {
      fail({"degree " + std::to_string(n)}, std::to_string(image.size()) + " images",
           "|Π̃_n| images");
    }
  }
  for (std::size_t i = 0; i <= bound && r.pass; ++i) {
    for (const auto& pi : parts[i]) {
      if (!r.pass) break;
      ++r.checked;
      const PfTensorComb lhs = omega_bar(ncsym_coproduct(pi));
      const PfTensorComb rhs = m_coproduct(omega(pi));
      if (lhs != rhs) {
        fail({to_string(pi)}, to_string(TensorElement(Basis::M, lhs)),
             to_string(TensorElement(Basis::M, rhs)));
        break;
      }
      for (std::size_t j = 0; i + j <= bound && r.pass; ++j) {
        for (const auto& sigma : parts[j]) {
          ++r.checked;
          const PfComb l = omega_bar(ncsym_product(pi, sigma));
          const PfComb p = m_product(omega(pi), omega(sigma));
          if (l != p) {
            fail({to_string(pi), to_string(sigma)}, to_string(Element(Basis::M, l)),
                 to_string(Element(Basis::M, p)));
            break;
          }
        }
      }
    }
  }
  if (r.pass) r.details = std::to_string(r.checked) + " cases";
  return r;
}

AxiomReport check_omega_order(std::size_t bound) {
  detail::check_bound(bound);
  AxiomReport r{"ncsym→pfsym-m", "omega-order", bound, true, 0, std::nullopt, {}};
  for (std::size_t n = 1; n <= bound && r.pass; ++n) {
    const auto parts = set_partitions(n);
    for (const auto& pi : parts) {
      if (!r.pass) break;
      for (const auto& sigma : parts) {
        ++r.checked;
        const bool a = partition_covers(pi, sigma);
        const bool b = covers(omega(pi), omega(sigma));
        if (a != b) {
          r.pass = false;
          r.counterexample = Counterexample{
              {to_string(pi), to_string(sigma)},
              std::string("partition cover: ") + (a ? "yes" : "no"),
              std::string("cover of images: ") + (b ? "yes" : "no")};
          break;
        }
      }
    }
  }
  if (r.pass) r.details = std::to_string(r.checked) + " pairs";
  return r;
}

}  // namespace pfsym
