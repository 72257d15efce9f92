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

#include "pfsym/cli.hpp"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pfsym/algebra.hpp"
#include "pfsym/bases.hpp"
#include "pfsym/error.hpp"
#include "pfsym/hopf_verify.hpp"
#include "pfsym/ncsym.hpp"

namespace pfsym {

namespace {

enum class Format { kText, kStructured, kDot };

struct Config {
  std::size_t max_degree = 6;
  std::string format = "text";
  std::string instance;

  Format fmt() const {
    if (format == "structured" || format == "json") return Format::kStructured;
    if (format == "dot") return Format::kDot;
    return Format::kText;
  }
};

struct Args {
  std::string basis = "M";
  std::string from = "M";
  std::string to = "M";
  std::vector<std::string> operands;
  bool split = false;
  bool slash = false;
  std::string family;
  std::size_t n = 0;
  std::size_t bound = 4;
  std::vector<std::string> axioms;
  std::vector<std::string> closures;
  std::vector<std::string> free;
  bool corrupt = false;
};

// A term list like `2·M[1,2] - M[2,1]` if it has brackets, else one label.
Element parse_operand(const std::string& text, Basis basis) {
  if (text.find('[') != std::string::npos) return parse_element(text, basis);
  return Element::monomial(basis, parse_parking_function(text));
}

void check_degree(const Element& x, std::size_t cap) {
  for (const auto& [a, c] : x) {
    if (a.size() > cap) {
      throw Error(Errc::kDegreeTooLarge, "degree " + std::to_string(a.size()) +
                                             " exceeds --max-degree " + std::to_string(cap));
    }
  }
}

nlohmann::ordered_json partition_terms(const PartitionComb& x) {
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [pi, c] : x) {
    terms.push_back({{"coeff", to_string(c)}, {"partition", pi.blocks()}});
  }
  return terms;
}

nlohmann::ordered_json partition_terms(const PartitionTensorComb& x) {
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [lr, c] : x) {
    terms.push_back({{"coeff", to_string(c)},
                     {"partition_left", lr.first.blocks()},
                     {"partition_right", lr.second.blocks()}});
  }
  return terms;
}

bool is_ncsym(const Config& cfg) { return cfg.instance == "ncsym"; }

int cmd_product(const Config& cfg, const Args& args, std::ostream& out) {
  if (is_ncsym(cfg)) {
    PartitionComb x = ncsym_product(parse_set_partition(args.operands[0]),
                                    parse_set_partition(args.operands[1]));
    if (cfg.fmt() == Format::kStructured) {
      out << nlohmann::ordered_json{{"algebra", "ncsym"}, {"terms", partition_terms(x)}}.dump()
          << "\n";
    } else {
      out << to_string(x) << "\n";
    }
    return kExitOk;
  }
  const Basis basis = parse_basis(args.basis);
  Element x = parse_operand(args.operands[0], basis);
  Element y = parse_operand(args.operands[1], basis);
  Element z = product(x, y);
  out << (cfg.fmt() == Format::kStructured ? to_json(z) : to_string(z)) << "\n";
  return kExitOk;
}

int cmd_coproduct(const Config& cfg, const Args& args, std::ostream& out) {
  if (is_ncsym(cfg)) {
    PartitionTensorComb t = ncsym_coproduct(parse_set_partition(args.operands[0]));
    if (cfg.fmt() == Format::kStructured) {
      out << nlohmann::ordered_json{{"algebra", "ncsym"}, {"terms", partition_terms(t)}}.dump()
          << "\n";
    } else {
      out << to_string(t) << "\n";
    }
    return kExitOk;
  }
  const Basis basis = parse_basis(args.basis);
  Element x = parse_operand(args.operands[0], basis);
  if (basis == Basis::R) check_degree(x, cfg.max_degree);
  TensorElement t = coproduct(x, cfg.max_degree);
  out << (cfg.fmt() == Format::kStructured ? to_json(t) : to_string(t)) << "\n";
  return kExitOk;
}

int cmd_convert(const Config& cfg, const Args& args, std::ostream& out) {
  const Basis from = parse_basis(args.from);
  const Basis to = parse_basis(args.to);
  Element x = parse_operand(args.operands[0], from);
  check_degree(x, cfg.max_degree);
  Element y = convert(x, to, cfg.max_degree);
  out << (cfg.fmt() == Format::kStructured ? to_json(y) : to_string(y)) << "\n";
  return kExitOk;
}

int cmd_antipode(const Config& cfg, const Args& args, std::ostream& out) {
  const Basis basis = parse_basis(args.basis);
  Element x = parse_operand(args.operands[0], basis);
  check_degree(x, cfg.max_degree);
  Element y = convert(antipode(convert(x, Basis::M, cfg.max_degree)), basis, cfg.max_degree);
  out << (cfg.fmt() == Format::kStructured ? to_json(y) : to_string(y)) << "\n";
  return kExitOk;
}

int cmd_factor(const Config& cfg, const Args& args, std::ostream& out) {
  if (args.split == args.slash) {
    throw CLI::ValidationError("factor", "exactly one of --split or --slash is required");
  }
  ParkingFunction a = parse_parking_function(args.operands[0]);
  Factorization f = args.split ? split_factorization(a) : slash_factorization(a);
  if (cfg.fmt() == Format::kStructured) {
    auto factors = nlohmann::ordered_json::array();
    for (const auto& g : f.factors) factors.push_back(g.word().letters());
    out << nlohmann::ordered_json{{"kind", args.split ? "split" : "slash"},
                                  {"factors", factors}}
               .dump()
        << "\n";
  } else {
    out << to_string(f) << "\n";
  }
  return kExitOk;
}

int cmd_enumerate(const Config& cfg, const Args& args, std::ostream& out) {
  const Family f = parse_family(args.family);
  auto items = enumerate_family(f, args.n, cfg.max_degree);
  if (cfg.fmt() == Format::kStructured) {
    auto elements = nlohmann::ordered_json::array();
    for (const auto& a : items) elements.push_back(a.word().letters());
    out << nlohmann::ordered_json{{"family", family_name(f)},
                                  {"n", args.n},
                                  {"count", items.size()},
                                  {"elements", elements}}
               .dump()
        << "\n";
  } else {
    for (const auto& a : items) out << to_string(a) << "\n";
    out << "count: " << items.size() << "\n";
  }
  return kExitOk;
}

int cmd_poset(const Config& cfg, const Args& args, std::ostream& out) {
  const Poset& p = poset(args.n, cfg.max_degree);
  if (cfg.fmt() == Format::kStructured) {
    auto elements = nlohmann::ordered_json::array();
    for (const auto& a : p.elements()) elements.push_back(a.word().letters());
    auto covers = nlohmann::ordered_json::array();
    for (auto [lo, hi] : p.cover_pairs()) {
      covers.push_back({p.element(lo).word().letters(), p.element(hi).word().letters()});
    }
    out << nlohmann::ordered_json{{"n", args.n}, {"elements", elements}, {"covers", covers}}
               .dump()
        << "\n";
  } else {
    out << p.to_dot();
  }
  return kExitOk;
}

int cmd_moebius(const Config& cfg, const Args& args, std::ostream& out) {
  ParkingFunction a = parse_parking_function(args.operands[0]);
  ParkingFunction b = parse_parking_function(args.operands[1]);
  if (a.size() != b.size()) {
    throw Error(Errc::kLengthMismatch, "lengths differ: " + to_string(a) + " vs " + to_string(b));
  }
  const Poset& p = poset(a.size(), cfg.max_degree);
  const std::int64_t mu = p.moebius(a, b);
  if (cfg.fmt() == Format::kStructured) {
    out << nlohmann::ordered_json{{"a", a.word().letters()}, {"b", b.word().letters()},
                                  {"moebius", mu}}
               .dump()
        << "\n";
  } else {
    out << mu << "\n";
  }
  return kExitOk;
}

int cmd_verify(const Config& cfg, const Args& args, std::ostream& out) {
  if (args.bound > cfg.max_degree) {
    throw Error(Errc::kDegreeTooLarge, "bound " + std::to_string(args.bound) +
                                           " exceeds --max-degree " +
                                           std::to_string(cfg.max_degree));
  }
  std::vector<Axiom> axioms;
  for (const auto& name : args.axioms) axioms.push_back(parse_axiom(name));
  if (axioms.empty()) axioms = all_axioms();

  std::vector<AxiomReport> reports;
  auto append = [&](std::vector<AxiomReport> more) {
    reports.insert(reports.end(), more.begin(), more.end());
  };
  const bool targeted = !cfg.instance.empty() || args.corrupt || !args.axioms.empty() ||
                        !args.closures.empty() || !args.free.empty();
  if (!targeted) {
    for (Instance i : {Instance::kPfsymM, Instance::kPfsymQ, Instance::kNcsym, Instance::kKN,
                       Instance::kKD, Instance::kKS, Instance::kKC}) {
      append(verify_instance(i, args.bound, axioms, false));
    }
    auto m = pfsym_m_handle();
    for (Family f : {Family::kN, Family::kD, Family::kS, Family::kPiTilde}) {
      reports.push_back(check_closure<ParkingFunction>(
          m, family_name(f), [f](const ParkingFunction& a) { return in_family(a, f); },
          args.bound));
    }
    reports.push_back(check_closure<ParkingFunction>(
        pfsym_q_handle(), "C", [](const ParkingFunction& a) { return in_family(a, Family::kC); },
        args.bound));
    for (FreeGenerators g :
         {FreeGenerators::kMUnsplitable, FreeGenerators::kQAtomic, FreeGenerators::kMUnsplitableN,
          FreeGenerators::kQAtomicN, FreeGenerators::kMUnsplitableD, FreeGenerators::kQAtomicD,
          FreeGenerators::kMUnsplitableS, FreeGenerators::kQAtomicS, FreeGenerators::kQAtomicC}) {
      reports.push_back(check_free_generation(g, args.bound));
    }
    reports.push_back(check_omega_morphism(args.bound));
    reports.push_back(check_omega_order(args.bound));
  } else {
    const Instance which =
        cfg.instance.empty() ? Instance::kPfsymM : parse_instance(cfg.instance);
    if (!args.axioms.empty() || (args.closures.empty() && args.free.empty())) {
      append(verify_instance(which, args.bound, axioms, args.corrupt));
    }
    for (const auto& name : args.closures) {
      if (which == Instance::kNcsym) {
        throw Error(Errc::kParseError, "closure checks apply to parking function instances");
      }
      const Family f = parse_family(name);
      // Without an explicit instance, C is checked in the basis that spans it.
      auto handle = !cfg.instance.empty() ? subalgebra_handle(which)
                    : f == Family::kC     ? pfsym_q_handle()
                                          : pfsym_m_handle();
      reports.push_back(check_closure<ParkingFunction>(
          handle, family_name(f),
          [f](const ParkingFunction& a) { return in_family(a, f); }, args.bound));
    }
    for (const auto& name : args.free) {
      reports.push_back(check_free_generation(parse_free_generators(name), args.bound));
    }
  }

  if (cfg.fmt() == Format::kStructured) {
    for (const auto& r : reports) out << to_json(r) << "\n";
  } else {
    out << summary_table(reports);
  }
  const bool all_pass =
      std::all_of(reports.begin(), reports.end(), [](const AxiomReport& r) { return r.pass; });
  return all_pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the Hopf algebra of parking functions", "pfsym"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  Args a;
  app.add_option("--max-degree", cfg.max_degree, "Largest degree for poset-based operations")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "structured", "json", "dot"}))
      ->capture_default_str();
  auto add_instance = [&](CLI::App* sub, const std::string& help) {
    sub->add_option("--instance", cfg.instance, help)
        ->check(CLI::IsMember({"pfsym-m", "pfsym-q", "ncsym", "kn", "kd", "ks", "kc"}));
  };
  auto add_basis = [&](CLI::App* sub) {
    sub->add_option("-b,--basis", a.basis, "Basis: M, Q or R")->capture_default_str();
  };

  auto* product = app.add_subcommand("product", "Product of two elements");
  add_basis(product);
  add_instance(product, "Use ncsym for set partition operands");
  product->add_option("operands", a.operands, "Two parking functions or term lists")
      ->required()
      ->expected(2);

  auto* coproduct = app.add_subcommand("coproduct", "Coproduct of an element");
  add_basis(coproduct);
  add_instance(coproduct, "Use ncsym for a set partition operand");
  coproduct->add_option("operand", a.operands, "Parking function or term list")
      ->required()
      ->expected(1);

  auto* convert_cmd = app.add_subcommand("convert", "Change of basis");
  convert_cmd->add_option("-f,--from", a.from, "Source basis")->capture_default_str();
  convert_cmd->add_option("-t,--to", a.to, "Target basis")->capture_default_str();
  convert_cmd->add_option("operand", a.operands, "Parking function or term list")
      ->required()
      ->expected(1);

  auto* factor = app.add_subcommand("factor", "Split or slash factorization");
  factor->add_flag("--split", a.split, "Factor into unsplitable parts");
  factor->add_flag("--slash", a.slash, "Factor into atomic parts");
  factor->add_option("operand", a.operands, "Parking function")->required()->expected(1);

  auto* enumerate = app.add_subcommand("enumerate", "List a family in degree n");
  enumerate->add_option("family", a.family, "P, UP, AP, N, D, S, C, AC, AN, UN, AD, UD, AS, US, PI")
      ->required();
  enumerate->add_option("n", a.n, "Degree")->required();

  auto* poset_cmd = app.add_subcommand("poset", "Cover relation of the partial order in degree n");
  poset_cmd->add_option("n", a.n, "Degree")->required();

  auto* verify = app.add_subcommand("verify", "Exhaustive axiom checks");
  add_instance(verify, "Algebra to check; omitted runs the full suite");
  verify->add_option("--axiom", a.axioms, "Axiom to check (repeatable)")
      ->check(CLI::IsMember({"assoc", "coassoc", "unit", "counit", "compat", "cocommut",
                             "antipode", "grading"}));
  verify->add_option("--closure", a.closures, "Family closure to check (repeatable)");
  verify->add_option("--free", a.free, "Free generating set to check (repeatable)");
  verify->add_option("--bound", a.bound, "Total degree bound")->capture_default_str();
  verify->add_flag("--corrupt", a.corrupt, "Check a copy with one product constant altered");

  auto* antipode_cmd = app.add_subcommand("antipode", "Antipode of an element");
  add_basis(antipode_cmd);
  antipode_cmd->add_option("operand", a.operands, "Parking function or term list")
      ->required()
      ->expected(1);

  auto* moebius = app.add_subcommand("moebius", "Möbius function of the partial order");
  moebius->add_option("operands", a.operands, "Two parking functions a <= b")
      ->required()
      ->expected(2);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (product->parsed()) return cmd_product(cfg, a, out);
    if (coproduct->parsed()) return cmd_coproduct(cfg, a, out);
    if (convert_cmd->parsed()) return cmd_convert(cfg, a, out);
    if (factor->parsed()) return cmd_factor(cfg, a, out);
    if (enumerate->parsed()) return cmd_enumerate(cfg, a, out);
    if (poset_cmd->parsed()) return cmd_poset(cfg, a, out);
    if (verify->parsed()) return cmd_verify(cfg, a, out);
    if (antipode_cmd->parsed()) return cmd_antipode(cfg, a, out);
    if (moebius->parsed()) return cmd_moebius(cfg, a, out);
  } catch (const Error& e) {
    err << "error (" << errc_name(e.code()) << "): " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace pfsym
