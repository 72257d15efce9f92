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

#include "pfsym/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include <json.hpp>

#include "pfsym/antipode.hpp"
#include "pfsym/bases.hpp"
#include "pfsym/error.hpp"
#include "pfsym/matching.hpp"

namespace pfsym {

std::string to_string(const Rational& q) { return q.get_str(); }

bool is_integral(const Rational& q) { return q.get_den() == 1; }

char basis_letter(Basis b) noexcept {
  switch (b) {
    case Basis::M: return 'M';
    case Basis::Q: return 'Q';
    case Basis::R: return 'R';
  }
  return '?';
}

Basis parse_basis(std::string_view text) {
  if (text.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(text[0]))) {
      case 'M': return Basis::M;
      case 'Q': return Basis::Q;
      case 'R': return Basis::R;
    }
  }
  throw Error(Errc::kParseError, "unknown basis '" + std::string(text) + "'");
}

namespace {

void require_same(Basis a, Basis b) {
  if (a != b) {
    throw Error(Errc::kBasisMismatch, std::string("basis mismatch: ") +
                                          basis_letter(a) + " vs " + basis_letter(b));
  }
}

void require_m(Basis a) { require_same(Basis::M, a); }

}  // namespace

Element& Element::operator+=(const Element& rhs) {
  require_same(basis_, rhs.basis_);
  terms_ += rhs.terms_;
  return *this;
}

Element& Element::operator-=(const Element& rhs) {
  require_same(basis_, rhs.basis_);
  terms_ -= rhs.terms_;
  return *this;
}

TensorElement& TensorElement::operator+=(const TensorElement& rhs) {
  require_same(basis_, rhs.basis_);
  terms_ += rhs.terms_;
  return *this;
}

// ---------------------------------------------------------------------------
// Structure maps

PfComb m_product(const ParkingFunction& a, const ParkingFunction& b) {
  PfComb out;
  for (ParkingFunction& c : product_expansion(a, b)) out.add(c, 1);
  return out;
}

std::vector<std::pair<Word, Word>> lr_splits(const Word& a) {
  const LRDecomposition f = lr_decompose(a);
  const std::size_t k = f.size();
  std::vector<std::pair<Word, Word>> out;
  out.reserve(std::size_t{1} << k);
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    Word left, right;
    // Parts sit in a in decreasing-minimum order, so walking them from the
    // last part to the first keeps each side a subword of a.
    for (std::size_t i = k; i-- > 0;) {
      (mask >> i & 1 ? left : right).append(f[i]);
    }
    out.emplace_back(std::move(left), std::move(right));
  }
  return out;
}

PfTensorComb m_coproduct(const ParkingFunction& a) {
  PfTensorComb out;
  for (const auto& [left, right] : lr_splits(a)) {
    out.add({parkize(left), parkize(right)}, 1);
  }
  return out;
}

Element m_product(const Element& x, const Element& y) {
  require_m(x.basis());
  require_m(y.basis());
  return Element(Basis::M,
                 bilinear_product(x.terms(), y.terms(),
                                  [](const ParkingFunction& a, const ParkingFunction& b) {
                                    return m_product(a, b);
                                  }));
}

TensorElement m_coproduct(const Element& x) {
  require_m(x.basis());
  return TensorElement(Basis::M,
                       linear_coproduct(x.terms(), [](const ParkingFunction& a) {
                         return m_coproduct(a);
                       }));
}

Rational counit(const Element& x) { return x.coeff(ParkingFunction{}); }

namespace {

GradedAntipode<ParkingFunction>& m_antipode_engine() {
  static GradedAntipode<ParkingFunction> engine(
      [](const ParkingFunction& a, const ParkingFunction& b) { return m_product(a, b); },
      [](const ParkingFunction& a) { return m_coproduct(a); },
      [](const ParkingFunction& a) { return a.size(); });
  return engine;
}

}  // namespace

PfComb m_antipode(const ParkingFunction& a) { return m_antipode_engine()(a); }

Element antipode(const Element& x) {
  require_m(x.basis());
  return Element(Basis::M, m_antipode_engine().apply(x.terms()));
}

TensorElement tensor_product(const TensorElement& x, const TensorElement& y) {
  require_m(x.basis());
  require_m(y.basis());
  return TensorElement(
      Basis::M, pfsym::tensor_product(x.terms(), y.terms(),
                                      [](const ParkingFunction& a, const ParkingFunction& b) {
                                        return m_product(a, b);
                                      }));
}

TensorElement flip(const TensorElement& x) {
  PfTensorComb out;
  for (const auto& [lr, c] : x) out.add({lr.second, lr.first}, c);
  return TensorElement(x.basis(), std::move(out));
}

// ---------------------------------------------------------------------------
// Rendering

std::string to_string(Basis basis, const ParkingFunction& a) {
  if (a.empty()) return "1";
  return std::string(1, basis_letter(basis)) + "[" + to_string(a.word()) + "]";
}

namespace {

// Display order: by degree, then decreasing ≺*_lex, so that the leading term
// of a triangular expansion comes first.
struct DisplayKey {
  std::size_t degree;
  LRDecomposition f;
};

bool display_less(const DisplayKey& x, const DisplayKey& y) {
  if (x.degree != y.degree) return x.degree < y.degree;
  return lex_star_less(y.f, x.f);
}

DisplayKey display_key(const ParkingFunction& a) { return {a.size(), lr_decompose(a)}; }

template <class Iter>
std::vector<Iter> display_sorted(Iter first, Iter last,
                                 std::vector<ParkingFunction> (*labels)(const Iter&)) {
  std::vector<Iter> items;
  std::vector<std::vector<DisplayKey>> keys;
  for (Iter it = first; it != last; ++it) {
    items.push_back(it);
    std::vector<DisplayKey> k;
    for (const auto& a : labels(it)) k.push_back(display_key(a));
    keys.push_back(std::move(k));
  }
  std::vector<std::size_t> order(items.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return std::lexicographical_compare(keys[i].begin(), keys[i].end(), keys[j].begin(),
                                        keys[j].end(), display_less);
  });
  std::vector<Iter> out;
  out.reserve(order.size());
  for (std::size_t i : order) out.push_back(items[i]);
  return out;
}

std::vector<PfComb::const_iterator> display_terms(const Element& x) {
  return display_sorted<PfComb::const_iterator>(
      x.begin(), x.end(), [](const PfComb::const_iterator& it) {
        return std::vector<ParkingFunction>{it->first};
      });
}

std::vector<PfTensorComb::const_iterator> display_terms(const TensorElement& x) {
  return display_sorted<PfTensorComb::const_iterator>(
      x.begin(), x.end(), [](const PfTensorComb::const_iterator& it) {
        return std::vector<ParkingFunction>{it->first.first, it->first.second};
      });
}

}  // namespace

void append_term(std::string& out, const Rational& c, const std::string& body,
                 bool first) {
  const bool negative = c < 0;
  Rational magnitude = abs(c);
  if (first) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  if (body == "1") {
    out += to_string(magnitude);
  } else if (magnitude == 1) {
    out += body;
  } else {
    out += to_string(magnitude) + "·" + body;
  }
}

std::string to_string(const Element& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it : display_terms(x)) {
    const auto& [a, c] = *it;
    append_term(out, c, to_string(x.basis(), a), first);
    first = false;
  }
  return out;
}

std::string to_string(const TensorElement& x) {
  if (x.size() == 0) return "0";
  std::string out;
  bool first = true;
  for (auto it : display_terms(x)) {
    const auto& [lr, c] = *it;
    std::string body = to_string(x.basis(), lr.first) + "⊗" + to_string(x.basis(), lr.second);
    append_term(out, c, body, first);
    first = false;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Element& x) { return os << to_string(x); }
std::ostream& operator<<(std::ostream& os, const TensorElement& x) {
  return os << to_string(x);
}

std::string to_json(const Element& x) {
  nlohmann::ordered_json j;
  j["basis"] = std::string(1, basis_letter(x.basis()));
  j["terms"] = nlohmann::ordered_json::array();
  for (auto it : display_terms(x)) {
    const auto& [a, c] = *it;
    nlohmann::ordered_json t;
    t["coeff"] = to_string(c);
    t["pf"] = std::vector<Letter>(a.word().begin(), a.word().end());
    j["terms"].push_back(std::move(t));
  }
  return j.dump();
}

std::string to_json(const TensorElement& x) {
  nlohmann::ordered_json j;
  j["basis"] = std::string(1, basis_letter(x.basis()));
  j["terms"] = nlohmann::ordered_json::array();
  for (auto it : display_terms(x)) {
    const auto& [lr, c] = *it;
    nlohmann::ordered_json t;
    t["coeff"] = to_string(c);
    t["pf_left"] = std::vector<Letter>(lr.first.word().begin(), lr.first.word().end());
    t["pf_right"] = std::vector<Letter>(lr.second.word().begin(), lr.second.word().end());
    j["terms"].push_back(std::move(t));
  }
  return j.dump();
}

Element element_from_json(std::string_view text) {
  try {
    auto j = nlohmann::json::parse(text);
    Element out(parse_basis(j.at("basis").get<std::string>()));
    for (const auto& t : j.at("terms")) {
      Rational c(t.at("coeff").get<std::string>());
      c.canonicalize();
      ParkingFunction a(Word(t.at("pf").get<std::vector<Letter>>()));
      out += Element::monomial(out.basis(), a, c);
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::kParseError, std::string("bad element JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw Error(Errc::kParseError, std::string("bad coefficient: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Parsing the rendered form

namespace {

class ElementParser {
 public:
  ElementParser(std::string_view text, Basis basis) : text_(text), basis_(basis) {}

  Element parse() {
    Element out(basis_);
    skip_space();
    if (at_end()) fail("empty element");
    if (text_.substr(pos_) == "0") return out;
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      out += term() * Rational(sign);
      first = false;
      skip_space();
    }
    return out;
  }

 private:
  Element term() {
    Rational c = 1;
    bool have_number = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      c = number();
      have_number = true;
      skip_space();
      if (consume("·") || consume("*")) {
        skip_space();
      } else {
        return Element::one(basis_) * c;
      }
    }
    if (!std::isalpha(static_cast<unsigned char>(peek()))) {
      fail(have_number ? "expected a basis label after '·'" : "expected a term");
    }
    std::size_t label_at = pos_;
    Basis b = parse_basis(text_.substr(pos_, 1));
    ++pos_;
    if (b != basis_) {
      throw Error(Errc::kBasisMismatch,
                  std::string("term in basis ") + basis_letter(b) + ", expected " +
                      basis_letter(basis_),
                  static_cast<int>(label_at));
    }
    if (!consume("[")) fail("expected '['");
    std::size_t close = text_.find(']', pos_);
    if (close == std::string_view::npos) fail("missing ']'");
    std::size_t word_at = pos_;
    ParkingFunction a;
    try {
      a = parse_parking_function(text_.substr(pos_, close - pos_));
    } catch (const Error& e) {
      if (e.code() == Errc::kParseError) {
        throw Error(Errc::kParseError, e.what(),
                    static_cast<int>(word_at) + e.detail());
      }
      throw;
    }
    pos_ = close + 1;
    return Element::monomial(basis_, a, c);
  }

  Rational number() {
    std::size_t start = pos_;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) {
      ++pos_;
    }
    try {
      Rational q(std::string(text_.substr(start, pos_ - start)));
      q.canonicalize();
      return q;
    } catch (const std::invalid_argument&) {
      pos_ = start;
      fail("bad coefficient");
    }
  }

  bool consume(std::string_view token) {
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::kParseError,
                "cannot parse element '" + std::string(text_) + "' at offset " +
                    std::to_string(pos_) + ": " + why,
                static_cast<int>(pos_));
  }

  std::string_view text_;
  Basis basis_;
  std::size_t pos_ = 0;
};

}  // namespace

Element parse_element(std::string_view text, Basis basis) {
  return ElementParser(text, basis).parse();
}

}  // namespace pfsym
