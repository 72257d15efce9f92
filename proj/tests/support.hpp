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

// Conversions between library values and the plain vectors the oracles use.

#ifndef PFSYM_TESTS_SUPPORT_HPP
#define PFSYM_TESTS_SUPPORT_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "pfsym/algebra.hpp"
#include "pfsym/ncsym.hpp"
#include "pfsym/word.hpp"

namespace testing {

inline oracle::Seq seq(const pfsym::Word& w) { return oracle::Seq(w.begin(), w.end()); }
inline oracle::Seq seq(const pfsym::ParkingFunction& a) { return seq(a.word()); }

inline pfsym::Word word(const oracle::Seq& s) {
  return pfsym::Word(std::vector<pfsym::Letter>(s.begin(), s.end()));
}

/// Parking function from the compact or comma text form.
inline pfsym::ParkingFunction pf(const std::string& text) {
  return pfsym::parse_parking_function(text);
}

inline std::map<oracle::Seq, int> as_map(const pfsym::PfComb& x) {
  std::map<oracle::Seq, int> out;
  for (const auto& [a, c] : x) out[seq(a)] = static_cast<int>(c.get_num().get_si());
  return out;
}

inline std::map<std::pair<oracle::Seq, oracle::Seq>, int> as_map(const pfsym::PfTensorComb& x) {
  std::map<std::pair<oracle::Seq, oracle::Seq>, int> out;
  for (const auto& [lr, c] : x) {
    out[{seq(lr.first), seq(lr.second)}] = static_cast<int>(c.get_num().get_si());
  }
  return out;
}

inline std::vector<oracle::Seq> blocks(const pfsym::SetPartition& p) {
  std::vector<oracle::Seq> out;
  for (const auto& b : p) out.emplace_back(b.begin(), b.end());
  return out;
}

inline pfsym::SetPartition partition(const std::vector<oracle::Seq>& bs) {
  std::vector<pfsym::SetPartition::Block> out;
  for (const auto& b : bs) out.emplace_back(b.begin(), b.end());
  return pfsym::SetPartition(std::move(out));
}

}  // namespace testing

#endif  // PFSYM_TESTS_SUPPORT_HPP
