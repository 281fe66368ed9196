// Copyright 2026 allsmiles authors
// SPDX-License-Identifier: Apache-2.0
#include "allsmiles/vocab.hpp"

#include "allsmiles/periodic.hpp"

namespace allsmiles {
namespace {

enum Flag {
  kAliphaticOrganic = 1,
  kAromaticOrganic = 2,
  kDigit = 4,
  kBondTok = 8,
  kElementSymbol = 16,
  kAromaticSymbol = 32,
  kChiral = 64,
};

}  // namespace

Vocabulary::Vocabulary() {
  auto add = [&](const std::string& t, int flags) {
    texts_.push_back(t);
    flags_.push_back(flags);
    int id = static_cast<int>(texts_.size()) - 1;
    if (!t.empty()) index_[t] = id;
    return id;
  };

  add("<pad>", 0);
  add("", 0);  // eos

  for (const char* s : {"B", "C", "N", "O", "S", "P", "F", "Cl", "Br", "I"})
    add(s, kAliphaticOrganic | kElementSymbol);
  for (const char* s : {"b", "c", "n", "o", "s", "p"})
    add(s, s[0] == 'b' ? kAromaticOrganic
                       : (kAromaticOrganic | kAromaticSymbol));
  add("se", kAromaticSymbol);
  add("as", kAromaticSymbol);

  minus_ = add("-", kBondTok);
  add("=", kBondTok);
  add("#", kBondTok);
  add("$", kBondTok);
  colon_ = add(":", kBondTok);
  add("/", kBondTok);
  add("\\", kBondTok);

  digit0_ = static_cast<int>(texts_.size());
  for (char c = '0'; c <= '9'; ++c) add(std::string(1, c), kDigit);

  percent_ = add("%", 0);
  open_paren_ = add("(", 0);
  close_paren_ = add(")", 0);
  open_bracket_ = add("[", 0);
  close_bracket_ = add("]", 0);
  plus_ = add("+", 0);
  h_ = add("H", kElementSymbol);

  add("@", kChiral);
  add("@@", kChiral);
  for (const char* s : {"@TH1", "@TH2", "@AL1", "@AL2", "@SP1", "@SP2", "@SP3"})
    add(s, kChiral);
  for (int i = 1; i <= 30; ++i) add("@TB" + std::to_string(i), kChiral);
  for (int i = 1; i <= 30; ++i) add("@OH" + std::to_string(i), kChiral);

  for (const Element& e : PeriodicTable::bundled().elements()) {
    if (index_.count(e.symbol)) continue;  // organic subset and H already present
    add(e.symbol, kElementSymbol);
  }
}

const Vocabulary& Vocabulary::instance() {
  static Vocabulary v;
  return v;
}

int Vocabulary::id(std::string_view text) const {
  auto it = index_.find(std::string(text));
  return it == index_.end() ? -1 : it->second;
}

bool Vocabulary::is_aliphatic_organic(int id) const {
  return flags_[id] & kAliphaticOrganic;
}
bool Vocabulary::is_aromatic_organic(int id) const {
  return flags_[id] & kAromaticOrganic;
}
bool Vocabulary::is_digit(int id) const { return flags_[id] & kDigit; }
int Vocabulary::digit_value(int id) const {
  return is_digit(id) ? id - digit0_ : -1;
}
bool Vocabulary::is_bond(int id) const { return flags_[id] & kBondTok; }
bool Vocabulary::is_element_symbol(int id) const {
  return flags_[id] & kElementSymbol;
}
bool Vocabulary::is_aromatic_symbol(int id) const {
  return flags_[id] & kAromaticSymbol;
}
bool Vocabulary::is_chiral(int id) const { return flags_[id] & kChiral; }

}  // namespace allsmiles
