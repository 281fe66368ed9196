// Copyright 2026 allsmiles authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace allsmiles {

// Frozen generation vocabulary. One entry per surface symbol: organic and
// aromatic atom tokens, bond tokens, digits, parentheses, brackets, bracket
// interior symbols (element symbols, monolithic chirality tokens, H, +) and
// the pad/eos markers. Bracket atoms are sequences of these symbols; '-' and
// ':' double as charge sign and class separator inside brackets.
class Vocabulary {
 public:
  static const Vocabulary& instance();

  int size() const { return static_cast<int>(texts_.size()); }
  const std::string& text(int id) const { return texts_[id]; }
  const std::vector<std::string>& texts() const { return texts_; }

  // -1 when absent.
  int id(std::string_view text) const;

  int pad() const { return 0; }
  int eos() const { return 1; }

  bool is_aliphatic_organic(int id) const;
  bool is_aromatic_organic(int id) const;
  bool is_digit(int id) const;       // '0'..'9'
  int digit_value(int id) const;     // -1 when not a digit
  bool is_bond(int id) const;        // - = # $ : / backslash
  bool is_element_symbol(int id) const;   // valid in bracket symbol position
  bool is_aromatic_symbol(int id) const;  // c n o p s se as
  bool is_chiral(int id) const;      // @, @@, @TH1..@OH30

  int open_paren() const { return open_paren_; }
  int close_paren() const { return close_paren_; }
  int open_bracket() const { return open_bracket_; }
  int close_bracket() const { return close_bracket_; }
  int percent() const { return percent_; }
  int plus() const { return plus_; }
  int minus() const { return minus_; }   // the '-' bond token
  int colon() const { return colon_; }   // the ':' bond token
  int hsymbol() const { return h_; }
  int digit(int value) const { return digit0_ + value; }

 private:
  Vocabulary();

  std::vector<std::string> texts_;
  std::vector<int> flags_;
  std::unordered_map<std::string, int> index_;
  int open_paren_ = -1, close_paren_ = -1, open_bracket_ = -1,
      close_bracket_ = -1, percent_ = -1, plus_ = -1, minus_ = -1,
      colon_ = -1, h_ = -1, digit0_ = -1;
};

}  // namespace allsmiles
