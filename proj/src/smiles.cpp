// Copyright 2026 allsmiles authors
// SPDX-License-Identifier: Apache-2.0
#include "allsmiles/smiles.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <unordered_set>

#include "allsmiles/error.hpp"
#include "allsmiles/rng.hpp"

namespace allsmiles {
namespace {

const Vocabulary& vocab() { return Vocabulary::instance(); }

BondOrder bond_from_char(char c) {
  switch (c) {
    case '-': return BondOrder::Single;
    case '=': return BondOrder::Double;
    case '#': return BondOrder::Triple;
    case '$': return BondOrder::Quadruple;
    case ':': return BondOrder::Aromatic;
    case '/': return BondOrder::Up;
    case '\\': return BondOrder::Down;
  }
  throw Error(ErrorKind::SyntaxError, "not a bond character");
}

bool is_bond_char(char c) {
  return c == '-' || c == '=' || c == '#' || c == '$' || c == ':' ||
         c == '/' || c == '\\';
}

std::string upcase_element(std::string s) {
  s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

// Longest element or aromatic symbol at s[i..], for bracket interiors.
std::string match_bracket_symbol(const std::string& s, std::size_t i) {
  if (i + 1 < s.size()) {
    std::string two = s.substr(i, 2);
    if (two == "se" || two == "as") return two;
    if (std::isupper(static_cast<unsigned char>(two[0])) &&
        std::islower(static_cast<unsigned char>(two[1])) &&
        PeriodicTable::bundled().contains(two))
      return two;
  }
  std::string one = s.substr(i, 1);
  if (one == "c" || one == "n" || one == "o" || one == "p" || one == "s")
    return one;
  if (std::isupper(static_cast<unsigned char>(one[0])) &&
      PeriodicTable::bundled().contains(one))
    return one;
  return "";
}

// Parses "[...]" starting at `open`; fills the token's atom and vocab ids.
// Returns the index one past ']'.
std::size_t parse_bracket(const std::string& s, std::size_t open, Token& tok) {
  const Vocabulary& v = vocab();
  std::size_t i = open + 1;
  tok.vocab_ids.push_back(v.open_bracket());
  auto need = [&](bool cond, const char* what) {
    if (!cond) throw Error(ErrorKind::SyntaxError, what, static_cast<std::ptrdiff_t>(i));
  };
  need(i < s.size(), "unterminated bracket atom");

  // isotope: up to three digits
  int isotope = 0;
  int iso_digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])) &&
         iso_digits < 3) {
    isotope = isotope * 10 + (s[i] - '0');
    tok.vocab_ids.push_back(v.digit(s[i] - '0'));
    ++i;
    ++iso_digits;
  }
  if (iso_digits > 0) tok.atom.isotope = isotope;

  // symbol (mandatory)
  need(i < s.size(), "expected element symbol");
  std::string sym = match_bracket_symbol(s, i);
  need(!sym.empty(), "expected element symbol");
  tok.vocab_ids.push_back(v.id(sym));
  tok.atom.aromatic = std::islower(static_cast<unsigned char>(sym[0])) != 0;
  tok.atom.element = tok.atom.aromatic ? upcase_element(sym) : sym;
  i += sym.size();

  // chiral
  if (i < s.size() && s[i] == '@') {
    std::string chi = "@";
    ++i;
    if (i < s.size() && s[i] == '@') {
      chi = "@@";
      ++i;
    } else if (i + 1 < s.size()) {
      std::string cls = s.substr(i, 2);
      if (cls == "TH" || cls == "AL" || cls == "SP" || cls == "TB" ||
          cls == "OH") {
        std::size_t j = i + 2;
        int num = 0, digits = 0;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])) &&
               digits < 2) {
          num = num * 10 + (s[j] - '0');
          ++j;
          ++digits;
        }
        std::string candidate = "@" + cls + std::to_string(num);
        if (digits > 0 && v.id(candidate) >= 0) {
          chi = candidate;
          i = j;
        } else if (digits == 2 && v.id("@" + cls + std::string(1, s[i + 2])) >= 0) {
          chi = "@" + cls + std::string(1, s[i + 2]);
          i = i + 3;
        } else {
          need(false, "unknown chirality token");
        }
      }
    }
    tok.atom.chirality = chi;
    tok.vocab_ids.push_back(v.id(chi));
  }

  // hcount
  int hcount = 0;
  if (i < s.size() && s[i] == 'H') {
    tok.vocab_ids.push_back(v.hsymbol());
    ++i;
    hcount = 1;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      hcount = s[i] - '0';
      tok.vocab_ids.push_back(v.digit(hcount));
      ++i;
    }
  }
  tok.atom.explicit_h = hcount;

  // charge
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    int sign = s[i] == '+' ? 1 : -1;
    tok.vocab_ids.push_back(sign > 0 ? v.plus() : v.minus());
    ++i;
    int mag = 1;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      mag = s[i] - '0';
      tok.vocab_ids.push_back(v.digit(mag));
      ++i;
    }
    tok.atom.charge = sign * mag;
  }

  // class
  if (i < s.size() && s[i] == ':') {
    tok.vocab_ids.push_back(v.colon());
    ++i;
    int cls = 0, digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])) &&
           digits < 3) {
      cls = cls * 10 + (s[i] - '0');
      tok.vocab_ids.push_back(v.digit(s[i] - '0'));
      ++i;
      ++digits;
    }
    need(digits > 0, "expected atom class digits");
    tok.atom.atom_class = cls;
  }

  need(i < s.size() && s[i] == ']', "expected ]");
  tok.vocab_ids.push_back(v.close_bracket());
  return i + 1;
}

}  // namespace

std::string TokenStream::detokenize() const {
  std::string out;
  for (const Token& t : tokens)
    if (t.kind != TokenKind::Eos) out += t.text;
  return out;
}

TokenStream tokenize(const std::string& s) {
  const Vocabulary& v = vocab();
  TokenStream ts;
  std::size_t i = 0;
  while (i < s.size()) {
    Token tok;
    tok.position = i;
    char c = s[i];
    if (c == '[') {
      // find the closing bracket first so the error is the specific one
      if (s.find(']', i) == std::string::npos)
        throw Error(ErrorKind::UnterminatedBracket, "no closing ]",
                    static_cast<std::ptrdiff_t>(i));
      tok.kind = TokenKind::BracketAtom;
      std::size_t end = parse_bracket(s, i, tok);
      tok.text = s.substr(i, end - i);
      i = end;
    } else if (c == 'C' && i + 1 < s.size() && s[i + 1] == 'l') {
      tok.kind = TokenKind::OrganicAtom;
      tok.text = "Cl";
      tok.atom.element = "Cl";
      tok.vocab_ids.push_back(v.id("Cl"));
      i += 2;
    } else if (c == 'B' && i + 1 < s.size() && s[i + 1] == 'r') {
      tok.kind = TokenKind::OrganicAtom;
      tok.text = "Br";
      tok.atom.element = "Br";
      tok.vocab_ids.push_back(v.id("Br"));
      i += 2;
    } else if (c == 'B' || c == 'C' || c == 'N' || c == 'O' || c == 'S' ||
               c == 'P' || c == 'F' || c == 'I') {
      tok.kind = TokenKind::OrganicAtom;
      tok.text = std::string(1, c);
      tok.atom.element = tok.text;
      tok.vocab_ids.push_back(v.id(tok.text));
      ++i;
    } else if (c == 'b' || c == 'c' || c == 'n' || c == 'o' || c == 's' ||
               c == 'p') {
      tok.kind = TokenKind::AromaticAtom;
      tok.text = std::string(1, c);
      tok.atom.element = std::string(1, static_cast<char>(std::toupper(c)));
      tok.atom.aromatic = true;
      tok.vocab_ids.push_back(v.id(tok.text));
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      tok.kind = TokenKind::RingDigit;
      tok.text = std::string(1, c);
      tok.ring_slot = c - '0';
      tok.vocab_ids.push_back(v.digit(tok.ring_slot));
      ++i;
    } else if (c == '%') {
      if (i + 2 >= s.size() ||
          !std::isdigit(static_cast<unsigned char>(s[i + 1])) ||
          !std::isdigit(static_cast<unsigned char>(s[i + 2])))
        throw Error(ErrorKind::SyntaxError, "two digits must follow %",
                    static_cast<std::ptrdiff_t>(i));
      tok.kind = TokenKind::RingDigit;
      tok.text = s.substr(i, 3);
      tok.ring_slot = (s[i + 1] - '0') * 10 + (s[i + 2] - '0');
      tok.vocab_ids = {v.percent(), v.digit(s[i + 1] - '0'),
                       v.digit(s[i + 2] - '0')};
      i += 3;
    } else if (is_bond_char(c)) {
      tok.kind = TokenKind::Bond;
      tok.text = std::string(1, c);
      tok.bond = bond_from_char(c);
      tok.vocab_ids.push_back(v.id(tok.text));
      ++i;
    } else if (c == '(') {
      tok.kind = TokenKind::BranchOpen;
      tok.text = "(";
      tok.vocab_ids.push_back(v.open_paren());
      ++i;
    } else if (c == ')') {
      tok.kind = TokenKind::BranchClose;
      tok.text = ")";
      tok.vocab_ids.push_back(v.close_paren());
      ++i;
    } else {
      throw Error(ErrorKind::UnknownCharacter,
                  std::string("unexpected character '") + c + "'",
                  static_cast<std::ptrdiff_t>(i));
    }
    ts.tokens.push_back(std::move(tok));
  }
  Token eos;
  eos.kind = TokenKind::Eos;
  eos.position = s.size();
  eos.vocab_ids.push_back(v.eos());
  ts.tokens.push_back(std::move(eos));

  for (int t = 0; t < static_cast<int>(ts.tokens.size()); ++t) {
    int start = static_cast<int>(ts.vocabulary_ids.size());
    for (int id : ts.tokens[t].vocab_ids) {
      ts.vocabulary_ids.push_back(id);
      ts.id_token.push_back(t);
    }
    ts.token_span.emplace_back(start, static_cast<int>(ts.vocabulary_ids.size()));
  }
  return ts;
}

namespace {

struct PendingRing {
  int atom = -1;
  std::optional<BondOrder> label;
  std::size_t position = 0;
};

enum class ParserState {
  Start,
  AfterAtom,          // ringbond phase of the current branched_atom
  AfterBranches,      // branch phase; ring digits are no longer legal
  PendingBond,        // bond seen after an atom (ring label still possible)
  PendingBondNoRing,  // bond seen after branches or inside a fresh branch
  BranchOpened,       // immediately after '('
};

}  // namespace

ParseResult parse(const std::string& s) {
  ParseResult result;
  result.stream = tokenize(s);
  const TokenStream& ts = result.stream;

  std::vector<Atom> atoms;
  std::vector<Bond> bonds;
  std::array<std::optional<PendingRing>, 100> rings;
  int open_rings = 0;
  std::vector<std::pair<int, int>> branch_stack;  // (parent atom, atoms at open)
  int prev_atom = -1;
  std::optional<BondOrder> pending;
  ParserState state = ParserState::Start;

  auto syntax = [&](const Token& t, const std::string& what) -> void {
    throw Error(ErrorKind::SyntaxError,
                what + " at token '" + t.text + "'",
                static_cast<std::ptrdiff_t>(t.position));
  };

  auto add_atom = [&](const Token& t) {
    atoms.push_back(t.atom);
    int idx = static_cast<int>(atoms.size()) - 1;
    if (prev_atom >= 0) {
      BondOrder order =
          pending ? *pending
                  : (atoms[prev_atom].aromatic && atoms[idx].aromatic
                         ? BondOrder::Aromatic
                         : BondOrder::Single);
      bonds.push_back({prev_atom, idx, order});
    }
    pending.reset();
    prev_atom = idx;
    result.alignment.entries.emplace_back(-1, idx);  // token index patched below
  };

  for (int ti = 0; ti < static_cast<int>(ts.tokens.size()); ++ti) {
    const Token& t = ts.tokens[ti];
    switch (t.kind) {
      case TokenKind::OrganicAtom:
      case TokenKind::AromaticAtom:
      case TokenKind::BracketAtom: {
        if (state == ParserState::AfterAtom ||
            state == ParserState::AfterBranches || state == ParserState::Start ||
            state == ParserState::PendingBond ||
            state == ParserState::PendingBondNoRing ||
            state == ParserState::BranchOpened) {
          add_atom(t);
          result.alignment.entries.back().first = ti;
          state = ParserState::AfterAtom;
        } else {
          syntax(t, "unexpected atom");
        }
        break;
      }
      case TokenKind::Bond: {
        if (state == ParserState::AfterAtom)
          state = ParserState::PendingBond;
        else if (state == ParserState::AfterBranches ||
                 state == ParserState::BranchOpened)
          state = ParserState::PendingBondNoRing;
        else
          syntax(t, "unexpected bond");
        pending = t.bond;
        break;
      }
      case TokenKind::RingDigit: {
        if (state != ParserState::AfterAtom && state != ParserState::PendingBond)
          syntax(t, "ring digit not allowed here");
        int slot = t.ring_slot;
        if (rings[slot]) {
          PendingRing r = *rings[slot];
          if (r.atom == prev_atom) syntax(t, "ring closes onto its own atom");
          BondOrder order;
          if (r.label && pending) {
            if (*r.label != *pending)
              throw Error(ErrorKind::RingBondMismatch,
                          "ring " + std::to_string(slot) +
                              " closed with a different bond label",
                          static_cast<std::ptrdiff_t>(t.position));
            order = *r.label;
          } else if (r.label) {
            order = *r.label;
          } else if (pending) {
            order = *pending;
          } else {
            order = atoms[r.atom].aromatic && atoms[prev_atom].aromatic
                        ? BondOrder::Aromatic
                        : BondOrder::Single;
          }
          bonds.push_back({r.atom, prev_atom, order});
          rings[slot].reset();
          --open_rings;
        } else {
          rings[slot] = PendingRing{prev_atom, pending, t.position};
          ++open_rings;
        }
        pending.reset();
        state = ParserState::AfterAtom;
        break;
      }
      case TokenKind::BranchOpen: {
        if (state != ParserState::AfterAtom && state != ParserState::AfterBranches)
          syntax(t, "unexpected (");
        branch_stack.emplace_back(prev_atom, static_cast<int>(atoms.size()));
        state = ParserState::BranchOpened;
        break;
      }
      case TokenKind::BranchClose: {
        if (branch_stack.empty()) syntax(t, "unmatched )");
        if (state != ParserState::AfterAtom && state != ParserState::AfterBranches)
          syntax(t, "empty or incomplete branch");
        prev_atom = branch_stack.back().first;
        branch_stack.pop_back();
        state = ParserState::AfterBranches;
        break;
      }
      case TokenKind::Eos: {
        if (state != ParserState::AfterAtom && state != ParserState::AfterBranches)
          syntax(t, "incomplete SMILES");
        if (!branch_stack.empty()) syntax(t, "unclosed branch");
        if (open_rings > 0) {
          for (int slot = 0; slot < 100; ++slot)
            if (rings[slot])
              throw Error(ErrorKind::UnclosedRing,
                          "ring " + std::to_string(slot) + " never closed",
                          static_cast<std::ptrdiff_t>(rings[slot]->position));
        }
        break;
      }
    }
  }

  result.graph = build_graph(std::move(atoms), std::move(bonds));
  return result;
}

namespace {

// Shared spanning-tree flattening. `order_neighbors` permutes the children
// scan order in place; closure digits are assigned in encounter order.
struct TraversalWriter {
  const MolecularGraph& g;
  std::function<void(int, std::vector<std::pair<int, int>>&)> order_neighbors;

  std::vector<int> preorder;                 // atom -> visit ordinal
  std::vector<std::vector<int>> children;    // tree children, visit order
  std::vector<std::vector<std::pair<int, int>>> closures;  // atom -> (partner, bond idx)
  std::vector<char> edge_used;
  std::vector<int> parent;
  int clock = 0;

  std::string out;
  int token_count = 0;
  std::vector<int> atom_order;      // emission order -> graph atom
  std::vector<int> atom_token_idx;  // emission order -> token index
  std::vector<int> bond_slot;
  std::array<char, 100> slot_busy{};

  explicit TraversalWriter(const MolecularGraph& mg) : g(mg) {
    preorder.assign(g.atom_count(), -1);
    children.assign(g.atom_count(), {});
    closures.assign(g.atom_count(), {});
    edge_used.assign(g.bond_count(), 0);
    parent.assign(g.atom_count(), -1);
    bond_slot.assign(g.bond_count(), -1);
    slot_busy.fill(0);
  }

  void classify(int u) {
    preorder[u] = clock++;
    auto nbrs = g.adjacency[u];
    order_neighbors(u, nbrs);
    for (const auto& [v, bi] : nbrs) {
      if (edge_used[bi]) continue;
      if (preorder[v] < 0) {
        edge_used[bi] = 1;
        parent[v] = u;
        children[u].push_back(v);
        classify(v);
      } else {
        edge_used[bi] = 1;
        closures[u].emplace_back(v, bi);
        closures[v].emplace_back(u, bi);
      }
    }
  }

  BondOrder default_order(int a, int b) const {
    return g.atoms[a].aromatic && g.atoms[b].aromatic ? BondOrder::Aromatic
                                                      : BondOrder::Single;
  }

  void emit_bond_label(int a, int b, BondOrder order) {
    if (order != default_order(a, b)) {
      out += bond_token_char(order);
      ++token_count;
    }
  }

  int alloc_slot() {
    for (int s = 1; s < 100; ++s)
      if (!slot_busy[s]) {
        slot_busy[s] = 1;
        return s;
      }
    if (!slot_busy[0]) {
      slot_busy[0] = 1;
      return 0;
    }
    throw Error(ErrorKind::RingDigitsExhausted,
                "more than 100 simultaneously open rings");
  }

  void emit_digit(int slot) {
    if (slot < 10) {
      out += static_cast<char>('0' + slot);
    } else {
      out += '%';
      out += static_cast<char>('0' + slot / 10);
      out += static_cast<char>('0' + slot % 10);
    }
    ++token_count;
  }

  void emit_atom(int u) {
    const Atom& a = g.atoms[u];
    atom_order.push_back(u);
    atom_token_idx.push_back(token_count);
    ++token_count;

    bool organic = !a.explicit_h && !a.isotope && a.charge == 0 &&
                   !a.chirality && !a.atom_class;
    if (organic && !a.aromatic &&
        (a.element == "B" || a.element == "C" || a.element == "N" ||
         a.element == "O" || a.element == "S" || a.element == "P" ||
         a.element == "F" || a.element == "Cl" || a.element == "Br" ||
         a.element == "I")) {
      out += a.element;
      return;
    }
    if (organic && a.aromatic &&
        (a.element == "B" || a.element == "C" || a.element == "N" ||
         a.element == "O" || a.element == "S" || a.element == "P")) {
      out += static_cast<char>(std::tolower(a.element[0]));
      return;
    }

    // bracket form
    std::string sym = a.element;
    if (a.aromatic) {
      if (sym == "Se")
        sym = "se";
      else if (sym == "As")
        sym = "as";
      else if (sym == "C" || sym == "N" || sym == "O" || sym == "P" || sym == "S")
        sym[0] = static_cast<char>(std::tolower(sym[0]));
      else
        throw Error(ErrorKind::SyntaxError,
                    "aromatic " + sym + " has no bracket spelling");
    }
    out += '[';
    if (a.isotope) out += std::to_string(*a.isotope);
    out += sym;
    if (a.chirality) out += *a.chirality;
    int h = a.explicit_h.value_or(0);
    if (h > 0) {
      out += 'H';
      if (h != 1) out += static_cast<char>('0' + h);
    }
    if (a.charge != 0) {
      out += a.charge > 0 ? '+' : '-';
      int mag = std::abs(a.charge);
      if (mag != 1) out += static_cast<char>('0' + mag);
    }
    if (a.atom_class) out += ':' + std::to_string(*a.atom_class);
    out += ']';
  }

  void emit(int u) {
    emit_atom(u);
    for (const auto& [v, bi] : closures[u]) {
      if (preorder[u] < preorder[v]) {
        int slot = alloc_slot();
        bond_slot[bi] = slot;
        emit_bond_label(u, v, g.bonds[bi].order);
        emit_digit(slot);
      } else {
        int slot = bond_slot[bi];
        emit_bond_label(u, v, g.bonds[bi].order);
        emit_digit(slot);
        slot_busy[slot] = 0;
      }
    }
    const auto& kids = children[u];
    for (std::size_t i = 0; i < kids.size(); ++i) {
      int v = kids[i];
      int bi = -1;
      for (const auto& [w, b] : g.adjacency[u])
        if (w == v) {
          bi = b;
          break;
        }
      bool last = i + 1 == kids.size();
      if (!last) {
        out += '(';
        ++token_count;
      }
      emit_bond_label(u, v, g.bonds[bi].order);
      emit(v);
      if (!last) {
        out += ')';
        ++token_count;
      }
    }
  }

  void run(int root) {
    classify(root);
    emit(root);
  }
};

}  // namespace

std::string write_canonical(const MolecularGraph& g) {
  if (g.atom_count() == 0) return "";
  std::vector<int> rank = canonical_ranking(g);
  int root = 0;
  for (int i = 0; i < g.atom_count(); ++i)
    if (rank[i] == 0) root = i;

  TraversalWriter w(g);
  w.order_neighbors = [&rank](int, std::vector<std::pair<int, int>>& nbrs) {
    std::sort(nbrs.begin(), nbrs.end(),
              [&rank](const auto& x, const auto& y) { return rank[x.first] < rank[y.first]; });
  };
  w.run(root);
  return w.out;
}

bool same_molecule(const std::string& s1, const std::string& s2) {
  return write_canonical(parse(s1).graph) == write_canonical(parse(s2).graph);
}

std::vector<std::pair<std::string, AtomAlignment>> enumerate_random(
    const MolecularGraph& g, std::uint64_t seed, int k) {
  std::vector<std::pair<std::string, AtomAlignment>> out;
  if (k <= 0 || g.atom_count() == 0) return out;
  std::unordered_set<std::string> seen;
  SplitRng base(seed);

  constexpr int kMaxTries = 10000;
  constexpr int kStaleStreak = 200;  // consecutive duplicates = space exhausted
  int stale = 0;
  for (int attempt = 0; attempt < kMaxTries && static_cast<int>(out.size()) < k;
       ++attempt) {
    SplitRng r = base.split(static_cast<std::uint64_t>(attempt));
    int root = static_cast<int>(r.uniform_index(g.atom_count()));
    TraversalWriter w(g);
    w.order_neighbors = [&r](int, std::vector<std::pair<int, int>>& nbrs) {
      for (std::size_t i = nbrs.size(); i > 1; --i)
        std::swap(nbrs[i - 1], nbrs[r.uniform_index(i)]);
    };
    w.run(root);
    if (seen.insert(w.out).second) {
      AtomAlignment align;
      for (std::size_t i = 0; i < w.atom_order.size(); ++i)
        align.entries.emplace_back(w.atom_token_idx[i], w.atom_order[i]);
      out.emplace_back(w.out, std::move(align));
      stale = 0;
    } else if (++stale >= kStaleStreak) {
      break;
    }
  }
  // distinct space exhausted; cycle duplicates to reach k
  int distinct = static_cast<int>(out.size());
  out.reserve(static_cast<std::size_t>(k));
  for (int i = 0; static_cast<int>(out.size()) < k; ++i)
    out.push_back(out[i % distinct]);
  return out;
}

double edit_similarity(const std::string& s1, const std::string& s2) {
  const std::size_t n = s1.size(), m = s2.size();
  if (n == 0 && m == 0) return 1.0;
  std::vector<int> prev(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = static_cast<int>(j);
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = static_cast<int>(i);
    for (std::size_t j = 1; j <= m; ++j) {
      int sub = prev[j - 1] + (s1[i - 1] == s2[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  double dist = prev[m];
  return 1.0 - dist / static_cast<double>(std::max(n, m));
}

}  // namespace allsmiles
