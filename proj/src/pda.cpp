// Copyright 2026 allsmiles authors
// SPDX-License-Identifier: Apache-2.0
#include "allsmiles/pda.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "allsmiles/error.hpp"
#include "allsmiles/rng.hpp"

namespace allsmiles {
namespace pda {
namespace {

const Vocabulary& V() { return Vocabulary::instance(); }

double label_value(const std::optional<BondOrder>& l) {
  return l ? bond_order_value(*l) : 1.0;
}

BondOrder bond_order_of_token(int id) {
  const std::string& t = V().text(id);
  switch (t[0]) {
    case '-': return BondOrder::Single;
    case '=': return BondOrder::Double;
    case '#': return BondOrder::Triple;
    case '$': return BondOrder::Quadruple;
    case ':': return BondOrder::Aromatic;
    case '/': return BondOrder::Up;
    default: return BondOrder::Down;
  }
}

bool in_bracket(Control c) {
  return c >= Control::BrStart && c <= Control::BrClassMore;
}

bool branched_atom_complete(Control c) {
  return c == Control::AfterAtom || c == Control::AfterBranches;
}

// Any '(' frame whose parent atom can still bond, skipping the top `skip`
// frames. Those parents become reachable growth points through ')' pops.
bool paren_parent_growth(const PdaState& s, int skip = 0) {
  int end = static_cast<int>(s.stack.size()) - skip;
  for (int i = 0; i < end; ++i)
    if (s.stack[i].first == '(' && s.remaining(s.stack[i].second) >= 1.0 - 1e-9)
      return true;
  return false;
}

// Valence still available on the growth atom of this state.
double growth_remaining(const PdaState& s) {
  if (in_bracket(s.control))
    return s.br_budget - s.br_incoming - s.br_hcount;
  if (s.current_atom < 0) return 0.0;
  return s.remaining(s.current_atom);
}

// True when some completion of the state exists. With no open rings every
// state completes by closing branches and brackets; with open rings a growth
// point with at least one free bond is required so fresh atoms can host the
// ring closures.
bool completable(const PdaState& s) {
  switch (s.control) {
    case Control::Start:
    case Control::PendingBondRing:
    case Control::PendingBondChain:
    case Control::PercentFirst:
    case Control::PercentSecond:
    case Control::BrStart:
      return true;  // guarded by the masks that enter these states
    case Control::BranchOpened:
      return s.remaining(s.current_atom) >= 1.0 - 1e-9;
    default:
      break;
  }
  if (s.open_ring_count == 0) return true;
  if (growth_remaining(s) >= 1.0 - 1e-9) return true;
  return paren_parent_growth(s);
}

bool already_bonded(const PdaState& s, int a, int b) {
  for (int p : s.atoms[a].partners)
    if (p == b) return true;
  return false;
}

// ---- per-token policy predicates (shared by advance and the mask) ----

bool atom_allowed(const PdaState& s, double budget) {
  switch (s.control) {
    case Control::Start:
      return true;
    case Control::AfterAtom:
    case Control::AfterBranches:
    case Control::PendingBondRing:
    case Control::PendingBondChain:
    case Control::BranchOpened:
      break;
    default:
      return false;
  }
  double order = label_value(s.pending_bond);
  if (s.remaining(s.current_atom) < order - 1e-9) return false;
  if (budget < order - 1e-9) return false;
  // liveness: the new atom becomes the only growth point besides '(' parents
  if (s.open_ring_count > 0 && budget - order < 1.0 - 1e-9 &&
      !paren_parent_growth(s))
    return false;
  return true;
}

bool bond_allowed(const PdaState& s, double value) {
  if (s.control != Control::AfterAtom && s.control != Control::AfterBranches &&
      s.control != Control::BranchOpened)
    return false;
  return s.remaining(s.current_atom) >= value - 1e-9;
}

// Open or close legality for one ring slot with an optional explicit label.
bool ring_op_allowed(const PdaState& s, int slot,
                     const std::optional<BondOrder>& label) {
  const RingSlot& r = s.ring_memory[slot];
  double rem = s.remaining(s.current_atom);
  if (!r.open) {
    double order = label_value(label);
    if (rem < order - 1e-9) return false;
    // after opening, rings are open: keep a growth point alive
    if (rem - order < 1.0 - 1e-9 && !paren_parent_growth(s)) return false;
    return true;
  }
  // close
  if (r.opener == s.current_atom) return false;  // self bond
  if (already_bonded(s, s.current_atom, r.opener)) return false;
  if (r.label && label && *r.label != *label) return false;
  double order = label ? bond_order_value(*label) : label_value(r.label);
  if (rem < order - 1e-9) return false;
  double upgrade = order - label_value(r.label);
  if (upgrade > 1e-9 && s.remaining(r.opener) < upgrade - 1e-9) return false;
  if (s.open_ring_count > 1 && rem - order < 1.0 - 1e-9 &&
      !paren_parent_growth(s))
    return false;  // other rings still need a live growth point
  return true;
}

bool any_percent_op(const PdaState& s, int first_digit) {
  for (int d2 = 0; d2 <= 9; ++d2)
    if (ring_op_allowed(s, first_digit * 10 + d2, s.pending_bond)) return true;
  return false;
}

bool percent_allowed(const PdaState& s) {
  if (s.control != Control::AfterAtom && s.control != Control::PendingBondRing)
    return false;
  for (int d1 = 0; d1 <= 9; ++d1)
    if (any_percent_op(s, d1)) return true;
  return false;
}

bool open_paren_allowed(const PdaState& s) {
  if (!branched_atom_complete(s.control)) return false;
  return s.remaining(s.current_atom) >= 1.0 - 1e-9;
}

bool close_paren_allowed(const PdaState& s) {
  if (!branched_atom_complete(s.control)) return false;
  if (s.stack.empty() || s.stack.back().first != '(') return false;
  int parent = s.stack.back().second;
  if (s.open_ring_count == 0) return true;
  if (s.remaining(parent) >= 1.0 - 1e-9) return true;
  return paren_parent_growth(s, /*skip=*/1);
}

bool eos_allowed(const PdaState& s) {
  return branched_atom_complete(s.control) && s.stack.empty() &&
         s.open_ring_count == 0;
}

bool open_bracket_allowed(const PdaState& s) {
  switch (s.control) {
    case Control::Start:
      return true;
    case Control::AfterAtom:
    case Control::AfterBranches:
    case Control::PendingBondRing:
    case Control::PendingBondChain:
    case Control::BranchOpened:
      return s.remaining(s.current_atom) >= label_value(s.pending_bond) - 1e-9;
    default:
      return false;
  }
}

bool bracket_symbol_allowed(const PdaState& s, int id) {
  if (s.control != Control::BrStart) return false;
  if (!V().is_element_symbol(id) && !V().is_aromatic_symbol(id)) return false;
  bool aromatic = V().is_aromatic_symbol(id);
  std::string elem = V().text(id);
  if (aromatic) {
    elem[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(elem[0])));
    if (elem.size() > 1) elem[1] = static_cast<char>(std::tolower(
        static_cast<unsigned char>(elem[1])));
    if (elem == "Se" || elem == "As") {
      // two-letter aromatic spelling already normalized
    }
  }
  double budget = valence_bound(elem, aromatic);
  if (budget < s.br_incoming - 1e-9) return false;
  if (s.open_ring_count > 0 && budget - s.br_incoming < 1.0 - 1e-9 &&
      !paren_parent_growth(s))
    return false;
  return true;
}

bool hcount_symbol_allowed(const PdaState& s) {
  if (s.control != Control::BrSymbol && s.control != Control::BrAfterChiral)
    return false;
  if (s.br_incoming + 1 > s.br_budget + 1e-9) return false;
  if (s.open_ring_count > 0 &&
      s.br_budget - s.br_incoming - 1 < 1.0 - 1e-9 && !paren_parent_growth(s))
    return false;
  return true;
}

bool hcount_digit_allowed(const PdaState& s, int d) {
  if (s.control != Control::BrHDigit) return false;
  if (s.br_incoming + d > s.br_budget + 1e-9) return false;
  if (s.open_ring_count > 0 &&
      s.br_budget - s.br_incoming - d < 1.0 - 1e-9 && !paren_parent_growth(s))
    return false;
  return true;
}

bool charge_sign_allowed(const PdaState& s) {
  return s.control == Control::BrSymbol || s.control == Control::BrAfterChiral ||
         s.control == Control::BrHDigit || s.control == Control::BrAfterH;
}

bool class_colon_allowed(const PdaState& s) {
  return charge_sign_allowed(s) || s.control == Control::BrChargeDigit ||
         s.control == Control::BrAfterCharge;
}

bool close_bracket_allowed(const PdaState& s) {
  switch (s.control) {
    case Control::BrSymbol:
    case Control::BrAfterChiral:
    case Control::BrHDigit:
    case Control::BrAfterH:
    case Control::BrChargeDigit:
    case Control::BrAfterCharge:
    case Control::BrClassMore:
      break;
    default:
      return false;
  }
  // liveness of the completed atom
  double rem = s.br_budget - s.br_incoming - s.br_hcount;
  if (s.open_ring_count > 0 && rem < 1.0 - 1e-9 && !paren_parent_growth(s))
    return false;
  return true;
}

bool digit_allowed(const PdaState& s, int d) {
  switch (s.control) {
    case Control::AfterAtom:
      return ring_op_allowed(s, d, std::nullopt);
    case Control::PendingBondRing:
      return ring_op_allowed(s, d, s.pending_bond);
    case Control::PercentFirst:
      return any_percent_op(s, d);
    case Control::PercentSecond:
      return ring_op_allowed(s, s.percent_first * 10 + d, s.pending_bond);
    case Control::BrStart:
      return s.br_iso_digits < 3;
    case Control::BrHDigit:
      return hcount_digit_allowed(s, d);
    case Control::BrChargeDigit:
      return true;
    case Control::BrClassFirst:
      return true;
    case Control::BrClassMore:
      return s.br_class_digits < 3;
    default:
      return false;
  }
}

bool token_allowed(const PdaState& s, int id) {
  const Vocabulary& v = V();
  if (id == v.eos()) return eos_allowed(s);
  if (id == v.pad()) return false;
  if (v.is_digit(id)) return digit_allowed(s, v.digit_value(id));
  if (id == v.hsymbol()) {
    if (s.control == Control::BrStart) return bracket_symbol_allowed(s, id);
    return hcount_symbol_allowed(s);
  }
  if (v.is_aliphatic_organic(id) || v.is_aromatic_organic(id)) {
    if (in_bracket(s.control)) return bracket_symbol_allowed(s, id);
    std::string elem = v.text(id);
    bool aromatic = std::islower(static_cast<unsigned char>(elem[0])) != 0;
    if (aromatic) elem[0] = static_cast<char>(std::toupper(
        static_cast<unsigned char>(elem[0])));
    return atom_allowed(s, valence_bound(elem, aromatic));
  }
  if (v.is_element_symbol(id) || v.is_aromatic_symbol(id))
    return bracket_symbol_allowed(s, id);
  if (v.is_chiral(id)) return s.control == Control::BrSymbol;
  if (v.is_bond(id)) {
    if (id == v.minus() && charge_sign_allowed(s)) return true;
    if (id == v.colon() && class_colon_allowed(s)) return true;
    if (in_bracket(s.control)) return false;
    return bond_allowed(s, bond_order_value(bond_order_of_token(id)));
  }
  if (id == v.plus()) return charge_sign_allowed(s);
  if (id == v.percent()) return percent_allowed(s);
  if (id == v.open_paren()) return open_paren_allowed(s);
  if (id == v.close_paren()) return close_paren_allowed(s);
  if (id == v.open_bracket()) return open_bracket_allowed(s);
  if (id == v.close_bracket()) return close_bracket_allowed(s);
  return false;
}

// ---- transitions (precondition: token_allowed) ----

void attach_atom(PdaState& s, double budget) {
  double order = s.control == Control::Start ? 0.0 : label_value(s.pending_bond);
  AtomRecord rec;
  rec.budget = budget;
  rec.used = order;
  if (s.current_atom >= 0) {
    s.atoms[s.current_atom].used += order;
    rec.partners.push_back(s.current_atom);
    s.atoms[s.current_atom].partners.push_back(s.atom_count());
  }
  s.atoms.push_back(std::move(rec));
  s.current_atom = s.atom_count() - 1;
  s.pending_bond.reset();
  s.control = Control::AfterAtom;
}

void apply_ring(PdaState& s, int slot, const std::optional<BondOrder>& label) {
  RingSlot& r = s.ring_memory[slot];
  if (!r.open) {
    r.open = true;
    r.opener = s.current_atom;
    r.label = label;
    s.atoms[s.current_atom].used += label_value(label);
    ++s.open_ring_count;
  } else {
    double order = label ? bond_order_value(*label) : label_value(r.label);
    double upgrade = order - label_value(r.label);
    s.atoms[s.current_atom].used += order;
    if (upgrade > 1e-9) s.atoms[r.opener].used += upgrade;
    s.atoms[s.current_atom].partners.push_back(r.opener);
    s.atoms[r.opener].partners.push_back(s.current_atom);
    r = RingSlot{};
    --s.open_ring_count;
  }
  s.pending_bond.reset();
  s.percent_first = -1;
  s.control = Control::AfterAtom;
}

}  // namespace

int TokenMask::count() const {
  int n = 0;
  for (char c : allowed) n += c != 0;
  return n;
}

PdaState initial_state() { return PdaState{}; }

PdaState advance(const PdaState& state, int token_id) {
  const Vocabulary& v = V();
  if (token_id < 0 || token_id >= v.size())
    throw Error(ErrorKind::IllegalToken, "token id out of range");
  if (!token_allowed(state, token_id))
    throw Error(ErrorKind::IllegalToken,
                "token '" + v.text(token_id) + "' not allowed here");

  PdaState s = state;
  if (token_id == v.eos()) return s;

  if (v.is_digit(token_id)) {
    int d = v.digit_value(token_id);
    switch (s.control) {
      case Control::AfterAtom:
        apply_ring(s, d, std::nullopt);
        break;
      case Control::PendingBondRing:
        apply_ring(s, d, s.pending_bond);
        break;
      case Control::PercentFirst:
        s.percent_first = d;
        s.control = Control::PercentSecond;
        break;
      case Control::PercentSecond:
        apply_ring(s, s.percent_first * 10 + d, s.pending_bond);
        break;
      case Control::BrStart:
        ++s.br_iso_digits;
        break;
      case Control::BrHDigit:
        s.br_hcount = d;
        s.control = Control::BrAfterH;
        break;
      case Control::BrChargeDigit:
        s.control = Control::BrAfterCharge;
        break;
      case Control::BrClassFirst:
        s.br_class_digits = 1;
        s.control = Control::BrClassMore;
        break;
      case Control::BrClassMore:
        ++s.br_class_digits;
        break;
      default:
        break;
    }
    return s;
  }

  if (token_id == v.hsymbol() && s.control != Control::BrStart) {
    s.br_hcount = 1;
    s.control = Control::BrHDigit;
    return s;
  }

  if (in_bracket(s.control) &&
      (v.is_element_symbol(token_id) || v.is_aromatic_symbol(token_id))) {
    bool aromatic = v.is_aromatic_symbol(token_id);
    std::string elem = v.text(token_id);
    if (aromatic) {
      elem[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(elem[0])));
    }
    s.br_budget = valence_bound(elem, aromatic);
    s.control = Control::BrSymbol;
    return s;
  }

  if (v.is_aliphatic_organic(token_id) || v.is_aromatic_organic(token_id)) {
    std::string elem = v.text(token_id);
    bool aromatic = std::islower(static_cast<unsigned char>(elem[0])) != 0;
    if (aromatic) elem[0] = static_cast<char>(std::toupper(
        static_cast<unsigned char>(elem[0])));
    attach_atom(s, valence_bound(elem, aromatic));
    return s;
  }

  if (v.is_chiral(token_id)) {
    s.control = Control::BrAfterChiral;
    return s;
  }

  if (token_id == v.plus() || (token_id == v.minus() && charge_sign_allowed(s))) {
    s.control = Control::BrChargeDigit;
    return s;
  }

  if (token_id == v.colon() && class_colon_allowed(s)) {
    s.control = Control::BrClassFirst;
    return s;
  }

  if (v.is_bond(token_id)) {
    s.pending_bond = bond_order_of_token(token_id);
    s.control = s.control == Control::AfterAtom ? Control::PendingBondRing
                                                : Control::PendingBondChain;
    return s;
  }

  if (token_id == v.percent()) {
    s.control = Control::PercentFirst;
    return s;
  }
  if (token_id == v.open_paren()) {
    s.stack.emplace_back('(', s.current_atom);
    s.control = Control::BranchOpened;
    return s;
  }
  if (token_id == v.close_paren()) {
    s.current_atom = s.stack.back().second;
    s.stack.pop_back();
    s.control = Control::AfterBranches;
    return s;
  }
  if (token_id == v.open_bracket()) {
    double order = s.current_atom >= 0 ? label_value(s.pending_bond) : 0.0;
    if (s.current_atom >= 0) s.atoms[s.current_atom].used += order;
    s.stack.emplace_back('[', s.current_atom);
    s.br_incoming_from = s.current_atom;
    s.br_incoming = order;
    s.br_budget = 0.0;
    s.br_iso_digits = 0;
    s.br_hcount = 0;
    s.br_class_digits = 0;
    s.pending_bond.reset();
    s.control = Control::BrStart;
    return s;
  }
  if (token_id == v.close_bracket()) {
    AtomRecord rec;
    rec.budget = s.br_budget;
    rec.used = s.br_incoming + s.br_hcount;
    if (s.br_incoming_from >= 0) {
      rec.partners.push_back(s.br_incoming_from);
      s.atoms[s.br_incoming_from].partners.push_back(s.atom_count());
    }
    s.atoms.push_back(std::move(rec));
    s.current_atom = s.atom_count() - 1;
    s.stack.pop_back();
    s.br_incoming_from = -1;
    s.br_incoming = 0.0;
    s.control = Control::AfterAtom;
    return s;
  }

  throw Error(ErrorKind::IllegalToken, "unhandled token");
}

TokenMask valid_next_tokens(const PdaState& state) {
  const Vocabulary& v = V();
  TokenMask m;
  m.allowed.assign(v.size(), 0);
  for (int id = 0; id < v.size(); ++id)
    if (token_allowed(state, id)) m.allowed[id] = 1;
  return m;
}

bool accepts(const std::string& s) {
  try {
    TokenStream ts = tokenize(s);
    PdaState st = initial_state();
    for (int id : ts.vocabulary_ids) st = advance(st, id);
    return true;
  } catch (const Error&) {
    return false;
  }
}

namespace {

// Cheap upper bound on closure_debt, used to decide when the sampler must
// start planning token-by-token.
int rough_debt_bound(const PdaState& s) {
  int debt = 16;  // control resolution worst case
  for (const auto& [sym, parent] : s.stack)
    if (sym == '(') ++debt;
  for (int slot = 0; slot < 100; ++slot)
    if (s.ring_memory[slot].open) debt += (slot < 10 ? 1 : 3) + 6;
  return debt;
}

}  // namespace

// Walks the canonical closing strategy (finish the bracket, resolve pending
// productions, close rings on fresh host atoms, pop branches) and counts its
// tokens. The returned length is always achievable.
int closure_debt(const PdaState& state) {
  const Vocabulary& v = V();
  PdaState s = state;
  int count = 0;
  auto step = [&](int id) {
    s = advance(s, id);
    ++count;
  };
  int guard = 0;
  while (!eos_allowed(s)) {
    if (++guard > 10000)
      throw Error(ErrorKind::IllegalToken, "closure simulation stuck");
    switch (s.control) {
      case Control::BrStart:
        step(v.id("U"));
        continue;
      case Control::BrClassFirst:
        step(v.digit(0));
        continue;
      case Control::BrSymbol:
      case Control::BrAfterChiral:
      case Control::BrHDigit:
      case Control::BrAfterH:
      case Control::BrChargeDigit:
      case Control::BrAfterCharge:
      case Control::BrClassMore:
        step(v.close_bracket());
        continue;
      case Control::PercentFirst:
      case Control::PercentSecond: {
        int pick = -1;
        for (int d = 0; d <= 9 && pick < 0; ++d) {
          if (!digit_allowed(s, d)) continue;
          if (s.control == Control::PercentSecond &&
              s.ring_memory[s.percent_first * 10 + d].open)
            pick = d;  // prefer a close
          else if (pick < 0)
            pick = d;
        }
        step(v.digit(pick));
        continue;
      }
      case Control::PendingBondRing:
      case Control::PendingBondChain:
      case Control::BranchOpened: {
        if (atom_allowed(s, valence_bound("C", false))) {
          step(v.id("C"));
        } else {
          step(v.open_bracket());
        }
        continue;
      }
      default:
        break;
    }
    // AfterAtom / AfterBranches: close a ring on the current atom if possible
    int closable = -1;
    if (s.control == Control::AfterAtom) {
      for (int slot = 0; slot < 100 && closable < 0; ++slot)
        if (s.ring_memory[slot].open && ring_op_allowed(s, slot, std::nullopt))
          closable = slot;
    }
    if (closable >= 0) {
      if (closable < 10) {
        step(v.digit(closable));
      } else {
        step(v.percent());
        step(v.digit(closable / 10));
        step(v.digit(closable % 10));
      }
      continue;
    }
    if (s.open_ring_count > 0) {
      if (s.remaining(s.current_atom) >= 1.0 - 1e-9) {
        bool heavy = false;
        for (int slot = 0; slot < 100; ++slot)
          if (s.ring_memory[slot].open &&
              label_value(s.ring_memory[slot].label) > 3.0 + 1e-9)
            heavy = true;
        if (!heavy && atom_allowed(s, valence_bound("C", false)))
          step(v.id("C"));
        else
          step(v.open_bracket());
      } else {
        step(v.close_paren());
      }
      continue;
    }
    step(v.close_paren());
  }
  return count;
}

std::string sample_valid(std::uint64_t rng_seed, int max_len,
                         const std::vector<double>* temperature_weights) {
  const Vocabulary& v = V();
  SplitRng rng(rng_seed);
  PdaState s = initial_state();
  std::string out;
  int emitted = 0;
  constexpr int kSlack = 12;

  // candidates for the tight endgame: closers, pops, hosts and eos
  std::vector<int> closing;
  closing.push_back(v.eos());
  closing.push_back(v.close_paren());
  closing.push_back(v.close_bracket());
  closing.push_back(v.percent());
  for (int d = 0; d <= 9; ++d) closing.push_back(v.digit(d));
  closing.push_back(v.id("C"));
  closing.push_back(v.id("U"));
  closing.push_back(v.open_bracket());

  while (emitted < max_len) {
    int remaining = max_len - emitted;
    TokenMask mask = valid_next_tokens(s);
    std::vector<int> candidates;
    std::vector<double> weights;
    bool tight = remaining < rough_debt_bound(s) + kSlack &&
                 remaining < closure_debt(s) + kSlack;

    auto push_candidate = [&](int id) {
      double w = 1.0;
      if (temperature_weights && id < static_cast<int>(temperature_weights->size()))
        w = (*temperature_weights)[id];
      if (w <= 0.0) return;
      candidates.push_back(id);
      weights.push_back(w);
    };

    if (!tight) {
      for (int id = 0; id < v.size(); ++id)
        if (mask[id]) push_candidate(id);
      if (candidates.empty()) {
        // weights excluded everything; fall back to the raw mask
        for (int id = 0; id < v.size(); ++id)
          if (mask[id]) {
            candidates.push_back(id);
            weights.push_back(1.0);
          }
      }
    } else {
      for (int id : closing) {
        if (!mask[id]) continue;
        if (id == v.eos()) continue;  // handled below
        PdaState next = advance(s, id);
        if (closure_debt(next) <= remaining - 1) {
          candidates.push_back(id);
          weights.push_back(1.0);
        }
      }
      if (mask[v.eos()]) {
        candidates.push_back(v.eos());
        weights.push_back(1.0);
      }
    }

    if (candidates.empty()) {
      if (mask[v.eos()]) break;
      throw Error(ErrorKind::IllegalToken, "sampler ran out of moves");
    }
    double total = 0.0;
    for (double w : weights) total += w;
    double pick = rng.uniform() * total;
    int chosen = candidates.back();
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      pick -= weights[i];
      if (pick <= 0.0) {
        chosen = candidates[i];
        break;
      }
    }

    if (chosen == v.eos()) break;
    s = advance(s, chosen);
    out += v.text(chosen);
    ++emitted;
  }
  return out;
}

}  // namespace pda
}  // namespace allsmiles
