// Copyright 2026 allsmiles authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "allsmiles/molgraph.hpp"
#include "allsmiles/smiles.hpp"
#include "allsmiles/vocab.hpp"

namespace allsmiles {

// Pushdown automaton over the generation vocabulary. Enforces the chain /
// branched_atom / ringbond grammar, bracket-interior progression, paired
// ring digits with matching bond labels, and per-atom valence budgets, so a
// decoder restricted to its token mask can only emit parseable strings.
namespace pda {

enum class Control : std::uint8_t {
  Start,            // expecting the first atom of the chain
  AfterAtom,        // ringbond phase of the current branched_atom
  AfterBranches,    // branch phase; ring digits no longer legal
  PendingBondRing,  // bond seen in ringbond phase: atom or ring digit next
  PendingBondChain, // bond seen elsewhere: atom next
  BranchOpened,     // immediately after '(': bond or atom
  PercentFirst,     // '%' seen, expecting first ring digit
  PercentSecond,    // expecting second ring digit
  BrStart,          // '[': isotope digits or element symbol
  BrSymbol,         // symbol seen: chiral | H | sign | : | ]
  BrAfterChiral,    // H | sign | : | ]
  BrHDigit,         // optional hcount digit | sign | : | ]
  BrAfterH,         // sign | : | ]
  BrChargeDigit,    // optional charge digit | : | ]
  BrAfterCharge,    // : | ]
  BrClassFirst,     // class digit required
  BrClassMore,      // optional class digits | ]
};

struct RingSlot {
  bool open = false;
  int opener = -1;
  std::optional<BondOrder> label;
};

struct AtomRecord {
  double used = 0.0;
  double budget = 0.0;
  std::vector<int> partners;  // atoms already bonded to this one
};

struct PdaState {
  Control control = Control::Start;
  // (open symbol, atom to return to). '[' frames return to the atom that
  // preceded the bracket.
  std::vector<std::pair<char, int>> stack;
  std::array<RingSlot, 100> ring_memory{};
  int open_ring_count = 0;
  std::vector<AtomRecord> atoms;
  int current_atom = -1;
  std::optional<BondOrder> pending_bond;
  int percent_first = -1;

  // bracket atom under construction
  int br_incoming_from = -1;  // atom the pending bond connects from, or -1
  double br_incoming = 0.0;
  double br_budget = 0.0;
  int br_iso_digits = 0;
  int br_hcount = 0;
  int br_class_digits = 0;

  int atom_count() const { return static_cast<int>(atoms.size()); }
  double remaining(int atom) const {
    return atoms[atom].budget - atoms[atom].used;
  }
};

struct TokenMask {
  std::vector<char> allowed;

  bool operator[](int id) const { return allowed[id] != 0; }
  int count() const;
};

PdaState initial_state();

// Applies one vocabulary token; throws Error(IllegalToken) when the token is
// not accepted from this state (including moves into dead states from which
// no completion exists).
PdaState advance(const PdaState& state, int token_id);

// Exactly the tokens for which advance succeeds. Implemented as rule logic
// rather than probing advance; the two are cross-checked by tests.
TokenMask valid_next_tokens(const PdaState& state);

// True when the whole string walks the PDA to an accepting state.
bool accepts(const std::string& s);

// Minimum tokens needed to reach a legal eos from this state.
int closure_debt(const PdaState& state);

// Masked random generation; never exceeds max_len tokens (eos excluded) and
// always parses. Optional per-token weights bias the choice.
std::string sample_valid(std::uint64_t rng_seed, int max_len,
                         const std::vector<double>* temperature_weights = nullptr);

}  // namespace pda
}  // namespace allsmiles
