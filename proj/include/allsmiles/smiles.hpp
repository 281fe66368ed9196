// Copyright 2026 allsmiles authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "allsmiles/molgraph.hpp"
#include "allsmiles/vocab.hpp"

namespace allsmiles {

enum class TokenKind {
  OrganicAtom,
  AromaticAtom,
  BracketAtom,
  Bond,
  RingDigit,
  BranchOpen,
  BranchClose,
  Eos,
};

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t position = 0;  // character offset in the source string

  // Populated for atom tokens.
  Atom atom;

  // For ring digits: the slot number (single digit or %NN).
  int ring_slot = -1;

  // For bond tokens.
  BondOrder bond = BondOrder::Single;

  // Vocabulary encoding of this token (bracket atoms expand to several ids).
  std::vector<int> vocab_ids;
};

struct TokenStream {
  std::vector<Token> tokens;      // final entry is eos
  std::vector<int> vocabulary_ids;  // flattened encoding, final entry is eos
  // For each vocabulary_ids position, the owning token index.
  std::vector<int> id_token;
  // For each token, [start, end) span in vocabulary_ids.
  std::vector<std::pair<int, int>> token_span;

  std::string detokenize() const;
};

// token index (atom tokens only, in DFS emission order) -> graph atom index.
struct AtomAlignment {
  std::vector<std::pair<int, int>> entries;

  int atom_for_token(int token_index) const {
    for (const auto& [t, a] : entries)
      if (t == token_index) return a;
    return -1;
  }
};

struct ParseResult {
  MolecularGraph graph;
  AtomAlignment alignment;
  TokenStream stream;
};

TokenStream tokenize(const std::string& s);

ParseResult parse(const std::string& s);

bool same_molecule(const std::string& s1, const std::string& s2);

std::string write_canonical(const MolecularGraph& g);

// Randomized spanning-tree flattenings: random root, random neighbor visit
// order; distinct strings preferred. Deterministic given the seed.
std::vector<std::pair<std::string, AtomAlignment>> enumerate_random(
    const MolecularGraph& g, std::uint64_t seed, int k);

// 1 - Levenshtein(s1, s2) / max(|s1|, |s2|); 1.0 for equal strings.
double edit_similarity(const std::string& s1, const std::string& s2);

}  // namespace allsmiles
