// Copyright 2026 allsmiles authors
// SPDX-License-Identifier: Apache-2.0
#include "allsmiles/pda.hpp"

#include <string>
#include <vector>

#include "allsmiles/error.hpp"
#include "allsmiles/rng.hpp"
#include "allsmiles/smiles.hpp"
#include "doctest.h"

using namespace allsmiles;
using pda::PdaState;

namespace {

const Vocabulary& V() { return Vocabulary::instance(); }

PdaState walk(const std::string& s) {
  TokenStream ts = tokenize(s);
  PdaState st = pda::initial_state();
  for (std::size_t i = 0; i + 1 < ts.vocabulary_ids.size(); ++i)
    st = pda::advance(st, ts.vocabulary_ids[i]);
  return st;
}

bool parses(const std::string& s) {
  try {
    parse(s);
    return true;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

TEST_CASE("initial state mask") {
  pda::TokenMask m = pda::valid_next_tokens(pda::initial_state());
  CHECK(m[V().id("C")]);
  CHECK(m[V().id("c")]);
  CHECK(m[V().open_bracket()]);
  CHECK_FALSE(m[V().close_paren()]);
  CHECK_FALSE(m[V().eos()]);  // the empty string is not a chain
  CHECK_FALSE(m[V().id("=")]);
  CHECK_FALSE(m[V().digit(1)]);
}

TEST_CASE("advance maintains the valence budget") {
  PdaState s = walk("C");
  CHECK(s.current_atom == 0);
  CHECK(s.atoms[0].budget == doctest::Approx(4.0));
  CHECK(s.atoms[0].used == doctest::Approx(0.0));

  s = walk("C1CC");
  CHECK(s.open_ring_count == 1);
  pda::TokenMask m = pda::valid_next_tokens(s);
  CHECK_FALSE(m[V().eos()]);  // ring 1 still open
  CHECK(m[V().digit(1)]);

  s = pda::advance(s, V().digit(1));
  CHECK(s.open_ring_count == 0);
  CHECK(pda::valid_next_tokens(s)[V().eos()]);
}

TEST_CASE("branch grammar") {
  PdaState s = walk("C(");
  try {
    pda::advance(s, V().close_paren());
    FAIL("expected IllegalToken");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IllegalToken);
  }
  CHECK_FALSE(pda::valid_next_tokens(s)[V().open_paren()]);  // no "(("

  // after a branch, ring digits are no longer legal on the parent
  PdaState after_branch = walk("C(C)");
  CHECK_FALSE(pda::valid_next_tokens(after_branch)[V().digit(1)]);
  CHECK(pda::valid_next_tokens(after_branch)[V().open_paren()]);
}

TEST_CASE("oxygen saturates after a double bond") {
  PdaState s = walk("O=");
  CHECK(pda::valid_next_tokens(s)[V().id("O")]);
  s = walk("O=O");
  CHECK_FALSE(pda::valid_next_tokens(s)[V().id("=")]);
}

TEST_CASE("saturated carbon blocks further structure") {
  PdaState s = walk("C(C)(C)(C)C");
  pda::TokenMask m = pda::valid_next_tokens(s);
  // current atom is the final C; the root has no capacity left but the
  // chain may continue from the current atom
  CHECK(m[V().id("C")]);
  CHECK(m[V().eos()]);

  PdaState root_full = walk("C(C)(C)(C)");
  pda::TokenMask m2 = pda::valid_next_tokens(root_full);
  CHECK(m2[V().id("C")]);       // the fourth substituent
  CHECK_FALSE(m2[V().id("=")]);  // needs two free bonds
}

TEST_CASE("mask equals advance everywhere along random trajectories") {
  SplitRng rng(21);
  int states_checked = 0;
  for (int i = 0; i < 60; ++i) {
    std::string s = pda::sample_valid(rng.next_u64(), 40);
    TokenStream ts = tokenize(s);
    PdaState st = pda::initial_state();
    for (int id : ts.vocabulary_ids) {
      pda::TokenMask m = pda::valid_next_tokens(st);
      CHECK(m.count() > 0);  // liveness
      for (int t = 0; t < V().size(); ++t) {
        bool ok;
        try {
          pda::advance(st, t);
          ok = true;
        } catch (const Error&) {
          ok = false;
        }
        if (ok != m[t]) {
          CAPTURE(s);
          CAPTURE(t);
          CAPTURE(V().text(t));
          CHECK(ok == m[t]);
        }
      }
      ++states_checked;
      st = pda::advance(st, id);
    }
  }
  CHECK(states_checked > 500);
}

TEST_CASE("PDA agrees with the parser on accepts") {
  SplitRng rng(33);
  const std::string alphabet = "CNOSPFIclnosp()[]=#$:/\\123456789%+-@H";
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    std::string s = pda::sample_valid(rng.next_u64(), 30);
    CHECK(parses(s));  // sampled strings always parse
    CHECK(pda::accepts(s));
    // mutate
    std::string m = s;
    int edits = 1 + static_cast<int>(rng.uniform_index(3));
    for (int e = 0; e < edits && !m.empty(); ++e) {
      std::size_t pos = rng.uniform_index(m.size());
      switch (rng.uniform_index(3)) {
        case 0:
          m[pos] = alphabet[rng.uniform_index(alphabet.size())];
          break;
        case 1:
          m.insert(pos, 1, alphabet[rng.uniform_index(alphabet.size())]);
          break;
        default:
          m.erase(pos, 1);
          break;
      }
    }
    bool p = parses(m);
    bool a = pda::accepts(m);
    if (p != a) {
      CAPTURE(m);
      CHECK(p == a);
    }
    ++checked;
  }
  CHECK(checked == 400);
}

TEST_CASE("sample_valid basics") {
  CHECK(pda::sample_valid(1, 60) == pda::sample_valid(1, 60));
  CHECK(pda::sample_valid(1, 60) != pda::sample_valid(2, 60));

  for (int seed = 0; seed < 50; ++seed) {
    std::string s = pda::sample_valid(seed, 1);
    CAPTURE(s);
    CHECK(parses(s));
    CHECK(parse(s).graph.atom_count() == 1);
  }

  SplitRng rng(8);
  for (int i = 0; i < 300; ++i) {
    std::string s = pda::sample_valid(rng.next_u64(), 60);
    CAPTURE(s);
    CHECK(parses(s));
    CHECK(tokenize(s).tokens.size() <= 61);  // max_len tokens + eos
  }
}

TEST_CASE("sample_valid respects weights") {
  std::vector<double> w(V().size(), 0.0);
  w[V().id("C")] = 1.0;
  w[V().eos()] = 0.2;
  for (int seed = 0; seed < 20; ++seed) {
    std::string s = pda::sample_valid(seed, 12, &w);
    CAPTURE(s);
    for (char c : s) CHECK(c == 'C');
  }
}
