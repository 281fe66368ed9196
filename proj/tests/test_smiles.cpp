// Copyright 2026 allsmiles authors
// SPDX-License-Identifier: Apache-2.0
#include "allsmiles/smiles.hpp"

#include <set>
#include <string>

#include "allsmiles/error.hpp"
#include "allsmiles/pda.hpp"
#include "allsmiles/rng.hpp"
#include "doctest.h"

using namespace allsmiles;

namespace {

ErrorKind parse_error_kind(const std::string& s) {
  try {
    parse(s);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected a parse error for ", s);
  return ErrorKind::SyntaxError;
}

}  // namespace

TEST_CASE("tokenize basics") {
  TokenStream ts = tokenize("c1c(Cl)cnc1");
  REQUIRE(ts.tokens.size() == 11);  // 10 tokens + eos
  CHECK(ts.tokens[0].text == "c");
  CHECK(ts.tokens[1].text == "1");
  CHECK(ts.tokens[4].text == "Cl");
  CHECK(ts.tokens[4].kind == TokenKind::OrganicAtom);
  CHECK(ts.tokens[7].text == "n");
  CHECK(ts.tokens.back().kind == TokenKind::Eos);
  CHECK(ts.detokenize() == "c1c(Cl)cnc1");

  TokenStream c = tokenize("C");
  REQUIRE(c.tokens.size() == 2);
  CHECK(c.tokens[0].kind == TokenKind::OrganicAtom);
  CHECK(c.tokens[1].kind == TokenKind::Eos);

  try {
    tokenize("C[");
    FAIL("expected UnterminatedBracket");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnterminatedBracket);
  }

  try {
    tokenize("C?C");
    FAIL("expected UnknownCharacter");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownCharacter);
    CHECK(e.pos() == 1);
  }
}

TEST_CASE("tokenize brackets") {
  TokenStream ts = tokenize("[13CH4]");
  REQUIRE(ts.tokens.size() == 2);
  const Token& t = ts.tokens[0];
  CHECK(t.kind == TokenKind::BracketAtom);
  CHECK(t.atom.element == "C");
  CHECK(t.atom.isotope == 13);
  CHECK(t.atom.explicit_h == 4);

  const Token& chi = tokenize("[C@@H](F)(Cl)Br").tokens[0];
  CHECK(chi.atom.chirality == "@@");
  CHECK(chi.atom.explicit_h == 1);

  const Token& complex = tokenize("[2H+]").tokens[0];
  CHECK(complex.atom.element == "H");
  CHECK(complex.atom.isotope == 2);
  CHECK(complex.atom.charge == 1);

  const Token& neg = tokenize("[O-]").tokens[0];
  CHECK(neg.atom.charge == -1);
  CHECK(neg.atom.explicit_h == 0);

  const Token& cls = tokenize("[NH4+:23]").tokens[0];
  CHECK(cls.atom.atom_class == 23);
  CHECK(cls.atom.charge == 1);
  CHECK(cls.atom.explicit_h == 4);

  const Token& se = tokenize("[se]").tokens[0];
  CHECK(se.atom.element == "Se");
  CHECK(se.atom.aromatic);
}

TEST_CASE("vocabulary ids round-trip token text") {
  const Vocabulary& v = Vocabulary::instance();
  for (const std::string& s :
       {std::string("c1c(Cl)cnc1"), std::string("[13CH4]C(=O)[O-]"),
        std::string("C%12CC%12"), std::string("[C@@TB15H2+2:5]")}) {
    TokenStream ts = tokenize(s);
    std::string rebuilt;
    for (int id : ts.vocabulary_ids) rebuilt += v.text(id);
    CHECK(rebuilt == s);
    CHECK(ts.vocabulary_ids.back() == v.eos());
  }
}

TEST_CASE("parse builds the right graphs") {
  ParseResult r = parse("c1c(Cl)cnc1");
  CHECK(r.graph.atom_count() == 6);
  CHECK(r.graph.bond_count() == 6);
  CHECK(ring_count(r.graph) == 1);
  CHECK(r.alignment.entries.size() == 6);

  // ring bond between first and last ring atoms is aromatic
  bool found = false;
  for (const Bond& b : r.graph.bonds)
    if ((b.a == 0 && b.b == 5) || (b.a == 5 && b.b == 0)) {
      found = true;
      CHECK(b.order == BondOrder::Aromatic);
    }
  CHECK(found);

  CHECK(parse("N(=O)=O").graph.bond_count() == 2);
  CHECK(parse("C(C)(C)(C)C").graph.atom_count() == 5);
}

TEST_CASE("parse errors") {
  CHECK(parse_error_kind("C1CC") == ErrorKind::UnclosedRing);
  CHECK(parse_error_kind("C=1CCC-1") == ErrorKind::RingBondMismatch);
  CHECK(parse_error_kind("C(") == ErrorKind::SyntaxError);
  CHECK(parse_error_kind("C()C") == ErrorKind::SyntaxError);
  CHECK(parse_error_kind(")C") == ErrorKind::SyntaxError);
  CHECK(parse_error_kind("") == ErrorKind::SyntaxError);
  CHECK(parse_error_kind("=C") == ErrorKind::SyntaxError);
  CHECK(parse_error_kind("C==C") == ErrorKind::SyntaxError);
  CHECK(parse_error_kind("C11") == ErrorKind::SyntaxError);
  CHECK(parse_error_kind("C1C1") == ErrorKind::DuplicateBond);
  CHECK(parse_error_kind("O(C)(C)C") == ErrorKind::ValenceExceeded);
  CHECK(parse_error_kind("C(C)1CC1") == ErrorKind::SyntaxError);  // ring after branch
  CHECK(parse_error_kind("C((C))") == ErrorKind::SyntaxError);
  CHECK(parse_error_kind("FF=F") == ErrorKind::ValenceExceeded);
}

TEST_CASE("ring bond label agreement") {
  CHECK(parse("C=1CCC=1").graph.bonds.back().order == BondOrder::Double);
  CHECK(parse("C=1CCC1").graph.bonds.back().order == BondOrder::Double);
  CHECK(parse("C1CCC=1").graph.bonds.back().order == BondOrder::Double);
  CHECK(parse("c1ccccc1").graph.bonds.back().order == BondOrder::Aromatic);
}

TEST_CASE("same_molecule") {
  CHECK(same_molecule("COCOC1CNCC(C)N1", "CC1NC(CNC1)OCOC"));
  CHECK_FALSE(same_molecule("COCOC1CNCC(C)N1", "CCCCC(CCCC)CCCC"));
  for (const std::string& s :
       {std::string("C"), std::string("c1c(Cl)cnc1"), std::string("CC(=O)O"),
        std::string("[13CH4]")})
    CHECK(same_molecule(s, s));
}

TEST_CASE("write_canonical") {
  MolecularGraph single = build_graph({[] {
    Atom a;
    a.element = "C";
    return a;
  }()}, {});
  CHECK(write_canonical(single) == "C");

  CHECK(write_canonical(parse("OCC").graph) == write_canonical(parse("CCO").graph));

  std::string tri = write_canonical(parse("C1CC1").graph);
  CHECK(tri.size() == 5);
  ParseResult back = parse(tri);
  CHECK(back.graph.atom_count() == 3);
  CHECK(ring_count(back.graph) == 1);
}

TEST_CASE("round trips through canonical and random writers") {
  SplitRng rng(3);
  for (int i = 0; i < 100; ++i) {
    std::string s = pda::sample_valid(rng.next_u64(), 30);
    CAPTURE(s);
    ParseResult r = parse(s);
    std::string canon = write_canonical(r.graph);
    CHECK(same_molecule(s, canon));
    for (const auto& [rand_s, align] : enumerate_random(r.graph, 99 + i, 5)) {
      CAPTURE(rand_s);
      CHECK(same_molecule(rand_s, canon));
    }
  }
}

TEST_CASE("alignment is an element-preserving bijection") {
  SplitRng rng(5);
  for (int i = 0; i < 40; ++i) {
    std::string s = pda::sample_valid(rng.next_u64(), 25);
    MolecularGraph g = parse(s).graph;
    for (const auto& [rand_s, align] : enumerate_random(g, 17 + i, 3)) {
      TokenStream ts = tokenize(rand_s);
      CHECK(align.entries.size() == static_cast<std::size_t>(g.atom_count()));
      std::set<int> atoms_seen, tokens_seen;
      for (const auto& [tok_idx, atom_idx] : align.entries) {
        atoms_seen.insert(atom_idx);
        tokens_seen.insert(tok_idx);
        REQUIRE(tok_idx < static_cast<int>(ts.tokens.size()));
        CHECK(ts.tokens[tok_idx].atom.element == g.atoms[atom_idx].element);
      }
      CHECK(atoms_seen.size() == align.entries.size());
      CHECK(tokens_seen.size() == align.entries.size());
    }
  }
}

TEST_CASE("enumerate_random explores exactly the reachable strings of CCO") {
  MolecularGraph g = parse("CCO").graph;
  auto samples = enumerate_random(g, 123, 40);
  std::set<std::string> distinct;
  for (const auto& [s, a] : samples) distinct.insert(s);
  CHECK(distinct == std::set<std::string>{"CCO", "OCC", "C(C)O", "C(O)C"});
}

TEST_CASE("enumerate_random on a single atom") {
  MolecularGraph g = parse("C").graph;
  auto samples = enumerate_random(g, 9, 3);
  REQUIRE(samples.size() == 3);
  for (const auto& [s, a] : samples) CHECK(s == "C");
}

TEST_CASE("enumerate_random is deterministic in the seed") {
  MolecularGraph g = parse("CC(N)C(=O)O").graph;
  auto a = enumerate_random(g, 77, 10);
  auto b = enumerate_random(g, 77, 10);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].first == b[i].first);
  auto c = enumerate_random(g, 78, 10);
  bool any_diff = false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].first != c[i].first) any_diff = true;
  CHECK(any_diff);
}

TEST_CASE("edit similarity") {
  CHECK(edit_similarity("CCO", "CCO") == doctest::Approx(1.0));
  CHECK(edit_similarity("", "CCO") == doctest::Approx(0.0));
  CHECK(edit_similarity("", "") == doctest::Approx(1.0));
  // the figure's "30% similar" pair; our Levenshtein ratio lands nearby
  double sim = edit_similarity("COCOC1CNCC(C)N1", "CC1NC(CNC1)OCOC");
  CHECK(sim > 0.15);
  CHECK(sim < 0.5);
}
