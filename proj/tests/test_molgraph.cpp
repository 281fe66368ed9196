// Copyright 2026 allsmiles authors
// SPDX-License-Identifier: Apache-2.0
#include "allsmiles/molgraph.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "allsmiles/error.hpp"
#include "allsmiles/pda.hpp"
#include "allsmiles/periodic.hpp"
#include "allsmiles/rng.hpp"
#include "allsmiles/smiles.hpp"
#include "doctest.h"

using namespace allsmiles;

namespace {

Atom carbon() {
  Atom a;
  a.element = "C";
  return a;
}

// All-pairs shortest paths via Floyd-Warshall; independent of the BFS used
// by graph_diameter.
int diameter_oracle(const MolecularGraph& g) {
  const int n = g.atom_count();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (const Bond& b : g.bonds) d[b.a][b.b] = d[b.b][b.a] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  int best = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) best = std::max(best, d[i][j]);
  return best;
}

MolecularGraph permuted(const MolecularGraph& g, const std::vector<int>& perm) {
  std::vector<Atom> atoms(g.atom_count());
  for (int i = 0; i < g.atom_count(); ++i) atoms[perm[i]] = g.atoms[i];
  std::vector<Bond> bonds;
  for (const Bond& b : g.bonds)
    bonds.push_back({perm[b.a], perm[b.b], b.order});
  return build_graph(std::move(atoms), std::move(bonds));
}

}  // namespace

TEST_CASE("periodic table matches the bundled data file") {
  const PeriodicTable& t = PeriodicTable::bundled();
  CHECK(t.elements().size() == 98);
  CHECK(t.find("C")->mass == doctest::Approx(12.011));
  CHECK(t.find("H")->mass == doctest::Approx(1.008));
  CHECK(t.find("Cf")->atomic_number == 98);
  CHECK(t.find("Xx") == nullptr);

  PeriodicTable file = PeriodicTable::load(std::string(ALLSMILES_SOURCE_DIR) +
                                           "/data/periodic_table.tsv");
  REQUIRE(file.elements().size() == t.elements().size());
  for (std::size_t i = 0; i < t.elements().size(); ++i) {
    CHECK(file.elements()[i].symbol == t.elements()[i].symbol);
    CHECK(file.elements()[i].atomic_number == t.elements()[i].atomic_number);
    CHECK(file.elements()[i].mass == doctest::Approx(t.elements()[i].mass));
  }
}

TEST_CASE("build_graph validates structure") {
  SUBCASE("single atom") {
    MolecularGraph g = build_graph({carbon()}, {});
    CHECK(g.atom_count() == 1);
    CHECK(g.bond_count() == 0);
  }
  SUBCASE("duplicate bond") {
    try {
      build_graph({carbon(), carbon()},
                  {{0, 1, BondOrder::Triple}, {0, 1, BondOrder::Single}});
      FAIL("expected DuplicateBond");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DuplicateBond);
    }
  }
  SUBCASE("valence exceeded") {
    Atom o;
    o.element = "O";
    try {
      build_graph({o, o}, {{0, 1, BondOrder::Triple}});
      FAIL("expected ValenceExceeded");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ValenceExceeded);
    }
  }
  SUBCASE("disconnected") {
    try {
      build_graph({carbon(), carbon()}, {});
      FAIL("expected DisconnectedGraph");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DisconnectedGraph);
    }
  }
}

TEST_CASE("implicit hydrogen counts") {
  Atom c = carbon();
  CHECK(implicit_hydrogens(c, 0) == 4);
  Atom o;
  o.element = "O";
  CHECK(implicit_hydrogens(o, 2) == 0);
  Atom n;
  n.element = "N";
  CHECK(implicit_hydrogens(n, 4) == 1);  // promotes to valence 5
  CHECK(implicit_hydrogens(n, 3) == 0);
  Atom br;
  br.element = "C";
  br.explicit_h = 2;
  CHECK(implicit_hydrogens(br, 1) == 2);  // bracket atoms use their hcount
  Atom ar;
  ar.element = "N";
  ar.aromatic = true;
  CHECK(implicit_hydrogens(ar, 2) == 1);  // lowest valence, no promotion
  CHECK(implicit_hydrogens(ar, 4) == 0);
}

TEST_CASE("molecular weight") {
  CHECK(molecular_weight(parse("C").graph) == doctest::Approx(16.043).epsilon(1e-4));
  CHECK(molecular_weight(parse("CCO").graph) ==
        doctest::Approx(46.069).epsilon(1e-4));
  CHECK(molecular_weight(parse("[13CH4]").graph) ==
        doctest::Approx(17.035).epsilon(1e-4));

  // adding a terminal CH3 adds 14.027
  double d = molecular_weight(parse("CCCC").graph) -
             molecular_weight(parse("CCC").graph);
  CHECK(d == doctest::Approx(14.027).epsilon(1e-4));
}

TEST_CASE("graph diameter") {
  CHECK(graph_diameter(parse("CCCC").graph) == 3);
  CHECK(graph_diameter(parse("C1CC1").graph) == 1);
  CHECK(graph_diameter(parse("C").graph) == 0);

  SplitRng rng(7);
  for (int i = 0; i < 50; ++i) {
    std::string s = pda::sample_valid(rng.next_u64(), 30);
    MolecularGraph g = parse(s).graph;
    CHECK(graph_diameter(g) == diameter_oracle(g));
  }
}

TEST_CASE("ring count") {
  CHECK(ring_count(parse("CCO").graph) == 0);
  CHECK(ring_count(parse("C1CC1").graph) == 1);
  CHECK(ring_count(parse("C1CC1C1CC1").graph) == 2);
}

TEST_CASE("aromatic ring detection") {
  CHECK(aromatic_ring_present(parse("c1ccccc1").graph));
  CHECK_FALSE(aromatic_ring_present(parse("C1CCCCC1").graph));
  CHECK_FALSE(aromatic_ring_present(parse("cc").graph));  // aromatic chain, no ring
  CHECK(aromatic_ring_present(parse("CCc1ccncc1").graph));
}

TEST_CASE("canonical ranking basics") {
  MolecularGraph single = build_graph({carbon()}, {});
  CHECK(canonical_ranking(single) == std::vector<int>{0});

  CHECK(write_canonical(parse("OCC").graph) == write_canonical(parse("CCO").graph));

  std::string ring = write_canonical(parse("C1CC1").graph);
  for (const std::string& rot : {"C1CC1", "C1CC1"})
    CHECK(write_canonical(parse(rot).graph) == ring);
}

TEST_CASE("canonical form is permutation invariant") {
  std::vector<std::string> molecules = {
      "CCO",          "C1CC1",        "c1ccccc1",  "CC(C)C(=O)O",
      "C1CC1C1CC1",   "N1CCNCC1",     "O=C=O",     "CC(N)C(=O)NC(C)C",
      "c1c(Cl)cnc1",  "COCOC1CNCC(C)N1",
  };
  SplitRng rng(42);
  for (const std::string& s : molecules) {
    MolecularGraph g = parse(s).graph;
    std::string canon = write_canonical(g);
    const int n = g.atom_count();
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<int> perm(n);
      for (int i = 0; i < n; ++i) perm[i] = i;
      for (int i = n; i > 1; --i)
        std::swap(perm[i - 1], perm[rng.uniform_index(i)]);
      MolecularGraph pg = permuted(g, perm);
      CHECK(write_canonical(pg) == canon);
    }
  }
}

TEST_CASE("molecular weight is permutation invariant") {
  SplitRng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    std::string s = pda::sample_valid(rng.next_u64(), 25);
    MolecularGraph g = parse(s).graph;
    double w = molecular_weight(g);
    std::vector<int> perm(g.atom_count());
    for (int i = 0; i < g.atom_count(); ++i) perm[i] = i;
    for (int i = g.atom_count(); i > 1; --i)
      std::swap(perm[i - 1], perm[rng.uniform_index(i)]);
    CHECK(molecular_weight(permuted(g, perm)) == doctest::Approx(w));
  }
}
