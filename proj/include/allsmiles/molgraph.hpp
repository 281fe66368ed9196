// Copyright 2026 allsmiles authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "allsmiles/periodic.hpp"

namespace allsmiles {

enum class BondOrder { Single, Double, Triple, Quadruple, Aromatic, Up, Down };

// Bond order contribution to an atom's valence budget. Aromatic, up and down
// bonds all count one.
double bond_order_value(BondOrder o);

char bond_token_char(BondOrder o);

struct Atom {
  std::string element;
  bool aromatic = false;
  std::optional<int> isotope;
  int charge = 0;
  std::optional<int> explicit_h;  // present exactly for bracket-originated atoms
  std::optional<std::string> chirality;
  std::optional<int> atom_class;
};

struct Bond {
  int a = 0;
  int b = 0;
  BondOrder order = BondOrder::Single;
};

struct MolecularGraph {
  std::vector<Atom> atoms;
  std::vector<Bond> bonds;
  // adjacency[i] = list of (neighbor atom index, bond index)
  std::vector<std::vector<std::pair<int, int>>> adjacency;

  int atom_count() const { return static_cast<int>(atoms.size()); }
  int bond_count() const { return static_cast<int>(bonds.size()); }
  double bond_order_sum(int atom) const;
};

// Validates connectivity, bond uniqueness and valence; builds adjacency.
MolecularGraph build_graph(std::vector<Atom> atoms, std::vector<Bond> bonds);

// Hydrogens filling the remaining valence. Bracket atoms return their
// explicit hcount; organic-subset atoms fill up to the smallest allowed
// valence that covers the bond-order sum (aromatic atoms use their lowest
// allowed valence and never promote).
int implicit_hydrogens(const Atom& atom, double bond_order_sum);

double molecular_weight(const MolecularGraph& g);

// Maximum eccentricity over atoms, in bonds; 0 for a single atom.
int graph_diameter(const MolecularGraph& g);

// Cycle rank: bonds - atoms + 1 for a connected graph.
int ring_count(const MolecularGraph& g);

// True when the subgraph of aromatic bonds contains a cycle.
bool aromatic_ring_present(const MolecularGraph& g);

// Deterministic total order over atoms via iterative neighborhood refinement.
// ranking[i] = canonical rank of atom i (0-based, rank 0 first).
std::vector<int> canonical_ranking(const MolecularGraph& g);

}  // namespace allsmiles
