// Copyright 2026 allsmiles authors
// SPDX-License-Identifier: Apache-2.0
#include "allsmiles/molgraph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>
#include <tuple>

#include "allsmiles/error.hpp"

namespace allsmiles {

double bond_order_value(BondOrder o) {
  switch (o) {
    case BondOrder::Single: return 1.0;
    case BondOrder::Double: return 2.0;
    case BondOrder::Triple: return 3.0;
    case BondOrder::Quadruple: return 4.0;
    case BondOrder::Aromatic: return 1.0;
    case BondOrder::Up: return 1.0;
    case BondOrder::Down: return 1.0;
  }
  return 1.0;
}

char bond_token_char(BondOrder o) {
  switch (o) {
    case BondOrder::Single: return '-';
    case BondOrder::Double: return '=';
    case BondOrder::Triple: return '#';
    case BondOrder::Quadruple: return '$';
    case BondOrder::Aromatic: return ':';
    case BondOrder::Up: return '/';
    case BondOrder::Down: return '\\';
  }
  return '-';
}

double MolecularGraph::bond_order_sum(int atom) const {
  double s = 0.0;
  for (const auto& [nbr, bi] : adjacency[atom]) s += bond_order_value(bonds[bi].order);
  return s;
}

MolecularGraph build_graph(std::vector<Atom> atoms, std::vector<Bond> bonds) {
  const int n = static_cast<int>(atoms.size());
  MolecularGraph g;
  g.atoms = std::move(atoms);
  g.bonds = std::move(bonds);
  g.adjacency.assign(n, {});

  std::set<std::pair<int, int>> seen;
  for (int bi = 0; bi < g.bond_count(); ++bi) {
    const Bond& b = g.bonds[bi];
    if (b.a < 0 || b.a >= n || b.b < 0 || b.b >= n || b.a == b.b)
      throw Error(ErrorKind::DuplicateBond, "bad bond endpoints");
    auto key = std::minmax(b.a, b.b);
    if (!seen.insert(key).second)
      throw Error(ErrorKind::DuplicateBond,
                  "repeated bond between atoms " + std::to_string(b.a) + " and " +
                      std::to_string(b.b));
    g.adjacency[b.a].emplace_back(b.b, bi);
    g.adjacency[b.b].emplace_back(b.a, bi);
  }

  // Connectivity: the grammar has no way to write disconnected molecules, so
  // a disconnected graph is a construction error.
  if (n > 0) {
    std::vector<char> vis(n, 0);
    std::deque<int> q{0};
    vis[0] = 1;
    int count = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (const auto& [v, bi] : g.adjacency[u])
        if (!vis[v]) {
          vis[v] = 1;
          ++count;
          q.push_back(v);
        }
    }
    if (count != n) throw Error(ErrorKind::DisconnectedGraph, "graph is not connected");
  }

  for (int i = 0; i < n; ++i) {
    const Atom& a = g.atoms[i];
    double used = g.bond_order_sum(i) + (a.explicit_h ? *a.explicit_h : 0);
    if (used > valence_bound(a.element, a.aromatic) + 1e-9)
      throw Error(ErrorKind::ValenceExceeded,
                  "atom " + std::to_string(i) + " (" + a.element + ") over valence",
                  i);
  }
  return g;
}

int implicit_hydrogens(const Atom& atom, double bond_order_sum) {
  if (atom.explicit_h) return *atom.explicit_h;
  std::vector<int> allowed = allowed_valences(atom.element);
  if (allowed.empty()) return 0;
  if (atom.aromatic) {
    double h = std::floor(allowed.front() - bond_order_sum);
    return h > 0 ? static_cast<int>(h) : 0;
  }
  for (int v : allowed) {
    if (v + 1e-9 >= bond_order_sum) return static_cast<int>(std::floor(v - bond_order_sum));
  }
  return 0;  // saturated past every allowed valence
}

double molecular_weight(const MolecularGraph& g) {
  const PeriodicTable& table = PeriodicTable::bundled();
  double total = 0.0;
  for (int i = 0; i < g.atom_count(); ++i) {
    const Atom& a = g.atoms[i];
    if (a.isotope) {
      total += PeriodicTable::isotope_mass(a.element, *a.isotope);
    } else {
      const Element* e = table.find(a.element);
      total += e ? e->mass : 0.0;
    }
    total += 1.008 * implicit_hydrogens(a, g.bond_order_sum(i));
  }
  return total;
}

int graph_diameter(const MolecularGraph& g) {
  const int n = g.atom_count();
  int diameter = 0;
  std::vector<int> dist(n);
  for (int src = 0; src < n; ++src) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[src] = 0;
    std::deque<int> q{src};
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (const auto& [v, bi] : g.adjacency[u])
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          diameter = std::max(diameter, dist[v]);
          q.push_back(v);
        }
    }
  }
  return diameter;
}

int ring_count(const MolecularGraph& g) {
  return g.bond_count() - g.atom_count() + 1;
}

bool aromatic_ring_present(const MolecularGraph& g) {
  // Cycle rank of the aromatic-bond subgraph: E - V + C over atoms touched
  // by at least one aromatic bond.
  std::vector<char> touched(g.atom_count(), 0);
  int edges = 0;
  for (const Bond& b : g.bonds)
    if (b.order == BondOrder::Aromatic) {
      ++edges;
      touched[b.a] = touched[b.b] = 1;
    }
  if (edges == 0) return false;
  int verts = 0;
  std::vector<int> comp(g.atom_count(), -1);
  int ncomp = 0;
  for (int i = 0; i < g.atom_count(); ++i) {
    if (!touched[i]) continue;
    ++verts;
    if (comp[i] >= 0) continue;
    comp[i] = ncomp;
    std::deque<int> q{i};
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (const auto& [v, bi] : g.adjacency[u])
        if (g.bonds[bi].order == BondOrder::Aromatic && comp[v] < 0) {
          comp[v] = ncomp;
          q.push_back(v);
        }
    }
    ++ncomp;
  }
  return edges - verts + ncomp >= 1;
}

namespace {

// Initial refinement key; bond labels join during refinement so that atoms
// differing only in incident bond orders separate.
std::tuple<std::string, int, int, int, int, std::string, int, int> initial_key(
    const Atom& a, int degree) {
  return {a.element,
          a.charge,
          a.isotope.value_or(0),
          a.aromatic ? 1 : 0,
          degree,
          a.chirality.value_or(""),
          a.explicit_h.value_or(-1),
          a.atom_class.value_or(-1)};
}

std::vector<int> refine(const MolecularGraph& g, std::vector<int> rank) {
  const int n = g.atom_count();
  while (true) {
    // key = (own rank, sorted incident (bond order, neighbor rank))
    std::vector<std::pair<int, std::vector<std::pair<int, int>>>> keys(n);
    for (int i = 0; i < n; ++i) {
      keys[i].first = rank[i];
      for (const auto& [v, bi] : g.adjacency[i])
        keys[i].second.emplace_back(static_cast<int>(g.bonds[bi].order), rank[v]);
      std::sort(keys[i].second.begin(), keys[i].second.end());
    }
    std::map<std::pair<int, std::vector<std::pair<int, int>>>, int> order;
    for (int i = 0; i < n; ++i) order[keys[i]] = 0;
    int next = 0;
    for (auto& [k, r] : order) r = next++;
    std::vector<int> refined(n);
    for (int i = 0; i < n; ++i) refined[i] = order[keys[i]];
    if (refined == rank) return rank;
    rank = std::move(refined);
  }
}

}  // namespace

std::vector<int> canonical_ranking(const MolecularGraph& g) {
  const int n = g.atom_count();
  if (n == 0) return {};

  std::vector<int> rank(n);
  {
    std::map<std::tuple<std::string, int, int, int, int, std::string, int, int>, int>
        order;
    for (int i = 0; i < n; ++i)
      order[initial_key(g.atoms[i], static_cast<int>(g.adjacency[i].size()))] = 0;
    int next = 0;
    for (auto& [k, r] : order) r = next++;
    for (int i = 0; i < n; ++i)
      rank[i] = order[initial_key(g.atoms[i], static_cast<int>(g.adjacency[i].size()))];
  }
  rank = refine(g, rank);

  // Individualize remaining ties: distinguish the smallest-index member of
  // the lowest tied class, then re-refine, until ranks form a permutation.
  while (true) {
    std::vector<int> count(n, 0);
    for (int r : rank) ++count[r];
    int tied_rank = -1;
    for (int r = 0; r < n; ++r)
      if (count[r] > 1) {
        tied_rank = r;
        break;
      }
    if (tied_rank < 0) break;
    int chosen = -1;
    for (int i = 0; i < n; ++i)
      if (rank[i] == tied_rank) {
        chosen = i;
        break;
      }
    for (int i = 0; i < n; ++i) {
      rank[i] *= 2;
      if (i == chosen) rank[i] -= 1;
    }
    rank = refine(g, rank);
  }
  return rank;
}

}  // namespace allsmiles
