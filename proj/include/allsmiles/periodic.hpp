// Copyright 2026 allsmiles authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace allsmiles {

struct Element {
  std::string symbol;
  int atomic_number = 0;
  double mass = 0.0;  // standard atomic weight, unified atomic mass units
};

// The 98 naturally occurring elements, H through Cf.
class PeriodicTable {
 public:
  PeriodicTable() = default;
  explicit PeriodicTable(std::vector<Element> elements)
      : elements_(std::move(elements)) {}

  // Compiled-in copy of data/periodic_table.tsv.
  static const PeriodicTable& bundled();

  // Loads the TSV interface format: `symbol<TAB>atomic_number<TAB>mass`.
  static PeriodicTable load(const std::string& path);

  const Element* find(std::string_view symbol) const;
  bool contains(std::string_view symbol) const { return find(symbol) != nullptr; }
  const std::vector<Element>& elements() const { return elements_; }

  // Mass of a specific isotope. Falls back to the mass number itself when the
  // isotope is not in the bundled fine-mass table.
  static double isotope_mass(std::string_view symbol, int mass_number);

 private:
  std::vector<Element> elements_;
};

// Allowed-valence list for an element; empty means unbounded.
std::vector<int> allowed_valences(std::string_view symbol);

// Upper bond-order budget used for validation: lowest allowed valence for
// aromatic atoms, largest otherwise. Unbounded elements report a huge value.
double valence_bound(std::string_view symbol, bool aromatic);

// Elements that may appear as lowercase aromatic tokens.
bool aromatic_capable(std::string_view symbol);

}  // namespace allsmiles
