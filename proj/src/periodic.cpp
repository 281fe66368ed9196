// Copyright 2026 allsmiles authors
// SPDX-License-Identifier: Apache-2.0
#include "allsmiles/periodic.hpp"

#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include "allsmiles/error.hpp"

namespace allsmiles {
namespace {

struct Row {
  const char* symbol;
  int z;
  double mass;
};

// Standard atomic weights to 3 decimals; the mass of the longest-lived
// isotope for elements without a stable one.
constexpr Row kElements[] = {
    {"H", 1, 1.008},    {"He", 2, 4.003},   {"Li", 3, 6.941},
    {"Be", 4, 9.012},   {"B", 5, 10.811},   {"C", 6, 12.011},
    {"N", 7, 14.007},   {"O", 8, 15.999},   {"F", 9, 18.998},
    {"Ne", 10, 20.180}, {"Na", 11, 22.990}, {"Mg", 12, 24.305},
    {"Al", 13, 26.982}, {"Si", 14, 28.086}, {"P", 15, 30.974},
    {"S", 16, 32.066},  {"Cl", 17, 35.453}, {"Ar", 18, 39.948},
    {"K", 19, 39.098},  {"Ca", 20, 40.078}, {"Sc", 21, 44.956},
    {"Ti", 22, 47.867}, {"V", 23, 50.942},  {"Cr", 24, 51.996},
    {"Mn", 25, 54.938}, {"Fe", 26, 55.845}, {"Co", 27, 58.933},
    {"Ni", 28, 58.693}, {"Cu", 29, 63.546}, {"Zn", 30, 65.380},
    {"Ga", 31, 69.723}, {"Ge", 32, 72.630}, {"As", 33, 74.922},
    {"Se", 34, 78.971}, {"Br", 35, 79.904}, {"Kr", 36, 83.798},
    {"Rb", 37, 85.468}, {"Sr", 38, 87.620}, {"Y", 39, 88.906},
    {"Zr", 40, 91.224}, {"Nb", 41, 92.906}, {"Mo", 42, 95.950},
    {"Tc", 43, 97.907}, {"Ru", 44, 101.070}, {"Rh", 45, 102.906},
    {"Pd", 46, 106.420}, {"Ag", 47, 107.868}, {"Cd", 48, 112.414},
    {"In", 49, 114.818}, {"Sn", 50, 118.710}, {"Sb", 51, 121.760},
    {"Te", 52, 127.600}, {"I", 53, 126.904},  {"Xe", 54, 131.293},
    {"Cs", 55, 132.905}, {"Ba", 56, 137.327}, {"La", 57, 138.905},
    {"Ce", 58, 140.116}, {"Pr", 59, 140.908}, {"Nd", 60, 144.242},
    {"Pm", 61, 144.913}, {"Sm", 62, 150.360}, {"Eu", 63, 151.964},
    {"Gd", 64, 157.250}, {"Tb", 65, 158.925}, {"Dy", 66, 162.500},
    {"Ho", 67, 164.930}, {"Er", 68, 167.259}, {"Tm", 69, 168.934},
    {"Yb", 70, 173.045}, {"Lu", 71, 174.967}, {"Hf", 72, 178.486},
    {"Ta", 73, 180.948}, {"W", 74, 183.840},  {"Re", 75, 186.207},
    {"Os", 76, 190.230}, {"Ir", 77, 192.217}, {"Pt", 78, 195.084},
    {"Au", 79, 196.967}, {"Hg", 80, 200.592}, {"Tl", 81, 204.383},
    {"Pb", 82, 207.200}, {"Bi", 83, 208.980}, {"Po", 84, 208.982},
    {"At", 85, 209.987}, {"Rn", 86, 222.018}, {"Fr", 87, 223.020},
    {"Ra", 88, 226.025}, {"Ac", 89, 227.028}, {"Th", 90, 232.038},
    {"Pa", 91, 231.036}, {"U", 92, 238.029},  {"Np", 93, 237.048},
    {"Pu", 94, 244.064}, {"Am", 95, 243.061}, {"Cm", 96, 247.070},
    {"Bk", 97, 247.070}, {"Cf", 98, 251.080},
};

struct IsotopeRow {
  const char* symbol;
  int mass_number;
  double mass;
};

// Fine masses for isotopes commonly written in SMILES; anything else falls
// back to the integer mass number.
constexpr IsotopeRow kIsotopes[] = {
    {"H", 1, 1.008},   {"H", 2, 2.014},   {"H", 3, 3.016},
    {"B", 10, 10.013}, {"B", 11, 11.009}, {"C", 12, 12.000},
    {"C", 13, 13.003}, {"C", 14, 14.003}, {"N", 14, 14.003},
    {"N", 15, 15.000}, {"O", 16, 15.995}, {"O", 17, 16.999},
    {"O", 18, 17.999}, {"F", 19, 18.998}, {"P", 31, 30.974},
    {"S", 32, 31.972}, {"S", 33, 32.971}, {"S", 34, 33.968},
    {"S", 36, 35.967}, {"Cl", 35, 34.969}, {"Cl", 37, 36.966},
    {"Br", 79, 78.918}, {"Br", 81, 80.916}, {"I", 127, 126.904},
    {"Se", 76, 75.919}, {"Se", 77, 76.920}, {"Se", 78, 77.917},
    {"Se", 80, 79.917}, {"Se", 82, 81.917}, {"As", 75, 74.922},
    {"Si", 28, 27.977}, {"Si", 29, 28.976}, {"Si", 30, 29.974},
};

PeriodicTable make_bundled() {
  std::vector<Element> e;
  e.reserve(std::size(kElements));
  for (const Row& r : kElements) e.push_back({r.symbol, r.z, r.mass});
  return PeriodicTable(std::move(e));
}

}  // namespace

const PeriodicTable& PeriodicTable::bundled() {
  static const PeriodicTable table = make_bundled();
  return table;
}

PeriodicTable PeriodicTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
  std::vector<Element> e;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    Element el;
    std::string zs, ms;
    if (!std::getline(ss, el.symbol, '\t') || !std::getline(ss, zs, '\t') ||
        !std::getline(ss, ms)) {
      throw Error(ErrorKind::IoError, "malformed periodic table line: " + line);
    }
    el.atomic_number = std::atoi(zs.c_str());
    el.mass = std::atof(ms.c_str());
    e.push_back(el);
  }
  return PeriodicTable(std::move(e));
}

const Element* PeriodicTable::find(std::string_view symbol) const {
  for (const Element& e : elements_)
    if (e.symbol == symbol) return &e;
  return nullptr;
}

double PeriodicTable::isotope_mass(std::string_view symbol, int mass_number) {
  for (const IsotopeRow& r : kIsotopes)
    if (r.mass_number == mass_number && symbol == r.symbol) return r.mass;
  return static_cast<double>(mass_number);
}

std::vector<int> allowed_valences(std::string_view symbol) {
  if (symbol == "B") return {3};
  if (symbol == "C") return {4};
  if (symbol == "N") return {3, 5};
  if (symbol == "O") return {2};
  if (symbol == "P") return {3, 5};
  if (symbol == "S") return {2, 4, 6};
  if (symbol == "F" || symbol == "Cl" || symbol == "Br" || symbol == "I")
    return {1};
  if (symbol == "H") return {1};
  return {};  // unbounded
}

double valence_bound(std::string_view symbol, bool aromatic) {
  std::vector<int> v = allowed_valences(symbol);
  if (v.empty()) return std::numeric_limits<double>::infinity();
  return aromatic ? static_cast<double>(v.front())
                  : static_cast<double>(v.back());
}

bool aromatic_capable(std::string_view symbol) {
  return symbol == "B" || symbol == "C" || symbol == "N" || symbol == "O" ||
         symbol == "P" || symbol == "S" || symbol == "Se" || symbol == "As";
}

}  // namespace allsmiles
