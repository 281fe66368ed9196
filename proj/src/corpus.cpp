// Copyright 2026 allsmiles authors
// SPDX-License-Identifier: Apache-2.0
#include "allsmiles/corpus.hpp"

#include <fstream>
#include <sstream>

#include "allsmiles/error.hpp"

namespace allsmiles {

std::vector<CorpusRecord> read_corpus(std::istream& in) {
  std::vector<CorpusRecord> records;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    CorpusRecord rec;
    std::size_t start = 0;
    int field = 0;
    while (start <= line.size()) {
      std::size_t tab = line.find('\t', start);
      std::string cell = line.substr(
          start, tab == std::string::npos ? std::string::npos : tab - start);
      if (field == 0) {
        rec.smiles = cell;
      } else if (cell.empty()) {
        rec.properties.push_back(std::nullopt);
      } else {
        rec.properties.push_back(std::stod(cell));
      }
      ++field;
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<CorpusRecord> read_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open corpus " + path);
  return read_corpus(in);
}

void write_corpus(std::ostream& out, const std::vector<CorpusRecord>& records) {
  for (const CorpusRecord& r : records) {
    out << r.smiles;
    for (const auto& p : r.properties) {
      out << '\t';
      if (p) out << *p;
    }
    out << '\n';
  }
}

}  // namespace allsmiles
