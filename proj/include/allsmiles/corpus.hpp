// Copyright 2026 allsmiles authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace allsmiles {

// One corpus line: `SMILES[<TAB>prop1[<TAB>prop2...]]`. Empty property
// fields stay unset (semi-supervised).
struct CorpusRecord {
  std::string smiles;
  std::vector<std::optional<double>> properties;
};

std::vector<CorpusRecord> read_corpus(std::istream& in);
std::vector<CorpusRecord> read_corpus_file(const std::string& path);
void write_corpus(std::ostream& out, const std::vector<CorpusRecord>& records);

}  // namespace allsmiles
