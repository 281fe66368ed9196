// Copyright 2026 allsmiles authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace allsmiles {

enum class ErrorKind {
  UnknownCharacter,
  UnterminatedBracket,
  SyntaxError,
  UnclosedRing,
  RingBondMismatch,
  RingDigitsExhausted,
  ValenceExceeded,
  DisconnectedGraph,
  DuplicateBond,
  IllegalToken,
  ShapeMismatch,
  NonScalarRoot,
  EmptySequence,
  EmptyKeys,
  EmptyTargets,
  MoleculeMismatch,
  AlignmentMissing,
  MaxLengthExceeded,
  NoValidDecode,
  CorpusEmpty,
  NonFiniteLoss,
  BadConfig,
  IoError,
};

const char* error_kind_name(ErrorKind k);

// Single exception type for the library; `kind` is what tests and the CLI
// dispatch on, `pos` is a character offset where that makes sense.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string msg, std::ptrdiff_t pos = -1)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg),
        kind_(kind),
        pos_(pos) {}

  ErrorKind kind() const { return kind_; }
  std::ptrdiff_t pos() const { return pos_; }

 private:
  ErrorKind kind_;
  std::ptrdiff_t pos_;
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::UnknownCharacter: return "UnknownCharacter";
    case ErrorKind::UnterminatedBracket: return "UnterminatedBracket";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnclosedRing: return "UnclosedRing";
    case ErrorKind::RingBondMismatch: return "RingBondMismatch";
    case ErrorKind::RingDigitsExhausted: return "RingDigitsExhausted";
    case ErrorKind::ValenceExceeded: return "ValenceExceeded";
    case ErrorKind::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorKind::DuplicateBond: return "DuplicateBond";
    case ErrorKind::IllegalToken: return "IllegalToken";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NonScalarRoot: return "NonScalarRoot";
    case ErrorKind::EmptySequence: return "EmptySequence";
    case ErrorKind::EmptyKeys: return "EmptyKeys";
    case ErrorKind::EmptyTargets: return "EmptyTargets";
    case ErrorKind::MoleculeMismatch: return "MoleculeMismatch";
    case ErrorKind::AlignmentMissing: return "AlignmentMissing";
    case ErrorKind::MaxLengthExceeded: return "MaxLengthExceeded";
    case ErrorKind::NoValidDecode: return "NoValidDecode";
    case ErrorKind::CorpusEmpty: return "CorpusEmpty";
    case ErrorKind::NonFiniteLoss: return "NonFiniteLoss";
    case ErrorKind::BadConfig: return "BadConfig";
    case ErrorKind::IoError: return "IoError";
  }
  return "Error";
}

}  // namespace allsmiles
