#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "ccodes/transition_sequence.hpp"

namespace ccodes::cli {

// One parsed code file.  Format: UTF-8 text; '#' starts a comment; optional
// header tokens "d=<int>" and "k=<int>" before any label; remaining tokens
// are whitespace- or comma-separated 1-based labels.  Without a d= header
// the dimension is the largest label.
struct CodeFile {
  TransitionSequence sequence;
  std::optional<int> declared_k;
};

CodeFile parse_code(std::istream& in);
CodeFile parse_code(const std::string& text);

// Throws parse_error when the file cannot be read.
CodeFile load_code(const std::string& path);

// Header line, then the labels: the two identical halves of a symmetric
// sequence on two lines, otherwise wrapped.  parse(serialize(t)) == t.
std::string serialize_code(const TransitionSequence& t, std::optional<int> k = {});

void save_code(const std::string& path, const TransitionSequence& t,
               std::optional<int> k = {});

}  // namespace ccodes::cli
