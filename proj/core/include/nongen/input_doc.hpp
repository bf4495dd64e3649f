#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nongen/group.hpp"
#include "nongen/word.hpp"

namespace nongen {

// Parse failure with a 1-based source position for diagnostics.
struct DocParseError : Error {
  DocParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line(line),
        column(column) {}
  std::size_t line = 1;
  std::size_t column = 1;
};

// Parsed `.grp` document:
//   rank K            -- required first
//   letters xyz       -- optional generator names
//   delta D           -- optional hyperbolicity constant
//   NAME = WORD       -- named word binding
//   subgroup NAME = W1 W2 ...
// `#` starts a comment; names must be unique.
struct InputDocument {
  GroupDescriptor descriptor;
  std::vector<std::pair<std::string, Word>> bindings;
  std::vector<std::pair<std::string, std::vector<Word>>> subgroups;

  const Word* find_binding(std::string_view name) const;
  const std::vector<Word>* find_subgroup(std::string_view name) const;
};

InputDocument parse_input_document(std::string_view text);

}  // namespace nongen
