#include "nongen/input_doc.hpp"

#include <cctype>
#include <optional>

namespace nongen {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    std::size_t start = i;
    while (i < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[i])) &&
           line[i] != '#')
      ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
    return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

std::uint64_t parse_unsigned(const Token& tok, std::size_t line_no,
                             const char* what) {
  if (tok.text.empty()) throw DocParseError(what, line_no, tok.column);
  std::uint64_t v = 0;
  for (char c : tok.text) {
    if (c < '0' || c > '9')
      throw DocParseError(std::string(what) + ": expected a number, got '" +
                              tok.text + "'",
                          line_no, tok.column);
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
    if (v > 1000000)
      throw DocParseError(std::string(what) + ": number out of range", line_no,
                          tok.column);
  }
  return v;
}

}  // namespace

const Word* InputDocument::find_binding(std::string_view name) const {
  for (const auto& [n, w] : bindings)
    if (n == name) return &w;
  return nullptr;
}

const std::vector<Word>* InputDocument::find_subgroup(
    std::string_view name) const {
  for (const auto& [n, gens] : subgroups)
    if (n == name) return &gens;
  return nullptr;
}

InputDocument parse_input_document(std::string_view text) {
  std::optional<std::uint64_t> rank;
  std::string letters;
  std::uint64_t delta = 0;
  bool descriptor_built = false;
  std::size_t desc_line = 1, desc_col = 1;  // last rank/letters/delta line
  InputDocument doc;
  std::vector<std::string> names;

  auto build_descriptor = [&]() {
    try {
      return GroupDescriptor(static_cast<unsigned>(*rank), letters,
                             static_cast<unsigned>(delta));
    } catch (const Error& e) {
      throw DocParseError(e.what(), desc_line, desc_col);
    }
  };
  auto ensure_descriptor = [&](std::size_t line_no, std::size_t column) {
    if (descriptor_built) return;
    if (!rank)
      throw DocParseError("a `rank K` line must precede word definitions",
                          line_no, column);
    doc.descriptor = build_descriptor();
    descriptor_built = true;
  };
  auto claim_name = [&](const std::string& name, std::size_t line_no,
                        std::size_t column) {
    if (!valid_name(name))
      throw DocParseError("invalid name '" + name + "'", line_no, column);
    for (const auto& n : names)
      if (n == name)
        throw DocParseError("duplicate name '" + name + "'", line_no, column);
    names.push_back(name);
  };
  auto parse_word = [&](const Token& tok, std::size_t line_no) {
    try {
      return Word::parse(doc.descriptor, tok.text);
    } catch (const ParseError& e) {
      throw DocParseError(e.what(), line_no, tok.column + e.offset);
    }
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    std::vector<Token> toks = tokenize(line);
    if (toks.empty()) {
      if (pos > text.size()) break;
      continue;
    }

    const std::string& head = toks[0].text;
    if (head == "rank") {
      if (rank)
        throw DocParseError("duplicate `rank` line", line_no, toks[0].column);
      if (descriptor_built)
        throw DocParseError("`rank` must come before definitions", line_no,
                            toks[0].column);
      if (toks.size() != 2)
        throw DocParseError("expected `rank K`", line_no, toks[0].column);
      rank = parse_unsigned(toks[1], line_no, "rank");
      desc_line = line_no;
      desc_col = toks[0].column;
    } else if (head == "letters") {
      if (descriptor_built)
        throw DocParseError("`letters` must come before definitions", line_no,
                            toks[0].column);
      if (toks.size() != 2)
        throw DocParseError("expected `letters NAMES`", line_no,
                            toks[0].column);
      letters = toks[1].text;
      desc_line = line_no;
      desc_col = toks[1].column;
    } else if (head == "delta") {
      if (descriptor_built)
        throw DocParseError("`delta` must come before definitions", line_no,
                            toks[0].column);
      if (toks.size() != 2)
        throw DocParseError("expected `delta D`", line_no, toks[0].column);
      delta = parse_unsigned(toks[1], line_no, "delta");
    } else if (head == "subgroup") {
      if (toks.size() < 4 || toks[2].text != "=")
        throw DocParseError("expected `subgroup NAME = W1 W2 ...`", line_no,
                            toks[0].column);
      ensure_descriptor(line_no, toks[0].column);
      claim_name(toks[1].text, line_no, toks[1].column);
      std::vector<Word> gens;
      for (std::size_t i = 3; i < toks.size(); ++i)
        gens.push_back(parse_word(toks[i], line_no));
      doc.subgroups.emplace_back(toks[1].text, std::move(gens));
    } else if (toks.size() >= 2 && toks[1].text == "=") {
      if (toks.size() != 3)
        throw DocParseError("expected `NAME = WORD`", line_no, toks[0].column);
      ensure_descriptor(line_no, toks[0].column);
      claim_name(toks[0].text, line_no, toks[0].column);
      doc.bindings.emplace_back(toks[0].text, parse_word(toks[2], line_no));
    } else {
      throw DocParseError("unrecognized line", line_no, toks[0].column);
    }
    if (pos > text.size()) break;
  }

  if (!descriptor_built) {
    if (!rank) throw DocParseError("missing `rank K` line", 1, 1);
    doc.descriptor = build_descriptor();
  }
  return doc;
}

}  // namespace nongen
