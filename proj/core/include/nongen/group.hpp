#pragma once

#include <stdexcept>
#include <string>

namespace nongen {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when two operands belong to different ambient groups.
struct DescriptorMismatchError : Error {
  using Error::Error;
};

// Raised when a word or power word cannot be parsed.  `offset` is the
// zero-based position of the first offending character.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t offset)
      : Error(what), offset(offset) {}
  std::size_t offset = 0;
};

// Describes the ambient free group F_k together with the letter names used
// for printing and parsing.  Lowercase letters denote generators, uppercase
// their inverses.  `delta` is the hyperbolicity constant carried along for
// the geometric estimates; it is 0 for a free group with its standard
// generating set, but callers may set a larger value to explore how the
// bounds degrade.
class GroupDescriptor {
 public:
  GroupDescriptor() : GroupDescriptor(1) {}

  explicit GroupDescriptor(unsigned rank, std::string letters = "",
                           unsigned delta = 0)
      : rank_(rank), delta_(delta), letters_(std::move(letters)) {
    if (rank_ == 0 || rank_ > 26)
      throw Error("group rank must be between 1 and 26");
    if (letters_.empty()) {
      for (unsigned i = 0; i < rank_; ++i)
        letters_.push_back(static_cast<char>('a' + i));
    }
    if (letters_.size() != rank_)
      throw Error("expected " + std::to_string(rank_) + " letter names, got " +
                  std::to_string(letters_.size()));
    for (char c : letters_) {
      if (c < 'a' || c > 'z')
        throw Error(std::string("letter names must be lowercase ascii, got '") +
                    c + "'");
    }
    for (std::size_t i = 0; i < letters_.size(); ++i)
      for (std::size_t j = i + 1; j < letters_.size(); ++j)
        if (letters_[i] == letters_[j])
          throw Error(std::string("duplicate letter name '") + letters_[i] + "'");
  }

  unsigned rank() const { return rank_; }
  unsigned delta() const { return delta_; }
  const std::string& letters() const { return letters_; }

  // Printable name of generator `index` (0-based).
  char letter(unsigned index) const { return letters_.at(index); }

  // Maps a character to the signed letter code: letters_[i] -> +(i+1), its
  // uppercase form -> -(i+1).  Returns 0 if the character names no generator.
  int code_of(char c) const {
    char lower = (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (letters_[i] == lower)
        return c == lower ? static_cast<int>(i) + 1 : -(static_cast<int>(i) + 1);
    }
    return 0;
  }

  bool operator==(const GroupDescriptor& o) const {
    return rank_ == o.rank_ && delta_ == o.delta_ && letters_ == o.letters_;
  }

 private:
  unsigned rank_;
  unsigned delta_;
  std::string letters_;
};

inline void require_same_group(const GroupDescriptor& a,
                               const GroupDescriptor& b) {
  if (!(a == b))
    throw DescriptorMismatchError("operands live in different groups");
}

}  // namespace nongen
