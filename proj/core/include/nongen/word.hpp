#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nongen/group.hpp"

namespace nongen {

// A freely reduced word over the generators of a free group.  Letters are
// stored as signed bytes: +(i+1) is generator i, -(i+1) is its inverse.
// Every constructor reduces, so a Word is always in normal form and equality
// is plain representation equality.
class Word {
 public:
  Word() = default;
  explicit Word(GroupDescriptor desc) : desc_(std::move(desc)) {}

  // Reduces an arbitrary letter sequence.
  static Word from_codes(const GroupDescriptor& desc,
                         std::span<const std::int8_t> codes);

  // Parses letter text ("abA") or the identity literal "1".
  static Word parse(const GroupDescriptor& desc, std::string_view text);

  const GroupDescriptor& descriptor() const { return desc_; }
  std::size_t length() const { return rep_.size(); }
  bool is_identity() const { return rep_.empty(); }

  // Signed letter code at position i.
  int code(std::size_t i) const { return static_cast<std::int8_t>(rep_[i]); }

  // Raw reduced representation; useful for hashing and ordering.
  const std::string& rep() const { return rep_; }

  std::string str() const;

  Word inverse() const;
  Word pow(long long n) const;  // plain expansion; meant for small exponents

  // Cyclic subword w[i..i+len) with indices taken mod length().
  Word cyclic_slice(std::size_t i, std::size_t len) const;

  friend Word operator*(const Word& a, const Word& b);

  bool operator==(const Word& o) const {
    return desc_ == o.desc_ && rep_ == o.rep_;
  }
  bool operator!=(const Word& o) const { return !(*this == o); }

  // Shortlex order using the letter order a < A < b < B < ...
  static bool shortlex_less(const Word& a, const Word& b);

 private:
  static Word raw(GroupDescriptor desc, std::string rep) {
    Word w(std::move(desc));
    w.rep_ = std::move(rep);
    return w;
  }

  GroupDescriptor desc_;
  std::string rep_;

  friend Word free_reduce_impl(const GroupDescriptor&, const std::string&);
};

// Spec-level operation names, kept as free functions.
Word free_reduce(const GroupDescriptor& desc, std::span<const std::int8_t> codes);
inline Word multiply(const Word& a, const Word& b) { return a * b; }
inline Word invert(const Word& w) { return w.inverse(); }

// The unique decomposition w = u . c . u^-1 with c cyclically reduced and
// |w| = 2|u| + |c|.
struct CyclicForm {
  Word conjugator;  // u
  Word core;        // c
};
CyclicForm cyclic_form(const Word& w);

// w = root^exponent with root not a proper power; exponent >= 1.
// Throws Error on the identity.
struct PrimitiveRoot {
  Word root;
  std::uint64_t exponent = 0;
};
PrimitiveRoot primitive_root(const Word& w);

// Total order key for a letter code: a < A < b < B < ...
inline int letter_rank(int code) {
  int idx = code > 0 ? code : -code;
  return (idx - 1) * 2 + (code < 0 ? 1 : 0);
}

}  // namespace nongen
