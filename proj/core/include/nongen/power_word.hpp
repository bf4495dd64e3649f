#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "nongen/bigint.hpp"
#include "nongen/word.hpp"

namespace nongen {

// Raised by expand() when the reduced length exceeds the caller's limit.
struct ExpandLimitError : Error {
  ExpandLimitError(BigInt length, std::uint64_t limit)
      : Error("expansion has " + to_decimal(length) +
              " letters, exceeding the limit of " + std::to_string(limit)),
        length(std::move(length)),
        limit(limit) {}
  BigInt length;
  std::uint64_t limit = 0;
};

// Compressed product of powers: factor (b, e) denotes b^e.  The normal form
// maintained by every constructor guarantees:
//   - every exponent is >= 1 and every base is a nonempty reduced word,
//   - every factor with exponent >= 2 has a cyclically reduced base,
//   - expanding the factors left to right performs no free cancellation,
//   - no two adjacent factors have equal or mutually inverse bases, and
//     adjacent exponent-1 factors are merged into a single word factor.
// Consequently the reduced length of the element is simply the sum of
// |exponent| * |base| over the factors, however astronomical.
class PowerWord {
 public:
  struct Factor {
    Word base;
    BigInt exponent;
  };

  PowerWord() = default;
  explicit PowerWord(GroupDescriptor desc) : desc_(std::move(desc)) {}

  // Single word, or base^exponent (any sign; normalized internally).
  PowerWord(const Word& w);  // NOLINT: implicit by design, a Word is a PowerWord
  static PowerWord power(const Word& base, const BigInt& exponent);

  // Builds the normalized product of arbitrary raw factors.
  static PowerWord from_factors(const GroupDescriptor& desc,
                                std::vector<Factor> raw);

  // Parses whitespace-separated factors: `word` or `(word)^exp`.
  static PowerWord parse(const GroupDescriptor& desc, std::string_view text);

  const GroupDescriptor& descriptor() const { return desc_; }
  const std::vector<Factor>& factors() const { return factors_; }

  // Exact reduced word length of the element.
  BigInt length() const;
  bool is_identity() const { return factors_.empty(); }

  PowerWord inverse() const;
  friend PowerWord operator*(const PowerWord& p, const PowerWord& q);

  // Plain reduced word; throws ExpandLimitError if length() > limit.
  Word expand(std::uint64_t limit) const;

  std::string str() const;

 private:
  GroupDescriptor desc_;
  std::vector<Factor> factors_;
};

// Spec-level operation names.
inline PowerWord pw_normalize(const PowerWord& p) { return p; }  // by invariant
inline BigInt pw_length(const PowerWord& p) { return p.length(); }
inline PowerWord pw_multiply(const PowerWord& p, const PowerWord& q) {
  return p * q;
}
inline PowerWord pw_invert(const PowerWord& p) { return p.inverse(); }
inline bool pw_equal(const PowerWord& p, const PowerWord& q) {
  return (p * q.inverse()).is_identity();
}
inline Word pw_expand(const PowerWord& p, std::uint64_t limit) {
  return p.expand(limit);
}

// Distance in the word metric, d(u, v) = |u^-1 v|.
inline BigInt pw_distance(const PowerWord& u, const PowerWord& v) {
  return (u.inverse() * v).length();
}

}  // namespace nongen
