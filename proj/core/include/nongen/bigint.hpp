#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "nongen/group.hpp"

namespace nongen {

// Arbitrary-precision integer used for exponents, lengths of compressed
// words and the worst-case constants, all of which overflow 64 bits quickly.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline BigInt parse_decimal(const std::string& text) {
  if (text.empty()) throw ParseError("empty integer literal", 0);
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) throw ParseError("sign without digits", i);
  for (std::size_t j = i; j < text.size(); ++j)
    if (text[j] < '0' || text[j] > '9')
      throw ParseError("invalid digit in integer literal", j);
  return BigInt(text);
}

// Smallest integer >= num / den for den > 0.
inline BigInt ceil_div(const BigInt& num, const BigInt& den) {
  BigInt q = num / den;
  if (q * den < num) ++q;
  return q;
}

inline BigInt abs_big(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

}  // namespace nongen
