#include "nongen/power_word.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>

namespace nongen {

namespace {

using Factor = PowerWord::Factor;

bool cyclically_reduced(const Word& w) {
  return w.length() <= 1 || w.code(0) != -w.code(w.length() - 1);
}

// Letter of base^exp at distance i from the junction, right flank (i = 0 is
// the first letter) and left flank (i = 0 is the last letter).
int right_letter(const Word& base, std::size_t i) {
  return base.code(i % base.length());
}
int left_letter(const Word& base, std::size_t i) {
  std::size_t p = base.length();
  return base.code(p - 1 - (i % p));
}

// Canonicalizes one raw factor into pending form: positive exponent, trivial
// factors dropped, powers >= 2 split as (u,1)(c,e)(u^-1,1) so that their base
// is cyclically reduced and the expansion of a single factor never cancels.
void push_canonical(std::deque<Factor>& pending, Factor f, bool front) {
  if (f.base.is_identity() || f.exponent == 0) return;
  if (f.exponent < 0) {
    f.base = f.base.inverse();
    f.exponent = -f.exponent;
  }
  std::vector<Factor> pieces;
  if (f.exponent == 1 || cyclically_reduced(f.base)) {
    pieces.push_back(std::move(f));
  } else {
    CyclicForm cf = cyclic_form(f.base);
    pieces.push_back({cf.conjugator, 1});
    pieces.push_back({cf.core, f.exponent});
    pieces.push_back({cf.conjugator.inverse(), 1});
  }
  if (front)
    for (auto it = pieces.rbegin(); it != pieces.rend(); ++it)
      pending.push_front(std::move(*it));
  else
    for (auto& piece : pieces) pending.push_back(std::move(piece));
}

// Removes `cut` letters from the right flank of (base, exp), appending the
// surviving pieces (whole periods first, then a partial period) to `out`.
void trim_right(std::vector<Factor>& out, const Factor& f, std::size_t cut) {
  std::size_t p = f.base.length();
  BigInt exp = f.exponent - BigInt(cut / p);
  std::size_t rem = cut % p;
  if (rem > 0) --exp;
  if (exp > 0) out.push_back({f.base, exp});
  if (rem > 0) out.push_back({f.base.cyclic_slice(0, p - rem), 1});
}

// Mirror image: removes `cut` letters from the left flank.
void trim_left(std::vector<Factor>& out, const Factor& f, std::size_t cut) {
  std::size_t p = f.base.length();
  BigInt exp = f.exponent - BigInt(cut / p);
  std::size_t rem = cut % p;
  if (rem > 0) --exp;
  if (rem > 0) out.push_back({f.base.cyclic_slice(rem, p - rem), 1});
  if (exp > 0) out.push_back({f.base, exp});
}

// Resolves the junction between the two top factors of the stack.  Returns
// false when the junction is already reduced and unmergeable (stable).
bool fix_top(std::vector<Factor>& st, std::deque<Factor>& pending) {
  Factor& left = st[st.size() - 2];
  Factor& right = st.back();
  std::size_t p = left.base.length();
  std::size_t q = right.base.length();

  if (cyclically_reduced(left.base)) {
    if (left.base == right.base) {
      Factor merged{left.base, left.exponent + right.exponent};
      st.pop_back();
      st.pop_back();
      pending.push_front(std::move(merged));
      return true;
    }
    if (left.base == right.base.inverse()) {
      Factor merged{left.base, left.exponent - right.exponent};
      st.pop_back();
      st.pop_back();
      push_canonical(pending, std::move(merged), /*front=*/true);
      return true;
    }
  }

  // Boundary cancellation.  The scan is capped: a factor contributes at most
  // its full expansion, and when both factors are genuine powers a match of
  // p + q letters already forces commensurable bases (the periodic overlap
  // has both periods, hence their gcd), which is resolved exactly below.
  BigInt total_left = BigInt(p) * left.exponent;
  BigInt total_right = BigInt(q) * right.exponent;
  bool both_powers = left.exponent >= 2 && right.exponent >= 2;
  std::size_t bound = p + q;
  if (total_left < bound) bound = total_left.convert_to<std::size_t>();
  if (total_right < bound) bound = total_right.convert_to<std::size_t>();

  std::size_t cut = 0;
  while (cut < bound && left_letter(left.base, cut) ==
                            -right_letter(right.base, cut))
    ++cut;

  if (cut == 0) return false;

  if (both_powers && cut == p + q && total_left > cut && total_right > cut) {
    // Deep periodic overlap: both bases are powers of a common root t, so
    // the pair collapses to a single exact power of t.
    std::size_t g = std::gcd(p, q);
    Word t = right.base.cyclic_slice(0, g).inverse();
    BigInt net = left.exponent * BigInt(p / g) - right.exponent * BigInt(q / g);
    st.pop_back();
    st.pop_back();
    push_canonical(pending, {std::move(t), std::move(net)}, /*front=*/true);
    return true;
  }

  Factor lf = std::move(left);
  Factor rf = std::move(right);
  st.pop_back();
  st.pop_back();
  std::vector<Factor> pieces;
  trim_right(pieces, lf, cut);
  trim_left(pieces, rf, cut);
  // Left pieces re-enter the stack first, so push in reverse onto pending.
  for (std::size_t i = pieces.size(); i > 0; --i)
    pending.push_front(std::move(pieces[i - 1]));
  return true;
}

// Merges surviving neighbors that carry no cancellation: equal cyclically
// reduced bases add exponents; runs of exponent-1 factors concatenate.
void coalesce(std::vector<Factor>& factors) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Factor> out;
    out.reserve(factors.size());
    for (auto& f : factors) {
      if (!out.empty()) {
        Factor& b = out.back();
        if (b.base == f.base && cyclically_reduced(b.base)) {
          b.exponent += f.exponent;
          changed = true;
          continue;
        }
        if (b.exponent == 1 && f.exponent == 1) {
          b.base = b.base * f.base;
          changed = true;
          continue;
        }
      }
      out.push_back(std::move(f));
    }
    factors = std::move(out);
  }
}

std::vector<Factor> normalize(std::vector<Factor> raw) {
  std::deque<Factor> pending;
  for (auto& f : raw) push_canonical(pending, std::move(f), /*front=*/false);
  std::vector<Factor> st;
  while (!pending.empty()) {
    st.push_back(std::move(pending.front()));
    pending.pop_front();
    while (st.size() >= 2 && fix_top(st, pending)) {
    }
  }
  coalesce(st);
  return st;
}

}  // namespace

PowerWord::PowerWord(const Word& w) : desc_(w.descriptor()) {
  if (!w.is_identity()) factors_.push_back({w, 1});
}

PowerWord PowerWord::power(const Word& base, const BigInt& exponent) {
  return from_factors(base.descriptor(), {{base, exponent}});
}

PowerWord PowerWord::from_factors(const GroupDescriptor& desc,
                                  std::vector<Factor> raw) {
  for (const auto& f : raw)
    require_same_group(desc, f.base.descriptor());
  PowerWord out(desc);
  out.factors_ = normalize(std::move(raw));
  return out;
}

BigInt PowerWord::length() const {
  BigInt total = 0;
  for (const auto& f : factors_) total += f.exponent * BigInt(f.base.length());
  return total;
}

PowerWord PowerWord::inverse() const {
  std::vector<Factor> raw;
  raw.reserve(factors_.size());
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it)
    raw.push_back({it->base.inverse(), it->exponent});
  return from_factors(desc_, std::move(raw));
}

PowerWord operator*(const PowerWord& p, const PowerWord& q) {
  require_same_group(p.desc_, q.desc_);
  std::vector<Factor> raw;
  raw.reserve(p.factors_.size() + q.factors_.size());
  raw.insert(raw.end(), p.factors_.begin(), p.factors_.end());
  raw.insert(raw.end(), q.factors_.begin(), q.factors_.end());
  return PowerWord::from_factors(p.desc_, std::move(raw));
}

Word PowerWord::expand(std::uint64_t limit) const {
  BigInt total = length();
  if (total > limit) throw ExpandLimitError(total, limit);
  std::vector<std::int8_t> codes;
  codes.reserve(total.convert_to<std::size_t>());
  for (const auto& f : factors_) {
    std::size_t reps = f.exponent.convert_to<std::size_t>();
    for (std::size_t r = 0; r < reps; ++r)
      for (std::size_t i = 0; i < f.base.length(); ++i)
        codes.push_back(static_cast<std::int8_t>(f.base.code(i)));
  }
  return Word::from_codes(desc_, codes);
}

std::string PowerWord::str() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) out.push_back(' ');
    if (f.exponent == 1) {
      out += f.base.str();
    } else {
      out.push_back('(');
      out += f.base.str();
      out += ")^";
      out += to_decimal(f.exponent);
    }
  }
  return out;
}

PowerWord PowerWord::parse(const GroupDescriptor& desc, std::string_view text) {
  std::vector<Factor> raw;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] == '(') {
      std::size_t close = text.find(')', i + 1);
      if (close == std::string_view::npos)
        throw ParseError("unterminated '(' in power factor", i);
      std::string_view body = text.substr(i + 1, close - i - 1);
      if (close + 1 >= text.size() || text[close + 1] != '^')
        throw ParseError("expected '^exp' after ')'", close + 1);
      std::size_t j = close + 2;
      std::size_t exp_start = j;
      if (j < text.size() && (text[j] == '-' || text[j] == '+')) ++j;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
        ++j;
      if (j == exp_start || (j == exp_start + 1 && !std::isdigit(static_cast<
                                 unsigned char>(text[exp_start]))))
        throw ParseError("missing exponent digits", exp_start);
      Word base;
      try {
        base = Word::parse(desc, body);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), i + 1 + e.offset);
      }
      raw.push_back({std::move(base),
                     parse_decimal(std::string(text.substr(exp_start,
                                                           j - exp_start)))});
      i = j;
    } else {
      std::size_t j = i;
      while (j < text.size() &&
             !std::isspace(static_cast<unsigned char>(text[j])))
        ++j;
      std::string_view body = text.substr(i, j - i);
      try {
        raw.push_back({Word::parse(desc, body), 1});
      } catch (const ParseError& e) {
        throw ParseError(e.what(), i + e.offset);
      }
      i = j;
    }
  }
  // An explicit identity is written "1"; text with no factors at all is a
  // mistake, matching Word::parse on empty input.
  if (raw.empty()) throw ParseError("empty power word text", 0);
  return from_factors(desc, std::move(raw));
}

}  // namespace nongen
