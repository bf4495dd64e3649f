#include "nongen/word.hpp"

#include <algorithm>

namespace nongen {

Word Word::from_codes(const GroupDescriptor& desc,
                      std::span<const std::int8_t> codes) {
  std::string out;
  out.reserve(codes.size());
  for (std::int8_t c : codes) {
    if (c == 0 || static_cast<unsigned>(c > 0 ? c : -c) > desc.rank())
      throw Error("letter code out of range for this group");
    if (!out.empty() && static_cast<std::int8_t>(out.back()) == -c)
      out.pop_back();
    else
      out.push_back(static_cast<char>(c));
  }
  return raw(desc, std::move(out));
}

Word free_reduce(const GroupDescriptor& desc,
                 std::span<const std::int8_t> codes) {
  return Word::from_codes(desc, codes);
}

Word Word::parse(const GroupDescriptor& desc, std::string_view text) {
  if (text.empty()) throw ParseError("empty word text", 0);
  if (text == "1") return Word(desc);
  std::vector<std::int8_t> codes;
  codes.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    int c = desc.code_of(text[i]);
    if (c == 0)
      throw ParseError(std::string("character '") + text[i] +
                           "' names no generator of this group",
                       i);
    codes.push_back(static_cast<std::int8_t>(c));
  }
  return from_codes(desc, codes);
}

std::string Word::str() const {
  if (rep_.empty()) return "1";
  std::string out;
  out.reserve(rep_.size());
  for (char raw : rep_) {
    int c = static_cast<std::int8_t>(raw);
    char name = desc_.letter(static_cast<unsigned>((c > 0 ? c : -c) - 1));
    out.push_back(c > 0 ? name : static_cast<char>(name - 'a' + 'A'));
  }
  return out;
}

Word Word::inverse() const {
  std::string out;
  out.reserve(rep_.size());
  for (auto it = rep_.rbegin(); it != rep_.rend(); ++it)
    out.push_back(static_cast<char>(-static_cast<std::int8_t>(*it)));
  return raw(desc_, std::move(out));
}

Word operator*(const Word& a, const Word& b) {
  require_same_group(a.desc_, b.desc_);
  // Both inputs are reduced, so cancellation happens only at the boundary.
  std::size_t cut = 0;
  std::size_t max_cut = std::min(a.rep_.size(), b.rep_.size());
  while (cut < max_cut &&
         static_cast<std::int8_t>(a.rep_[a.rep_.size() - 1 - cut]) ==
             -static_cast<std::int8_t>(b.rep_[cut]))
    ++cut;
  std::string out;
  out.reserve(a.rep_.size() + b.rep_.size() - 2 * cut);
  out.append(a.rep_, 0, a.rep_.size() - cut);
  out.append(b.rep_, cut, b.rep_.size() - cut);
  return Word::raw(a.desc_, std::move(out));
}

Word Word::cyclic_slice(std::size_t i, std::size_t len) const {
  std::string out;
  out.reserve(len);
  for (std::size_t k = 0; k < len; ++k) out.push_back(rep_[(i + k) % rep_.size()]);
  return raw(desc_, std::move(out));
}

Word Word::pow(long long n) const {
  if (n == 0 || rep_.empty()) return Word(desc_);
  CyclicForm cf = cyclic_form(*this);
  Word core = n > 0 ? cf.core : cf.core.inverse();
  unsigned long long reps =
      n > 0 ? static_cast<unsigned long long>(n)
            : static_cast<unsigned long long>(-(n + 1)) + 1;
  std::string body;
  body.reserve(cf.conjugator.rep_.size() * 2 + core.rep_.size() * reps);
  body.append(cf.conjugator.rep_);
  for (unsigned long long i = 0; i < reps; ++i) body.append(core.rep_);
  body.append(cf.conjugator.inverse().rep_);
  return raw(desc_, std::move(body));
}

bool Word::shortlex_less(const Word& a, const Word& b) {
  if (a.rep_.size() != b.rep_.size()) return a.rep_.size() < b.rep_.size();
  for (std::size_t i = 0; i < a.rep_.size(); ++i) {
    int ra = letter_rank(static_cast<std::int8_t>(a.rep_[i]));
    int rb = letter_rank(static_cast<std::int8_t>(b.rep_[i]));
    if (ra != rb) return ra < rb;
  }
  return false;
}

CyclicForm cyclic_form(const Word& w) {
  std::size_t lo = 0, hi = w.length();
  while (hi - lo >= 2 && w.code(lo) == -w.code(hi - 1)) {
    ++lo;
    --hi;
  }
  CyclicForm out;
  std::vector<std::int8_t> head;
  for (std::size_t i = 0; i < lo; ++i)
    head.push_back(static_cast<std::int8_t>(w.code(i)));
  std::vector<std::int8_t> body;
  for (std::size_t i = lo; i < hi; ++i)
    body.push_back(static_cast<std::int8_t>(w.code(i)));
  out.conjugator = Word::from_codes(w.descriptor(), head);
  out.core = Word::from_codes(w.descriptor(), body);
  return out;
}

PrimitiveRoot primitive_root(const Word& w) {
  if (w.is_identity())
    throw Error("the identity has no primitive root");
  CyclicForm cf = cyclic_form(w);
  std::size_t n = cf.core.length();
  std::size_t period = n;
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i)
      if (cf.core.code(i) != cf.core.code(i - p)) ok = false;
    if (ok) {
      period = p;
      break;
    }
  }
  PrimitiveRoot out;
  out.root = cf.conjugator * cf.core.cyclic_slice(0, period) *
             cf.conjugator.inverse();
  out.exponent = static_cast<std::uint64_t>(n / period);
  return out;
}

}  // namespace nongen
