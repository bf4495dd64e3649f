#include "nongen/geometry.hpp"

#include <algorithm>
#include <numeric>

namespace nongen {

namespace {

void require_points(const DelzantSequence& seq, std::size_t minimum) {
  if (seq.points.size() < minimum)
    throw Error("sequence needs at least " + std::to_string(minimum) +
                " points");
  if (seq.a <= 0) throw Error("gap parameter a must be positive");
}

void require_nontrivial(const Word& g) {
  if (g.is_identity()) throw Error("operation undefined for the identity");
}

}  // namespace

bool delzant_hypothesis(const DelzantSequence& seq) {
  require_points(seq, 3);
  BigInt pad = BigInt(2) * seq.delta + seq.a;
  BigInt next = pw_distance(seq.points[0], seq.points[1]);
  for (std::size_t n = 0; n + 2 < seq.points.size(); ++n) {
    BigInt lo = next;                                              // d(x_n, x_{n+1})
    BigInt hi = pw_distance(seq.points[n + 1], seq.points[n + 2]);  // d(x_{n+1}, x_{n+2})
    BigInt span = pw_distance(seq.points[n], seq.points[n + 2]);
    if (span < std::max(lo, hi) + pad) return false;
    next = hi;
  }
  return true;
}

bool delzant_conclusion(const DelzantSequence& seq) {
  require_points(seq, 2);
  for (std::size_t n = 0; n < seq.points.size(); ++n)
    for (std::size_t p = n + 1; p < seq.points.size(); ++p)
      if (pw_distance(seq.points[n], seq.points[p]) < seq.a * BigInt(p - n))
        return false;
  return true;
}

GrowthData growth_constant(const Word& g) {
  require_nontrivial(g);
  CyclicForm cf = cyclic_form(g);
  GrowthData out;
  out.g = g;
  out.core_length = cf.core.length();
  out.conjugator_length = cf.conjugator.length();
  out.C = out.core_length;
  return out;
}

QcConstant qc_constant(const Word& g, std::optional<unsigned> search_range) {
  require_nontrivial(g);
  CyclicForm cf = cyclic_form(g);
  QcConstant out;
  out.g = g;
  out.E_valid = cf.core.length() + cf.conjugator.length();
  if (!search_range) return out;

  // Exhaustive check over the finite range: walk every vertex of every
  // tree-geodesic [g^n, g^m] and find its distance to the nearest power g^k,
  // scanning k outward until linear growth rules out any improvement.
  long long r = static_cast<long long>(*search_range);
  auto power = [&](long long k) { return g.pow(k); };
  std::uint64_t worst = 0;
  std::uint64_t C = cf.core.length();
  for (long long n = -r; n <= r; ++n) {
    Word gn = power(n);
    for (long long m = n; m <= r; ++m) {
      Word diff = gn.inverse() * power(m);
      for (std::size_t i = 0; i <= diff.length(); ++i) {
        // i-th vertex of the geodesic [g^n, g^m].
        std::vector<std::int8_t> codes;
        codes.reserve(i);
        for (std::size_t t = 0; t < i; ++t)
          codes.push_back(static_cast<std::int8_t>(diff.code(t)));
        Word vertex = gn * Word::from_codes(g.descriptor(), codes);
        std::uint64_t best = vertex.length();  // distance to g^0
        // |g^k| >= C*|k|, so powers beyond (|vertex| + best)/C cannot win.
        for (long long k = 1;
             C * static_cast<std::uint64_t>(k) <= vertex.length() + best;
             ++k) {
          for (long long sign : {1LL, -1LL}) {
            std::uint64_t d = (power(sign * k).inverse() * vertex).length();
            best = std::min(best, d);
          }
        }
        worst = std::max(worst, best);
      }
    }
  }
  out.E_min = worst;
  return out;
}

Commensurator commensurator(const Word& g) {
  require_nontrivial(g);
  return {g, primitive_root(g).root};
}

bool in_commensurator(const Word& g, const Word& h) {
  require_nontrivial(g);
  if (h.is_identity()) return true;
  Word root = primitive_root(g).root;
  Word hroot = primitive_root(h).root;
  return hroot == root || hroot == root.inverse();
}

Word cyclic_intersection(const Word& g1, const Word& g2) {
  require_nontrivial(g1);
  require_nontrivial(g2);
  PrimitiveRoot r1 = primitive_root(g1);
  PrimitiveRoot r2 = primitive_root(g2);
  if (r1.root != r2.root && r1.root != r2.root.inverse())
    return Word(g1.descriptor());
  std::uint64_t l = std::lcm(r1.exponent, r2.exponent);
  return r1.root.pow(static_cast<long long>(l));
}

BigInt ball_size(const GroupDescriptor& desc, std::uint64_t radius) {
  BigInt k = desc.rank();
  if (desc.rank() == 1) return BigInt(2) * radius + 1;
  BigInt branching = 2 * k - 1;
  BigInt shell = boost::multiprecision::pow(
      branching, static_cast<unsigned>(radius));
  return 1 + 2 * k * (shell - 1) / (2 * k - 2);
}

KBound k_bound(const Word& g, const Word& c) {
  require_nontrivial(g);
  if (in_commensurator(g, c))
    throw CommensuratorViolationError(
        "commensurator violation: c lies in E(g)");
  KBound out;
  out.g = g;
  out.c = c;
  out.E = qc_constant(g).E_valid;
  out.delta = g.descriptor().delta();
  out.ball_radius = 2 * out.E + 2 * c.length() + 4 * out.delta;
  out.ball_count = ball_size(g.descriptor(), out.ball_radius);
  out.K = 2 * out.ball_count * (2 * BigInt(out.E) + 1) +
          2 * BigInt(c.length()) + 8 * BigInt(out.delta);
  return out;
}

BigInt k_empirical(const Word& g, const Word& c, unsigned range) {
  require_nontrivial(g);
  if (in_commensurator(g, c))
    throw CommensuratorViolationError(
        "commensurator violation: c lies in E(g)");
  PowerWord cw(c);
  long long r = static_cast<long long>(range);
  BigInt worst = 0;
  for (long long n = -r; n <= r; ++n) {
    PowerWord gn = PowerWord::power(g, n);
    BigInt len_gn = gn.length();
    for (long long m = -r; m <= r; ++m) {
      PowerWord gm = PowerWord::power(g, m);
      BigInt deficit = len_gn + gm.length() - (gn * cw * gm).length();
      worst = std::max(worst, deficit);
    }
  }
  return worst;
}

std::uint64_t conjugate_power_mismatches(const Word& g, unsigned h_radius,
                                         unsigned exp_max) {
  require_nontrivial(g);
  const GroupDescriptor& desc = g.descriptor();
  std::uint64_t found = 0;

  // Pre-build all powers g^m for -exp_max <= m <= exp_max, m != 0.
  std::vector<std::pair<long long, Word>> powers;
  for (long long m = -static_cast<long long>(exp_max);
       m <= static_cast<long long>(exp_max); ++m)
    if (m != 0) powers.emplace_back(m, g.pow(m));

  // Depth-first enumeration of all reduced conjugators |h| <= h_radius.
  std::vector<std::int8_t> stack;
  auto visit = [&](const auto& self) -> void {
    Word h = Word::from_codes(desc, stack);
    for (long long n = 1; n <= static_cast<long long>(exp_max); ++n) {
      Word conj = h.inverse() * g.pow(n) * h;
      for (const auto& [m, gm] : powers)
        if (conj == gm && (m < 0 ? -m : m) != n) ++found;
    }
    if (stack.size() == h_radius) return;
    for (unsigned idx = 1; idx <= desc.rank(); ++idx)
      for (int sign : {1, -1}) {
        std::int8_t code = static_cast<std::int8_t>(sign * static_cast<int>(idx));
        if (!stack.empty() && stack.back() == -code) continue;
        stack.push_back(code);
        self(self);
        stack.pop_back();
      }
  };
  visit(visit);
  return found;
}

}  // namespace nongen
