#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nongen/bigint.hpp"
#include "nongen/power_word.hpp"
#include "nongen/word.hpp"

namespace nongen {

// Raised when an operation requires c outside the virtual centralizer of g.
struct CommensuratorViolationError : Error {
  using Error::Error;
};

// A finite sequence of points x_start, ..., x_{start+q} in the group, with
// the gap parameter a and the hyperbolicity constant delta used by the local
// and global divergence checks.
struct DelzantSequence {
  std::vector<PowerWord> points;
  BigInt a = 1;
  unsigned delta = 0;
  long long start_index = 0;
};

// Local gap condition: d(x_{n+2}, x_n) >= max(adjacent distances) + 2*delta + a
// for every consecutive triple.
bool delzant_hypothesis(const DelzantSequence& seq);

// Global linear divergence: d(x_n, x_p) >= a * |n - p| for every pair.
bool delzant_conclusion(const DelzantSequence& seq);

// Linear growth data of powers: |g^n| = n*core_length + 2*conjugator_length,
// so |g^n| >= C*|n| with C = core_length.
struct GrowthData {
  Word g;
  std::uint64_t core_length = 0;
  std::uint64_t conjugator_length = 0;
  std::uint64_t C = 0;
};
GrowthData growth_constant(const Word& g);

// Quasiconvexity constant of the cyclic subgroup <g>: every vertex of every
// geodesic between powers of g stays within E_valid = |u| + |c| of a power.
// E_min is the empirically least such constant over a finite exponent range.
struct QcConstant {
  Word g;
  std::uint64_t E_valid = 0;
  std::optional<std::uint64_t> E_min;
};
QcConstant qc_constant(const Word& g,
                       std::optional<unsigned> search_range = std::nullopt);

// Virtual centralizer E(g) of a nontrivial element of a free group: the
// cyclic subgroup generated by the primitive root of g.
struct Commensurator {
  Word g;
  Word root;
};
Commensurator commensurator(const Word& g);
bool in_commensurator(const Word& g, const Word& h);

// Generator of <g1> n <g2>; identity word when the intersection is trivial.
Word cyclic_intersection(const Word& g1, const Word& g2);

// Exact number of elements of length <= radius in the free group.
BigInt ball_size(const GroupDescriptor& desc, std::uint64_t radius);

// The worst-case cancellation bound K(g, c) = 2N'(2E+1) + 2|c| + 8*delta,
// where N' counts elements of length <= L = 2E + 2|c| + 4*delta.
struct KBound {
  Word g;
  Word c;
  std::uint64_t E = 0;
  unsigned delta = 0;
  std::uint64_t ball_radius = 0;
  BigInt ball_count;
  BigInt K;
};
KBound k_bound(const Word& g, const Word& c);

// Empirical counterpart: the largest cancellation deficit
// |g^n| + |g^m| - |g^n c g^m| observed over |n|, |m| <= range, floored at 0.
BigInt k_empirical(const Word& g, const Word& c, unsigned range);

// Exhaustively scans conjugators |h| <= h_radius and exponents
// 1 <= n <= exp_max, -exp_max <= m <= exp_max for identities
// h^-1 g^n h = g^m with |m| != |n|; returns how many exist (expected: none in
// a free group).
std::uint64_t conjugate_power_mismatches(const Word& g, unsigned h_radius,
                                         unsigned exp_max);

}  // namespace nongen
