#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "nongen/geometry.hpp"
#include "support/oracles.hpp"

using namespace nongen;

namespace {

const GroupDescriptor kF2(2);

Word parse2(const std::string& s) { return Word::parse(kF2, s); }
PowerWord P(const std::string& s) { return PowerWord::parse(kF2, s); }

// Direct recomputation of the empirically minimal quasiconvexity constant:
// walk every vertex of every geodesic between powers g^i, g^j in the range
// and take its distance to the nearest power, with a generous power window.
std::uint64_t qc_min_direct(const Word& g, unsigned range) {
  long long r = static_cast<long long>(range);
  std::uint64_t worst = 0;
  for (long long i = -r; i <= r; ++i) {
    Word gi = g.pow(i);
    for (long long j = -r; j <= r; ++j) {
      Word diff = gi.inverse() * g.pow(j);
      for (std::size_t pre = 0; pre <= diff.length(); ++pre) {
        std::vector<std::int8_t> codes;
        for (std::size_t t = 0; t < pre; ++t)
          codes.push_back(static_cast<std::int8_t>(diff.code(t)));
        Word vertex = gi * Word::from_codes(g.descriptor(), codes);
        std::uint64_t best = vertex.length();  // distance to g^0
        long long window =
            static_cast<long long>(vertex.length()) + static_cast<long long>(best) + 1;
        for (long long k = -window; k <= window; ++k)
          best = std::min<std::uint64_t>(best,
                                         (g.pow(k).inverse() * vertex).length());
        worst = std::max(worst, best);
      }
    }
  }
  return worst;
}

}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("growth: |g^n| = C*n + 2*conjugator for every n") {
  std::mt19937_64 rng(2001);
  for (int iter = 0; iter < 200; ++iter) {
    Word g = parse2(oracle::random_reduced(rng, 2, 1 + rng() % 10));
    GrowthData gd = growth_constant(g);
    CHECK(gd.C == gd.core_length);
    for (long long n = 1; n <= 20; ++n) {
      CHECK(g.pow(n).length() ==
            gd.core_length * static_cast<std::uint64_t>(n) +
                2 * gd.conjugator_length);
      CHECK(g.pow(n).length() >= gd.C * static_cast<std::uint64_t>(n));
    }
  }
  CHECK_THROWS_AS(growth_constant(Word(kF2)), Error);
}

TEST_CASE("quasiconvexity: valid constant dominates the direct minimum") {
  for (const char* s : {"ab", "Abab", "aab", "Baab", "a"}) {
    Word g = parse2(s);
    QcConstant qc = qc_constant(g, 3);
    CyclicForm cf = cyclic_form(g);
    CHECK(qc.E_valid == cf.conjugator.length() + cf.core.length());
    REQUIRE(qc.E_min.has_value());
    CHECK(*qc.E_min == qc_min_direct(g, 3));
    CHECK(*qc.E_min <= qc.E_valid);
  }
  CHECK(!qc_constant(parse2("ab")).E_min.has_value());
}

TEST_CASE("virtual centralizer: root extraction and membership") {
  CHECK(commensurator(parse2("abab")).root.str() == "ab");
  CHECK(commensurator(parse2("Babb")).root.str() == "Babb");

  CHECK(in_commensurator(parse2("ab"), parse2("BABA")));   // (ab)^-2
  CHECK(!in_commensurator(parse2("ab"), parse2("ABAB")));  // not a power of ab
  CHECK(in_commensurator(parse2("ab"), parse2("ababab")));
  CHECK(in_commensurator(parse2("ab"), Word(kF2)));  // identity is in <ab>
  CHECK(!in_commensurator(parse2("ab"), parse2("ba")));
  CHECK_THROWS_AS(in_commensurator(Word(kF2), parse2("a")), Error);

  // independent fact: h is in E(g) iff h commutes with the primitive root
  std::mt19937_64 rng(2002);
  Word root = commensurator(parse2("abab")).root;
  for (int iter = 0; iter < 500; ++iter) {
    Word h = parse2(oracle::random_reduced(rng, 2, 1 + rng() % 8));
    bool commutes = (h * root * h.inverse()) == root;
    CHECK(in_commensurator(parse2("abab"), h) == commutes);
  }
  for (long long k = -4; k <= 4; ++k)
    if (k != 0)
      CHECK(in_commensurator(parse2("abab"), root.pow(k)));
}

TEST_CASE("cyclic intersections via least common powers") {
  Word meet = cyclic_intersection(parse2("abab"), parse2("ababab"));
  CHECK(meet == parse2("ab").pow(6));
  CHECK(cyclic_intersection(parse2("ab"), parse2("ba")).is_identity());
  CHECK(cyclic_intersection(parse2("ab"), parse2("BABA")) == parse2("ab").pow(2));
  CHECK(cyclic_intersection(parse2("a"), parse2("aa")) == parse2("aa"));
}

TEST_CASE("ball sizes match explicit enumeration") {
  for (unsigned rank = 1; rank <= 3; ++rank) {
    GroupDescriptor d(rank);
    for (unsigned radius = 0; radius <= (rank == 3 ? 4u : 5u); ++radius) {
      BigInt expected = 1 + BigInt(oracle::reduced_words(rank, radius).size());
      CHECK(ball_size(d, radius) == expected);
    }
  }
}

TEST_CASE("worst-case cancellation bound: formula and frozen instance") {
  KBound kb = k_bound(parse2("ab"), parse2("b"));
  CHECK(kb.E == 2);
  CHECK(kb.ball_radius == 6);
  CHECK(kb.ball_count == 1457);
  CHECK(kb.K == 14572);

  std::mt19937_64 rng(2003);
  int done = 0;
  while (done < 50) {
    Word g = parse2(oracle::random_reduced(rng, 2, 1 + rng() % 4));
    Word c = parse2(oracle::random_reduced(rng, 2, 1 + rng() % 3));
    if (in_commensurator(g, c)) continue;
    ++done;
    KBound k = k_bound(g, c);
    CyclicForm cf = cyclic_form(g);
    std::uint64_t E = cf.conjugator.length() + cf.core.length();
    std::uint64_t L = 2 * E + 2 * c.length();
    BigInt ball = 1 + BigInt(oracle::reduced_words(2, static_cast<unsigned>(L)).size());
    CHECK(k.E == E);
    CHECK(k.ball_radius == L);
    CHECK(k.ball_count == ball);
    CHECK(k.K == 2 * ball * (2 * BigInt(E) + 1) + 2 * BigInt(c.length()));
  }
  CHECK_THROWS_AS(k_bound(parse2("ab"), parse2("abab")),
                  CommensuratorViolationError);
}

TEST_CASE("empirical cancellation: frozen values, direct recomputation, K bound") {
  CHECK(k_empirical(parse2("ab"), parse2("a"), 30) == 1);
  CHECK(k_empirical(parse2("Aba"), parse2("b"), 20) == 0);

  // direct Word-arithmetic recomputation over a smaller window
  std::mt19937_64 rng(2004);
  int done = 0;
  while (done < 30) {
    Word g = parse2(oracle::random_reduced(rng, 2, 1 + rng() % 4));
    Word c = parse2(oracle::random_reduced(rng, 2, 1 + rng() % 4));
    if (in_commensurator(g, c)) continue;
    ++done;
    long long worst = 0;
    for (long long n = -8; n <= 8; ++n)
      for (long long m = -8; m <= 8; ++m) {
        long long deficit =
            static_cast<long long>(g.pow(n).length()) +
            static_cast<long long>(g.pow(m).length()) -
            static_cast<long long>((g.pow(n) * c * g.pow(m)).length());
        worst = std::max(worst, deficit);
      }
    CHECK(k_empirical(g, c, 8) == BigInt(worst));
  }

  for (auto [gs, cs] : {std::pair{"ab", "a"}, {"ab", "b"}, {"Aba", "b"}}) {
    CHECK(k_empirical(parse2(gs), parse2(cs), 10) <=
          k_bound(parse2(gs), parse2(cs)).K);
  }
}

TEST_CASE("divergence checks: local gaps force global linearity") {
  auto seq_of = [&](const std::vector<std::string>& pts, long long a) {
    DelzantSequence s;
    for (const auto& p : pts) s.points.push_back(P(p));
    s.a = a;
    return s;
  };

  DelzantSequence good = seq_of({"1", "(a)^2", "(a)^4", "(a)^7", "(a)^9"}, 2);
  CHECK(delzant_hypothesis(good));
  CHECK(delzant_conclusion(good));

  DelzantSequence tight = seq_of({"1", "(a)^1", "(a)^2"}, 2);
  CHECK(!delzant_hypothesis(tight));  // 2 >= max(1,1) + 2 fails
  CHECK(!delzant_conclusion(tight));  // d(x0,x1) = 1 < 2

  // backtracking sequence: conclusion fails, so the hypothesis must too
  DelzantSequence back = seq_of({"1", "(a)^5", "(a)^1", "(a)^6"}, 2);
  CHECK(!delzant_conclusion(back));
  CHECK(!delzant_hypothesis(back));
}

TEST_CASE("divergence checks: tree-shaped sequences and input validation") {
  std::mt19937_64 rng(2005);
  for (int iter = 0; iter < 200; ++iter) {
    long long a = 1 + static_cast<long long>(rng() % 3);
    DelzantSequence s;
    s.a = a;
    std::string cur;
    s.points.push_back(PowerWord(kF2));
    for (int i = 0; i < 6; ++i) {
      unsigned gap = static_cast<unsigned>(a) + static_cast<unsigned>(rng() % 3);
      std::string ext = oracle::random_reduced(rng, 2, gap);
      while (!cur.empty() && !ext.empty() &&
             ext.front() == oracle::flip_case(cur.back()))
        ext = oracle::random_reduced(rng, 2, gap);
      cur += ext;
      s.points.push_back(PowerWord(parse2(cur)));
    }
    CHECK(delzant_hypothesis(s));
    CHECK(delzant_conclusion(s));
  }

  DelzantSequence bad;
  bad.points = {PowerWord(kF2), PowerWord(parse2("a"))};
  CHECK_THROWS_AS(delzant_hypothesis(bad), Error);
  bad.points = {PowerWord(kF2)};
  CHECK_THROWS_AS(delzant_conclusion(bad), Error);
  bad.points = {PowerWord(kF2), P("(a)^3"), P("(a)^6")};
  bad.a = 0;
  CHECK_THROWS_AS(delzant_hypothesis(bad), Error);
}

TEST_CASE("no conjugation can change the magnitude of an exponent") {
  CHECK(conjugate_power_mismatches(parse2("ab"), 3, 3) == 0);
  CHECK(conjugate_power_mismatches(parse2("a"), 3, 3) == 0);
  CHECK(conjugate_power_mismatches(parse2("aab"), 2, 2) == 0);
}

}  // TEST_SUITE
