#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "nongen/stallings.hpp"
#include "support/oracles.hpp"

using namespace nongen;

namespace {

const GroupDescriptor kF2(2);

Word parse2(const std::string& s) { return Word::parse(kF2, s); }

CoreGraph build2(const std::vector<std::string>& gens) {
  std::vector<Word> words;
  for (const auto& g : gens) words.push_back(parse2(g));
  return CoreGraph::build(kF2, words);
}

BigInt big(const std::string& decimal) { return parse_decimal(decimal); }

}  // namespace

TEST_SUITE("stallings") {

TEST_CASE("whole group, index-two subgroup, one-generator subgroup") {
  CoreGraph whole = build2({"a", "b"});
  CHECK(whole.vertex_count() == 1);
  CHECK(whole.rank() == 2);
  CHECK(whole.contains(parse2("BaBAba")));
  CHECK(whole.shortest_nontrivial()->str() == "a");
  CHECK(whole.dump() == "basepoint 0\n0 0 a\n0 0 b\n");

  // even-length words form the kernel of the mod-2 length map
  CoreGraph even = build2({"aa", "ab", "ba"});
  CHECK(even.vertex_count() == 2);
  CHECK(even.rank() == 3);  // Nielsen-Schreier: 1 + 2*(2-1)
  for (const std::string& w : oracle::reduced_words(2, 6))
    CHECK(even.contains(parse2(w)) == (w.size() % 2 == 0));
  CHECK(even.shortest_nontrivial()->str() == "aa");

  CoreGraph conj = build2({"abA"});
  CHECK(conj.rank() == 1);
  CHECK(conj.contains(parse2("abA")));
  CHECK(conj.contains(parse2("abbbA")));
  CHECK(!conj.contains(parse2("ab")));
  CHECK(!conj.contains(parse2("ba")));
  CHECK(conj.shortest_nontrivial()->str() == "abA");
}

TEST_CASE("trivial and identity cases") {
  CoreGraph trivial = CoreGraph::build(kF2, {});
  CHECK(trivial.vertex_count() == 1);
  CHECK(trivial.rank() == 0);
  CHECK(trivial.contains(Word(kF2)));
  CHECK(!trivial.contains(parse2("a")));
  CHECK(!trivial.shortest_nontrivial().has_value());

  CoreGraph degenerate = CoreGraph::build(kF2, {Word(kF2), parse2("a")});
  CHECK(degenerate.rank() == 1);
  CHECK(degenerate.contains(parse2("aaa")));
  CHECK(!degenerate.contains(parse2("b")));
}

TEST_CASE("membership agrees with the naive edge-list refold oracle") {
  std::mt19937_64 rng(3001);
  std::vector<std::string> short_words = oracle::reduced_words(2, 5);

  for (int iter = 0; iter < 300; ++iter) {
    std::size_t ngens = 1 + rng() % 3;
    std::vector<std::string> gens;
    for (std::size_t i = 0; i < ngens; ++i)
      gens.push_back(oracle::random_reduced(rng, 2, 1 + rng() % 5));

    CoreGraph graph = build2(gens);
    oracle::NaiveGraph naive = oracle::naive_fold(2, gens);
    CHECK(graph.vertex_count() == naive.trans.size());

    std::string first_member;
    for (const std::string& w : short_words) {
      bool expected = naive.member(w);
      CHECK(graph.contains(parse2(w)) == expected);
      if (expected && first_member.empty()) first_member = w;
    }
    // generators have length <= 5, so the shortest element appears in the
    // shortlex enumeration and must be its first member
    REQUIRE(!first_member.empty());
    CHECK(graph.shortest_nontrivial()->str() == first_member);

    for (int extra = 0; extra < 50; ++extra) {
      std::string w = oracle::random_reduced(rng, 2, 1 + rng() % 12);
      CHECK(graph.contains(parse2(w)) == naive.member(w));
    }

    // products of the generators are members by definition
    for (int extra = 0; extra < 20; ++extra) {
      std::string prod;
      for (std::size_t f = 0, n = 1 + rng() % 6; f < n; ++f) {
        const std::string& pick = gens[rng() % gens.size()];
        prod += (rng() % 2) ? pick : oracle::invert(pick);
      }
      std::string reduced = oracle::reduce_stack(prod);
      Word w = reduced.empty() ? Word(kF2) : parse2(reduced);
      CHECK(graph.contains(w));
    }

    // the exponent-sum lattice gives an independent negative certificate
    std::vector<std::vector<long long>> lattice;
    for (const auto& g : gens) lattice.push_back(oracle::exponent_vector(2, g));
    for (int extra = 0; extra < 30; ++extra) {
      std::string w = oracle::random_reduced(rng, 2, 1 + rng() % 8);
      if (!oracle::in_lattice(lattice, oracle::exponent_vector(2, w)))
        CHECK(!graph.contains(parse2(w)));
    }
  }
}

TEST_CASE("compressed membership agrees with plain membership") {
  std::mt19937_64 rng(3002);
  for (int iter = 0; iter < 120; ++iter) {
    std::vector<std::string> gens;
    for (std::size_t i = 0, n = 1 + rng() % 3; i < n; ++i)
      gens.push_back(oracle::random_reduced(rng, 2, 1 + rng() % 5));
    CoreGraph graph = build2(gens);

    for (int k = 0; k < 15; ++k) {
      std::vector<PowerWord::Factor> raw;
      for (std::size_t f = 0, n = 1 + rng() % 4; f < n; ++f)
        raw.push_back({parse2(oracle::random_reduced(rng, 2, 1 + rng() % 4)),
                       BigInt(static_cast<long long>(rng() % 41) - 20)});
      PowerWord p = PowerWord::from_factors(kF2, raw);
      CHECK(graph.contains_pw(p) == graph.contains(p.expand(1u << 16)));
    }
  }
}

TEST_CASE("compressed membership at astronomical exponents") {
  CoreGraph even = build2({"aa", "ab", "ba"});
  BigInt huge = big("1" + std::string(40, '0'));  // even

  CHECK(even.contains_pw(PowerWord::power(parse2("ab"), huge)));
  CHECK(!even.contains_pw(PowerWord::power(parse2("ab"), huge) *
                          PowerWord(parse2("a"))));
  CHECK(even.contains_pw(PowerWord::power(parse2("aab"), huge + 1) *
                         PowerWord(parse2("b"))));

  CoreGraph asq = build2({"aa", "b"});
  CHECK(asq.contains_pw(PowerWord::power(parse2("a"), huge)));
  CHECK(!asq.contains_pw(PowerWord::power(parse2("a"), huge + 1)));
  CHECK(asq.contains_pw(PowerWord(parse2("b")) *
                        PowerWord::power(parse2("a"), huge) *
                        PowerWord(parse2("b"))));

  CoreGraph conj = build2({"abA"});
  CHECK(conj.contains_pw(PowerWord::power(parse2("abA"), huge)));
  CHECK(conj.contains_pw(PowerWord::power(parse2("b"), huge)) == false);
}

TEST_CASE("equality is invariant under presentation changes") {
  std::mt19937_64 rng(3003);
  for (int iter = 0; iter < 200; ++iter) {
    std::string s1 = oracle::random_reduced(rng, 2, 1 + rng() % 5);
    std::string s2 = oracle::random_reduced(rng, 2, 1 + rng() % 5);
    CoreGraph base = build2({s1, s2});

    // Nielsen moves preserve the subgroup
    CHECK(equal_subgroups(base, build2({s2, s1})));
    CHECK(equal_subgroups(base, build2({oracle::invert(s1), s2})));
    std::string prod = oracle::reduce_stack(s1 + s2);
    CoreGraph moved = CoreGraph::build(
        kF2, {prod.empty() ? Word(kF2) : parse2(prod), parse2(s2)});
    CHECK(equal_subgroups(base, moved));

    // byte-identical canonical dumps
    CHECK(base.dump() == build2({s2, s1}).dump());
  }

  CHECK(!equal_subgroups(build2({"a", "b"}), build2({"aa", "b"})));
  CHECK(!equal_subgroups(build2({"ab"}), build2({"ba"})));

  GroupDescriptor f3(3);
  CoreGraph other = CoreGraph::build(f3, {Word::parse(f3, "a")});
  CHECK_THROWS_AS(equal_subgroups(build2({"a"}), other),
                  DescriptorMismatchError);
}

TEST_CASE("a generator that adds nothing leaves the subgroup unchanged") {
  CoreGraph g1 = build2({"ab", "ba"});
  CoreGraph g2 = build2({"ab", "ba", "abba"});
  CHECK(equal_subgroups(g1, g2));
  CHECK(g1.rank() == 2);
}

}  // TEST_SUITE
