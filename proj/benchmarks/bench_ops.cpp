#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "nongen/power_word.hpp"
#include "nongen/stallings.hpp"
#include "nongen/witness.hpp"
#include "nongen/word.hpp"

namespace {

using namespace nongen;

const GroupDescriptor kF2(2);

std::string random_reduced(std::mt19937_64& rng, std::size_t len) {
  static const char letters[] = {'a', 'A', 'b', 'B'};
  std::string w;
  while (w.size() < len) {
    char c = letters[rng() % 4];
    if (!w.empty() && (w.back() ^ c) == 0x20 &&
        (w.back() | 0x20) == (c | 0x20))
      continue;
    w.push_back(c);
  }
  return w;
}

// Multiplying a word by a deep partial inverse exercises the boundary
// cancellation path end to end.
void BM_word_cancelling_multiply(benchmark::State& state) {
  std::mt19937_64 rng(1);
  Word left = Word::parse(kF2, random_reduced(rng, 4096));
  Word right = left.inverse() * Word::parse(kF2, random_reduced(rng, 4096));
  for (auto _ : state) {
    Word prod = left * right;
    benchmark::DoNotOptimize(prod);
  }
}
BENCHMARK(BM_word_cancelling_multiply);

// Normalizing a raw factor list with astronomical exponents; the collapse
// rules must run in exponent arithmetic, never by expansion.
void BM_power_word_normalize(benchmark::State& state) {
  const BigInt huge("1000000000000000000000000000000");
  std::vector<PowerWord::Factor> raw;
  Word ab = Word::parse(kF2, "ab");
  Word ba = Word::parse(kF2, "ba");
  for (int i = 0; i < 4; ++i) {
    raw.push_back({ab, huge});
    raw.push_back({ba, -huge});
  }
  for (auto _ : state) {
    PowerWord p = PowerWord::from_factors(kF2, raw);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_power_word_normalize);

// Membership of a compressed word with a 10^40 exponent, decided by
// transition-map squaring on the folded graph.
void BM_compressed_membership(benchmark::State& state) {
  CoreGraph even = CoreGraph::build(
      kF2, {Word::parse(kF2, "aa"), Word::parse(kF2, "ab"),
            Word::parse(kF2, "ba")});
  PowerWord p = PowerWord::power(Word::parse(kF2, "ab"),
                                 BigInt("10000000000000000000000000000000000000000"));
  p = pw_multiply(p, PowerWord(Word::parse(kF2, "a")));
  for (auto _ : state) {
    bool in = even.contains_pw(p);
    benchmark::DoNotOptimize(in);
  }
}
BENCHMARK(BM_compressed_membership);

// Folding forty random generators of length up to twelve.
void BM_fold_generators(benchmark::State& state) {
  std::mt19937_64 rng(7);
  std::vector<Word> gens;
  for (int i = 0; i < 40; ++i)
    gens.push_back(Word::parse(kF2, random_reduced(rng, 1 + rng() % 12)));
  for (auto _ : state) {
    CoreGraph g = CoreGraph::build(kF2, gens);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_fold_generators);

// Shortest nontrivial element of a folded forty-generator subgroup.
void BM_shortest_element(benchmark::State& state) {
  std::mt19937_64 rng(7);
  std::vector<Word> gens;
  for (int i = 0; i < 40; ++i)
    gens.push_back(Word::parse(kF2, random_reduced(rng, 1 + rng() % 12)));
  CoreGraph g = CoreGraph::build(kF2, gens);
  for (auto _ : state) {
    auto w = g.shortest_nontrivial();
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_shortest_element);

// The full witness pipeline on the rank-two reference input with a small
// sample budget: constants, sampling, claim checks, separation, verdict.
void BM_witness_pipeline(benchmark::State& state) {
  WitnessRequest req;
  req.descriptor = kF2;
  req.generators = {Word::parse(kF2, "a"), Word::parse(kF2, "b")};
  req.g = Word::parse(kF2, "ab");
  req.sample_count = 5;
  req.q_max = 6;
  for (auto _ : state) {
    WitnessOutcome out = run_witness(req);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_witness_pipeline);

}  // namespace

BENCHMARK_MAIN();
