#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nongen/geometry.hpp"
#include "nongen/power_word.hpp"
#include "nongen/stallings.hpp"
#include "nongen/word.hpp"

namespace nongen {

// Request for a certificate that g is not a non-generator of H = <S>.
struct WitnessRequest {
  GroupDescriptor descriptor;
  std::vector<Word> generators;  // S = s_1, ..., s_t
  Word g;
  bool exploration = false;              // overrides allowed, expansion-based
  std::optional<BigInt> n_override;      // replaces the computed scale N
  std::optional<BigInt> multiplier_override;  // replaces the factor 1000
  unsigned q_max = 12;
  std::uint64_t sample_count = 1000;
  std::uint64_t seed = 0;
  std::uint64_t expand_limit = 100000;  // budget for graphical separation
};

enum class InputClass { ok, not_in_subgroup, elementary, trivial_g };
std::string to_string(InputClass c);

// Classifies the request: `ok` iff H is non-elementary (rank >= 2), g is
// nontrivial and g lies in H.  Elementary (cyclic) subgroups are reported as
// such; their non-generators follow from cyclic-group arithmetic directly and
// none of the machinery below applies.
InputClass check_input(const WitnessRequest& req, const CoreGraph& subgroup);

// Deterministic choice of the pivot generator and the adjusted set:
// s1 = lowest-index generator outside E(g), swapped to the front; any other
// generator inside E(g) is replaced by s_j * s1.  Every c_j then lies
// outside E(g).
struct NormalizedGenerators {
  std::size_t s1_index = 0;     // position of the pivot in the original list
  std::vector<Word> reordered;  // original generators with the pivot in front
  std::vector<Word> c;          // adjusted generators, all outside E(g)
};
NormalizedGenerators normalize_generators(const std::vector<Word>& generators,
                                          const Word& g);

// The full constant stack of the construction, plus the compressed
// generators h_j = g^{n_j} c_j g^{10 n_j}.
struct WitnessCertificate {
  GroupDescriptor descriptor;
  std::vector<Word> original_generators;
  Word g;
  std::size_t s1_index = 0;
  std::vector<Word> reordered_generators;
  std::vector<Word> c;
  std::uint64_t T0 = 0;  // length of the shortest nontrivial element of H
  Word t0_witness;       // a shortest element f realizing T0
  std::uint64_t T = 0;   // T0 + 1, the separation threshold
  BigInt K1;             // max_j of the worst-case bound K(g, c_j)
  BigInt K2;             // max_j |c_j|
  BigInt K;              // max(K1, K2)
  std::uint64_t C = 0;   // linear growth constant of powers of g
  BigInt N;              // scale: minimal integer > 1 with C*N >= 3K + 2d + 100T
  BigInt multiplier;     // 1000 unless overridden in exploration mode
  std::vector<BigInt> n;      // n_j = multiplier * j * N
  std::vector<PowerWord> h;   // h_j
  std::vector<KBound> k_bounds;
  bool exploration = false;
  bool overrides_applied = false;
};
WitnessCertificate compute_constants(const WitnessRequest& req,
                                     const NormalizedGenerators& normalized,
                                     const CoreGraph& subgroup);

// One sampled freely reduced product over Q' = {h_1^±1, ..., h_t^±1}:
// syllable i uses h_{index_i}^{sign_i}, and adjacent syllables never cancel.
struct ProductForm {
  std::vector<std::size_t> indices;  // 0-based into cert.h
  std::vector<int> signs;            // +1 / -1
};
std::vector<ProductForm> sample_products(const WitnessCertificate& cert,
                                         unsigned q_max, std::uint64_t count,
                                         std::uint64_t seed);

// Aggregated result of checking the sampled products: the length claim
// |w| >= T*q, the local and global divergence of the x-sequence, and the
// syllable exponent gaps.
struct VerificationReport {
  std::uint64_t samples_checked = 0;
  std::uint64_t claim_failures = 0;
  std::uint64_t hypothesis_checks = 0;
  std::uint64_t hypothesis_failures = 0;
  std::uint64_t conclusion_failures = 0;
  std::uint64_t gap_checks = 0;
  std::uint64_t gap_failures = 0;
};
VerificationReport verify_claim(const WitnessCertificate& cert,
                                const std::vector<ProductForm>& forms);

// h_j collapses back to c_j after stripping the g-powers, and the original
// generators are recoverable from the adjusted ones.
bool verify_regeneration(const WitnessCertificate& cert);

// Why <Q'> cannot be all of H.
struct SeparationEvidence {
  bool logical_ok = false;  // |f| = T0 < T contradicts the verified claim
  enum class Graphical { not_attempted, expansion_exceeded, separated, failed };
  Graphical graphical = Graphical::not_attempted;
  std::string detail;
};
SeparationEvidence verify_separation(const WitnessCertificate& cert,
                                     const CoreGraph& subgroup,
                                     const VerificationReport& report,
                                     std::uint64_t expand_limit);

// Final verdict: emitted only when every performed check passed (and, in
// exploration mode, only with graphical separation in hand).
struct Conclusion {
  bool concluded = false;
  std::string statement;       // empty unless concluded
  std::string refusal_reason;  // empty when concluded
};
Conclusion conclude(const WitnessCertificate& cert,
                    const VerificationReport& report,
                    const SeparationEvidence& separation,
                    bool regeneration_ok);

// End-to-end pipeline result.
struct WitnessOutcome {
  InputClass classification = InputClass::ok;
  std::optional<WitnessCertificate> certificate;
  std::optional<VerificationReport> report;
  std::optional<SeparationEvidence> separation;
  bool regeneration_ok = false;
  Conclusion conclusion;
};
WitnessOutcome run_witness(const WitnessRequest& req);

}  // namespace nongen
