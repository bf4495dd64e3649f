#include "nongen/witness.hpp"

#include <algorithm>
#include <atomic>

#include "nongen/parallel.hpp"
#include "nongen/prng.hpp"

namespace nongen {

std::string to_string(InputClass c) {
  switch (c) {
    case InputClass::ok:
      return "ok";
    case InputClass::not_in_subgroup:
      return "not_in_subgroup";
    case InputClass::elementary:
      return "elementary";
    case InputClass::trivial_g:
      return "trivial_g";
  }
  return "unknown";
}

InputClass check_input(const WitnessRequest& req, const CoreGraph& subgroup) {
  if (subgroup.rank() <= 1) return InputClass::elementary;
  if (req.g.is_identity()) return InputClass::trivial_g;
  if (!subgroup.contains(req.g)) return InputClass::not_in_subgroup;
  return InputClass::ok;
}

NormalizedGenerators normalize_generators(const std::vector<Word>& generators,
                                          const Word& g) {
  if (generators.empty()) throw Error("no generators given");
  std::size_t pivot = generators.size();
  for (std::size_t j = 0; j < generators.size(); ++j) {
    if (!in_commensurator(g, generators[j])) {
      pivot = j;
      break;
    }
  }
  if (pivot == generators.size())
    throw Error(
        "every generator lies in E(g); the subgroup would be elementary");

  NormalizedGenerators out;
  out.s1_index = pivot;
  out.reordered = generators;
  std::swap(out.reordered[0], out.reordered[pivot]);
  const Word& s1 = out.reordered[0];
  out.c.reserve(out.reordered.size());
  out.c.push_back(s1);
  for (std::size_t j = 1; j < out.reordered.size(); ++j) {
    const Word& sj = out.reordered[j];
    out.c.push_back(in_commensurator(g, sj) ? sj * s1 : sj);
  }
  for (const Word& cj : out.c)
    if (in_commensurator(g, cj))
      throw Error("adjusted generator unexpectedly lies in E(g)");
  return out;
}

WitnessCertificate compute_constants(const WitnessRequest& req,
                                     const NormalizedGenerators& normalized,
                                     const CoreGraph& subgroup) {
  WitnessCertificate cert;
  cert.descriptor = req.descriptor;
  cert.original_generators = req.generators;
  cert.g = req.g;
  cert.s1_index = normalized.s1_index;
  cert.reordered_generators = normalized.reordered;
  cert.c = normalized.c;
  cert.exploration = req.exploration;

  std::optional<Word> shortest = subgroup.shortest_nontrivial();
  if (!shortest) throw Error("trivial subgroup has no shortest element");
  cert.t0_witness = *shortest;
  cert.T0 = shortest->length();
  cert.T = cert.T0 + 1;
  cert.C = growth_constant(req.g).C;

  cert.K2 = 0;
  for (const Word& cj : cert.c) {
    cert.k_bounds.push_back(k_bound(req.g, cj));
    cert.K1 = std::max(cert.K1, cert.k_bounds.back().K);
    cert.K2 = std::max(cert.K2, BigInt(cj.length()));
  }
  cert.K = std::max(cert.K1, cert.K2);

  BigInt delta = req.descriptor.delta();
  BigInt target = 3 * cert.K + 2 * delta + 100 * BigInt(cert.T);
  cert.N = std::max(BigInt(2), ceil_div(target, BigInt(cert.C)));
  cert.multiplier = 1000;
  if (req.exploration) {
    if (req.n_override) {
      cert.N = *req.n_override;
      cert.overrides_applied = true;
    }
    if (req.multiplier_override) {
      cert.multiplier = *req.multiplier_override;
      cert.overrides_applied = true;
    }
  }

  for (std::size_t j = 1; j <= cert.c.size(); ++j) {
    BigInt nj = cert.multiplier * BigInt(j) * cert.N;
    cert.n.push_back(nj);
    cert.h.push_back(PowerWord::power(req.g, nj) * PowerWord(cert.c[j - 1]) *
                     PowerWord::power(req.g, 10 * nj));
  }
  return cert;
}

std::vector<ProductForm> sample_products(const WitnessCertificate& cert,
                                         unsigned q_max, std::uint64_t count,
                                         std::uint64_t seed) {
  if (q_max < 1) throw Error("q_max must be at least 1");
  std::size_t t = cert.c.size();
  Prng rng(seed);
  std::vector<ProductForm> forms;
  forms.reserve(count);
  for (std::uint64_t s = 0; s < count; ++s) {
    std::uint64_t q = rng.range(1, q_max);
    ProductForm form;
    form.indices.reserve(q);
    form.signs.reserve(q);
    for (std::uint64_t i = 0; i < q; ++i) {
      for (;;) {
        std::size_t j = static_cast<std::size_t>(rng.below(t));
        int sign = rng.coin() ? 1 : -1;
        // Freely reduced over Q': never follow a syllable by its inverse.
        if (!form.indices.empty() && form.indices.back() == j &&
            form.signs.back() == -sign)
          continue;
        form.indices.push_back(j);
        form.signs.push_back(sign);
        break;
      }
    }
    forms.push_back(std::move(form));
  }
  return forms;
}

namespace {

struct SampleResult {
  bool claim_ok = true;
  bool hypothesis_ok = true;
  bool conclusion_ok = true;
  bool gaps_ok = true;
};

SampleResult check_form(const WitnessCertificate& cert,
                        const ProductForm& form) {
  std::size_t q = form.indices.size();
  // Per-syllable exponents and middle letters from the sign pattern.
  std::vector<BigInt> m(q), l(q);
  std::vector<Word> b(q);
  for (std::size_t i = 0; i < q; ++i) {
    const BigInt& nj = cert.n[form.indices[i]];
    const Word& cj = cert.c[form.indices[i]];
    if (form.signs[i] == 1) {
      m[i] = nj;
      l[i] = 10 * nj;
      b[i] = cj;
    } else {
      m[i] = -10 * nj;
      l[i] = -nj;
      b[i] = cj.inverse();
    }
  }

  // x_0 = 1, x_1 = g^{m_1}, x_{i+1} = x_i b_i g^{l_i + m_{i+1}}, and the
  // full product w = x_q b_q g^{l_q} as the final point.
  std::vector<PowerWord> points;
  points.reserve(q + 2);
  points.emplace_back(cert.descriptor);
  points.push_back(PowerWord::power(cert.g, m[0]));
  for (std::size_t i = 1; i < q; ++i)
    points.push_back(points.back() * PowerWord(b[i - 1]) *
                     PowerWord::power(cert.g, l[i - 1] + m[i]));
  points.push_back(points.back() * PowerWord(b[q - 1]) *
                   PowerWord::power(cert.g, l[q - 1]));

  SampleResult res;
  const PowerWord& w = points.back();
  res.claim_ok = pw_length(w) >= BigInt(cert.T) * BigInt(q);

  DelzantSequence seq;
  seq.points = points;
  seq.a = cert.T;
  seq.delta = cert.descriptor.delta();
  res.hypothesis_ok = delzant_hypothesis(seq);
  res.conclusion_ok = delzant_conclusion(seq);

  for (std::size_t i = 0; i < q && res.gaps_ok; ++i) {
    if (abs_big(m[i]) < cert.N || abs_big(l[i]) < cert.N) res.gaps_ok = false;
    if (i + 1 < q && abs_big(l[i] + m[i + 1]) < cert.N) res.gaps_ok = false;
  }
  return res;
}

}  // namespace

VerificationReport verify_claim(const WitnessCertificate& cert,
                                const std::vector<ProductForm>& forms) {
  std::vector<SampleResult> results(forms.size());
  parallel_for(forms.size(), [&](std::size_t i) {
    results[i] = check_form(cert, forms[i]);
  });
  VerificationReport report;
  report.samples_checked = forms.size();
  for (const auto& r : results) {
    report.claim_failures += r.claim_ok ? 0 : 1;
    report.hypothesis_checks += 1;
    report.hypothesis_failures += r.hypothesis_ok ? 0 : 1;
    report.conclusion_failures += r.conclusion_ok ? 0 : 1;
    report.gap_checks += 1;
    report.gap_failures += r.gaps_ok ? 0 : 1;
  }
  return report;
}

bool verify_regeneration(const WitnessCertificate& cert) {
  for (std::size_t j = 0; j < cert.h.size(); ++j) {
    PowerWord stripped = PowerWord::power(cert.g, -cert.n[j]) * cert.h[j] *
                         PowerWord::power(cert.g, -10 * cert.n[j]);
    if (!pw_equal(stripped, PowerWord(cert.c[j]))) return false;
  }
  const Word& s1 = cert.reordered_generators[0];
  for (std::size_t j = 0; j < cert.c.size(); ++j) {
    const Word& sj = cert.reordered_generators[j];
    if (sj != cert.c[j] && sj != cert.c[j] * s1.inverse()) return false;
  }
  // The reorder must be the original set with one swap.
  std::vector<Word> restored = cert.reordered_generators;
  if (cert.s1_index >= restored.size()) return false;
  std::swap(restored[0], restored[cert.s1_index]);
  return restored == cert.original_generators;
}

SeparationEvidence verify_separation(const WitnessCertificate& cert,
                                     const CoreGraph& subgroup,
                                     const VerificationReport& report,
                                     std::uint64_t expand_limit) {
  SeparationEvidence out;
  out.logical_ok = report.claim_failures == 0 && cert.T0 < cert.T;
  out.detail = "any nontrivial product over the replacement generators has "
               "length >= " +
               std::to_string(cert.T) + ", but H contains " +
               cert.t0_witness.str() + " of length " + std::to_string(cert.T0);
  if (!cert.exploration) return out;

  std::vector<Word> expanded;
  expanded.reserve(cert.h.size());
  for (const auto& hj : cert.h) {
    try {
      expanded.push_back(hj.expand(expand_limit));
    } catch (const ExpandLimitError&) {
      out.graphical = SeparationEvidence::Graphical::expansion_exceeded;
      out.detail += "; expansion budget exceeded, graphical check skipped";
      return out;
    }
  }
  CoreGraph qprime = CoreGraph::build(cert.descriptor, expanded);
  bool f_outside = !qprime.contains(cert.t0_witness);
  bool proper = !equal_subgroups(qprime, subgroup);
  if (f_outside && proper) {
    out.graphical = SeparationEvidence::Graphical::separated;
    out.detail += "; confirmed on the folded graph of the expanded h's";
  } else {
    out.graphical = SeparationEvidence::Graphical::failed;
    out.detail += f_outside ? "; <Q'> equals H on the folded graphs"
                            : "; the shortest element still lies in <Q'>";
  }
  return out;
}

Conclusion conclude(const WitnessCertificate& cert,
                    const VerificationReport& report,
                    const SeparationEvidence& separation,
                    bool regeneration_ok) {
  Conclusion out;
  auto refuse = [&](const std::string& why) {
    out.concluded = false;
    out.refusal_reason = why;
    return out;
  };
  if (report.claim_failures > 0) return refuse("length claim failed on samples");
  if (report.hypothesis_failures > 0)
    return refuse("local divergence hypothesis failed on samples");
  if (report.conclusion_failures > 0)
    return refuse("global divergence failed on samples");
  if (report.gap_failures > 0) return refuse("syllable gap bound violated");
  if (!regeneration_ok) return refuse("regeneration identities failed");
  if (!separation.logical_ok) return refuse("logical separation unavailable");
  if (cert.exploration &&
      separation.graphical != SeparationEvidence::Graphical::separated) {
    return refuse(
        "exploration mode requires graphical separation; it was " +
        std::string(separation.graphical ==
                            SeparationEvidence::Graphical::expansion_exceeded
                        ? "not computable within the expansion budget"
                        : "not confirmed"));
  }
  out.concluded = true;
  out.statement =
      "g is not a non-generator of H: removing g from the verified "
      "generating set {g, h_1, ..., h_t} leaves a proper subgroup; hence g "
      "lies outside the Frattini subgroup of H";
  return out;
}

WitnessOutcome run_witness(const WitnessRequest& req) {
  for (const Word& s : req.generators)
    require_same_group(req.descriptor, s.descriptor());
  require_same_group(req.descriptor, req.g.descriptor());

  WitnessOutcome out;
  CoreGraph subgroup = CoreGraph::build(req.descriptor, req.generators);
  out.classification = check_input(req, subgroup);
  if (out.classification != InputClass::ok) {
    out.conclusion.refusal_reason =
        "input rejected: " + to_string(out.classification);
    return out;
  }

  NormalizedGenerators normalized = normalize_generators(req.generators, req.g);
  out.certificate = compute_constants(req, normalized, subgroup);
  std::vector<ProductForm> forms =
      sample_products(*out.certificate, req.q_max, req.sample_count, req.seed);
  out.report = verify_claim(*out.certificate, forms);
  out.regeneration_ok = verify_regeneration(*out.certificate);
  out.separation = verify_separation(*out.certificate, subgroup, *out.report,
                                     req.expand_limit);
  out.conclusion = conclude(*out.certificate, *out.report, *out.separation,
                            out.regeneration_ok);
  return out;
}

}  // namespace nongen
