#include "nongen/json_io.hpp"

#include <json.hpp>

namespace nongen {

namespace {

using Json = nlohmann::ordered_json;

Json descriptor_obj(const GroupDescriptor& desc) {
  return Json{{"rank", desc.rank()},
              {"letters", desc.letters()},
              {"delta", desc.delta()}};
}

Json kbound_obj(const KBound& kb) {
  return Json{{"g", kb.g.str()},
              {"c", kb.c.str()},
              {"E", kb.E},
              {"delta", kb.delta},
              {"ball_radius", kb.ball_radius},
              {"ball_count", to_decimal(kb.ball_count)},
              {"K", to_decimal(kb.K)}};
}

Json certificate_obj(const WitnessCertificate& cert) {
  Json j;
  j["mode"] = cert.exploration ? "exploration" : "paper";
  j["overrides_applied"] = cert.overrides_applied;
  j["descriptor"] = descriptor_obj(cert.descriptor);
  Json gens = Json::array();
  for (const auto& s : cert.original_generators) gens.push_back(s.str());
  j["generators"] = gens;
  j["g"] = cert.g.str();
  j["s1_index"] = cert.s1_index + 1;  // 1-based position in the input list
  Json cs = Json::array();
  for (const auto& c : cert.c) cs.push_back(c.str());
  j["c"] = cs;
  j["T0"] = cert.T0;
  j["t0_witness"] = cert.t0_witness.str();
  j["T"] = cert.T;
  j["K1"] = to_decimal(cert.K1);
  j["K2"] = to_decimal(cert.K2);
  j["K"] = to_decimal(cert.K);
  j["C"] = cert.C;
  j["N"] = to_decimal(cert.N);
  j["multiplier"] = to_decimal(cert.multiplier);
  Json ns = Json::array();
  for (const auto& nj : cert.n) ns.push_back(to_decimal(nj));
  j["n"] = ns;
  Json hs = Json::array();
  for (const auto& hj : cert.h) hs.push_back(hj.str());
  j["h"] = hs;
  Json kbs = Json::array();
  for (const auto& kb : cert.k_bounds) kbs.push_back(kbound_obj(kb));
  j["k_bounds"] = kbs;
  return j;
}

Json report_obj(const VerificationReport& r) {
  return Json{{"samples_checked", r.samples_checked},
              {"claim_failures", r.claim_failures},
              {"delzant",
               Json{{"checks", r.hypothesis_checks},
                    {"hypothesis_failures", r.hypothesis_failures},
                    {"conclusion_failures", r.conclusion_failures}}},
              {"syllable_gaps",
               Json{{"checks", r.gap_checks}, {"failures", r.gap_failures}}}};
}

const char* graphical_name(SeparationEvidence::Graphical g) {
  switch (g) {
    case SeparationEvidence::Graphical::not_attempted:
      return "not_attempted";
    case SeparationEvidence::Graphical::expansion_exceeded:
      return "expansion_exceeded";
    case SeparationEvidence::Graphical::separated:
      return "separated";
    case SeparationEvidence::Graphical::failed:
      return "failed";
  }
  return "unknown";
}

Json separation_obj(const SeparationEvidence& s) {
  return Json{{"logical_ok", s.logical_ok},
              {"graphical", graphical_name(s.graphical)},
              {"detail", s.detail}};
}

}  // namespace

std::string certificate_json(const WitnessCertificate& cert) {
  return certificate_obj(cert).dump(2);
}

std::string k_bound_json(const KBound& kb) { return kbound_obj(kb).dump(2); }

std::string witness_outcome_json(const WitnessOutcome& outcome) {
  Json j;
  j["classification"] = to_string(outcome.classification);
  if (outcome.certificate)
    j["certificate"] = certificate_obj(*outcome.certificate);
  if (outcome.report) j["report"] = report_obj(*outcome.report);
  j["regeneration_ok"] = outcome.regeneration_ok;
  if (outcome.separation) j["separation"] = separation_obj(*outcome.separation);
  j["conclusion"] = Json{{"concluded", outcome.conclusion.concluded},
                         {"statement", outcome.conclusion.statement},
                         {"refusal_reason", outcome.conclusion.refusal_reason}};
  return j.dump(2);
}

}  // namespace nongen
