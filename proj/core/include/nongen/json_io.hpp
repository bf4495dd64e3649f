#pragma once

#include <string>

#include "nongen/geometry.hpp"
#include "nongen/witness.hpp"

namespace nongen {

// Complete JSON documents (2-space indent, key order fixed, big integers as
// decimal strings), suitable for byte-identical reproducibility checks.
std::string certificate_json(const WitnessCertificate& cert);
std::string witness_outcome_json(const WitnessOutcome& outcome);
std::string k_bound_json(const KBound& kb);

}  // namespace nongen
