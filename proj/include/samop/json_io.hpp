#pragma once

#include <json.hpp>

#include "samop/completion.hpp"
#include "samop/graph.hpp"
#include "samop/invariants.hpp"
#include "samop/oracle.hpp"
#include "samop/region.hpp"
#include "samop/signature.hpp"

namespace samop {

// Machine-readable output. Extended naturals serialize as a number or "inf";
// scalars as their DSL literal (round-trips through the parser).
nlohmann::json to_json(const ExtNat& v);
nlohmann::json to_json(const GaussianRational& z);
nlohmann::json to_json(const FredholmSignature& s);
nlohmann::json to_json(const FredholmClass& c);
nlohmann::json to_json(const RegionCell& c);
nlohmann::json to_json(const Region& r);
nlohmann::json to_json(const ChainCensus& c);
nlohmann::json to_json(const WitnessMap& w);
nlohmann::json to_json(const NormalForm3& nf);
nlohmann::json to_json(const CompletionVerdict& v);
nlohmann::json to_json(const TruncationReport& r);

}  // namespace samop
