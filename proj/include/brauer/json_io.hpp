#pragma once

#include <json.hpp>

#include "brauer/admissible.hpp"
#include "brauer/exact.hpp"
#include "brauer/g2.hpp"
#include "brauer/phi.hpp"
#include "brauer/prover.hpp"

namespace brauer {

using nlohmann::json;

json laurent_to_json(const LaurentPoly& p);  // {"exponent": coefficient}
LaurentPoly laurent_from_json(const json& j);

json root_system_to_json(const RootSystem& rs);
RootSystem root_system_from_json(const json& j);  // rebuilds and cross-checks

json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const json& j);

json trace_to_json(const ProofTrace& t);
json pipeline_to_json(const PipelineReport& r);
json poset_to_json(const RootSystem& rs, const OrbitPoset& poset);
json phi_report_to_json(const PhiReport& r);
json census_to_json(const RootSystem& d4, const SigmaCensus& c);
json g2_verify_to_json(const G2Algebra::VerifyReport& r);
json set_to_json(const RootSystem& rs, const std::set<int>& B);

}  // namespace brauer
