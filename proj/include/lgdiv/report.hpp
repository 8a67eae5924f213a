#pragma once

#include <json.hpp>

#include "lgdiv/families.hpp"

namespace lgdiv {

// JSON schemas used by the shared-library API and the CLI.  A group is
// {"p": 5, "n": 3, "generators": [[[a11, a12], [a21, a22]], ...]} with entries
// reduced mod p^n; every report embeds the same fields so its group can be
// fed back as input.

nlohmann::json mat_json(const Mat2& m);
nlohmann::json group_input_json(const MatrixGroup& g);

GroupPtr group_from_json(const nlohmann::json& j, uint64_t cap = kDefaultGroupCap);
FamilySpec family_spec_from_json(const nlohmann::json& j);
GridConfig grid_config_from_json(const nlohmann::json& j);
SearchOptions search_options_from_json(const nlohmann::json& j);

nlohmann::json analyze_report(const GroupPtr& g, CohomologyBackend backend);
nlohmann::json h1loc_report(const GroupPtr& g, CohomologyBackend backend);
nlohmann::json certificate_json(const CounterexampleCertificate& cert);
nlohmann::json grid_json(const GridReport& rep);
nlohmann::json search_json(const std::vector<CounterexampleCertificate>& certs);
nlohmann::json isogeny_json(const MatrixGroup& g, const IsogenyReport& rep);

} // namespace lgdiv
