#pragma once

// JSON form of derivations and satisfaction reports.
//
//   {"root": id, "nodes": [{"id", "rule", "context", "subject", "type",
//                           "premises": [id...], "satisfaction"?}]}
//
// Terms and contexts are stored in the concrete text format. Premises always
// precede the nodes that use them; shared subderivations appear once.

#include <json.hpp>

#include "nucube/restriction.hpp"
#include "nucube/typing.hpp"

namespace nucube {

nlohmann::json report_to_json(const SatisfactionReport& r);
SatisfactionReport report_from_json(const nlohmann::json& j);

nlohmann::json derivation_to_json(const DerivationPtr& root);
// Throws Error(InvalidArgument) on a malformed document and ParseError on bad
// term text.
DerivationPtr derivation_from_json(const nlohmann::json& j);

}  // namespace nucube
