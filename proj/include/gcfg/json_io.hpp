#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "gcfg/configuration.hpp"
#include "gcfg/finstance.hpp"
#include "gcfg/group.hpp"
#include "gcfg/groupiso.hpp"
#include "gcfg/localglue.hpp"
#include "gcfg/quadrangle.hpp"
#include "gcfg/reconstruct.hpp"

namespace gcfg {

using json = nlohmann::json;

/// Any of the four instance-file payloads, keyed by the "type" field.
using InstanceFile = std::variant<ConfigPoints, FunctionalInstance, QuadRelation, FiniteGroupTable>;

/// Parses an instance document.  Malformed or unresolvable input throws
/// SchemaError.
InstanceFile parse_instance(const json& doc);
InstanceFile parse_instance_text(const std::string& text);
InstanceFile load_instance(const std::string& path);

json to_json(const ConfigPoints& cfg);
json to_json(const FunctionalInstance& inst);
json to_json(const QuadRelation& q);
json to_json(const FiniteGroupTable& g);

ConfigPoints matroid_config_from_json(const json& doc);
FunctionalInstance functional_instance_from_json(const json& doc);
QuadRelation quadrangle_from_json(const json& doc);
FiniteGroupTable group_from_json(const json& doc);

// report serialisers
json to_json(const ClauseReport& rep);
json to_json(const ValidityReport& rep);
json to_json(const EquationReport& rep);
json to_json(const ClosureReport& rep);
json to_json(const PresentationReport& rep);
json to_json(const AbClaimReport& rep);
json to_json(const FaithfulnessReport& rep);
json to_json(const AxiomReport& rep);
json to_json(const GlueGroupReport& rep);
json to_json(const EmbedReport& rep);

void save_json(const json& doc, const std::string& path);

} // namespace gcfg
