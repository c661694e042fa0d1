#pragma once

#include <json.hpp>
#include <string>

#include "petal/audit.hpp"
#include "petal/certificates.hpp"
#include "petal/oracle.hpp"
#include "petal/simulate.hpp"
#include "petal/spectral.hpp"
#include "petal/topology.hpp"
#include "petal/weights.hpp"

namespace petal {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const PetalSpec& spec);
Json to_json(const LeafKind& leaf);
Json to_json(const Graph& graph);
Json to_json(const WeightAssignment& weights, bool include_per_edge = false);
Json to_json(const SpectralReport& report);
Json to_json(const DualCertificate& cert);
Json to_json(const SlacknessReport& report);
Json to_json(const OracleResult& result);
Json to_json(const AuditReport& report);

/// Parse a spec document: {"core": "hub"|"complete", "n": 3, "leaf": LEAF} with
/// LEAF one of {"kind": "path_bundle", "m", "k"}, {"kind": "symmetric_g", "m", "k"},
/// {"kind": "asymmetric_g", "expand": [...], "contract": [...]},
/// {"kind": "composite", "segments": [LEAF, ...]}. Throws SpecError.
PetalSpec spec_from_json(const Json& doc);
LeafKind leaf_from_json(const Json& doc);

/// Graphviz rendering; nodes are coloured by stratum.
std::string to_dot(const Graph& graph);

}  // namespace petal
