#pragma once

// JSON forms of the core types. Objects use sorted keys (nlohmann::json's
// default map), arrays follow colex / canonical order, so equal values
// serialize to identical bytes.

#include <json.hpp>

#include "zsr/coloring.hpp"
#include "zsr/decomposition.hpp"
#include "zsr/group.hpp"
#include "zsr/hypergraph.hpp"
#include "zsr/ramsey.hpp"
#include "zsr/zerosum.hpp"

namespace zsr {

using Json = nlohmann::json;

Json to_json(const Group& group);
Group group_from_json(const Json& j);

Json element_to_json(const Group& group, int rank);
int element_from_json(const Group& group, const Json& j);

Json to_json(const GSeq& seq);
GSeq gseq_from_json(const Group& group, const Json& j);

Json to_json(const Edge& edge);
Edge edge_from_json(const Json& j);
Json to_json(const EdgeFamily& family);
EdgeFamily family_from_json(int n, int r, const Json& j);

/// {"colors": [[coords]...], "group": [...], "n": n, "r": r}
Json to_json(const Coloring& coloring);
Coloring coloring_from_json(const Json& j);

/// {"ambient": {"n": n, "r": r}, "parts": [[edge...]...], "sizes": [...]}
Json to_json(const Decomposition& d);
Decomposition decomposition_from_json(const Json& j);

Json to_json(const InvariantRecord& record);
InvariantRecord record_from_json(const Json& j);

Json to_json(const Provenance& p);
Json to_json(const BoundReport& report);

/// Deterministic parts only: node counts are left out.
Json to_json(const LevelResult& level);
Json to_json(const RamseyResult& result);

std::string status_name(SearchStatus status);
std::string outcome_name(LevelOutcome outcome);

}  // namespace zsr
