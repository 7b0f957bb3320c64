#pragma once

#include <json.hpp>

#include "ncilab/betti.hpp"
#include "ncilab/error.hpp"
#include "ncilab/hypergraph.hpp"
#include "ncilab/nci.hpp"
#include "ncilab/splitting.hpp"
#include "ncilab/weighted_graph.hpp"

namespace ncilab {

using Json = nlohmann::ordered_json;

/// {"vertices": [...], "edges": [[...], ...]}, edges in canonical order.
Json to_json(const Hypergraph& g);
/// Throws Schema on shape errors, UnknownVertex / DuplicateLabel from the
/// constructor.
Hypergraph hypergraph_from_json(const Json& j);

/// {"vertices": [{"label": "a", "weight": 3}, ...], "edges": [["a", "b"], ...]}.
Json to_json(const WeightedGraph& w);
WeightedGraph weighted_graph_from_json(const Json& j);

/// {"status": "NCI", "route": "structural", "witness": null | {...}}.
Json to_json(const NciVerdict& v);

/// {"subject": "IDEAL", "entries": [{"i": 0, "j": 2, "beta": 13}, ...]}.
Json to_json(const BettiTable& t);
BettiTable betti_table_from_json(const Json& j);

Json to_json(const DecompositionReport& r);
Json to_json(const PdimReport& r);

/// {"error": "<kind>", "message": "...", "position": n (parse errors only)}.
Json to_json(const Error& e);

/// Pretty-printed with two-space indent and a trailing newline; the single
/// formatter shared by every JSON producer.
std::string format_json(const Json& j);

}  // namespace ncilab
