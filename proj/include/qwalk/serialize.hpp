#pragma once

#include <optional>

#include <json.hpp>

#include "qwalk/generator.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/linop.hpp"
#include "qwalk/szegedy.hpp"
#include "qwalk/validation.hpp"
#include "qwalk/walk_sim.hpp"

namespace qwalk {

using json = nlohmann::json;

/// {"rows": n, "cols": m, "re": [[...]], "im": [[...]]}
json operator_to_json(const Operator& a);
Operator operator_from_json(const json& j);

struct GraphDocument {
  Graph graph;
  std::optional<Weight> weight;
  std::optional<OneForm> one_form;
};

/// {"vertices": [...], "edges": [{"u": .., "v": ..}], "weights": {"0:f": [re, im]},
///  "one_form": {"0": theta}}. Weights, when present, must cover every arc.
GraphDocument graph_from_json(const json& j);
json graph_to_json(const Graph& g, const Weight* w = nullptr, const OneForm* theta = nullptr);

json report_to_json(const ValidationReport& r);

/// Graph (if any), d_A and S; with derived = true also C, U and T.
json walk_to_json(const WalkInstance& inst, bool derived = true);

json generator_to_json(const GeneratorDecomposition& gen);
json digraph_to_json(const Digraph& d);
json localization_to_json(const LocalizationReport& rep);

}  // namespace qwalk
