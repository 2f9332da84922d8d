#pragma once

#include "torelli/curve.hpp"
#include "torelli/graph.hpp"

#include <json.hpp>

#include <string>

namespace torelli {

/// Reads and parses a JSON file; InputError on I/O or syntax errors.
nlohmann::json load_json_file(const std::string& path);

/// {"vertices":[{"id","genus"}],"edges":[{"id","ends":[a,b]}]}; unknown
/// fields are rejected.
GraphSpec parse_graph_spec(const nlohmann::json& j);
DecGraph parse_graph(const nlohmann::json& j);

/// {"components":[{"id","genus","iso_label","points","symmetries"}],
///  "nodes":[[p,q]...]}; iso_label and symmetries are optional.
CurveSpec parse_curve_spec(const nlohmann::json& j);
CombCurve parse_curve(const nlohmann::json& j);

/// True for curve documents (top-level "components").
bool is_curve_document(const nlohmann::json& j);

/// A graph file, or the dual graph of a curve file.
DecGraph load_graph(const std::string& path);
CombCurve load_curve(const std::string& path);

nlohmann::json graph_to_json(const DecGraph& g);
/// Symmetries are written as generators; components of genus <= 1 get none.
nlohmann::json curve_to_json(const CombCurve& x);

}  // namespace torelli
