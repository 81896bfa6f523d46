#pragma once

#include <string>

#include <json.hpp>

#include "xsom/evaluator.hpp"
#include "xsom/explain.hpp"
#include "xsom/ghsom.hpp"
#include "xsom/map_model.hpp"
#include "xsom/pipeline.hpp"
#include "xsom/pruner.hpp"

namespace xsom {

// Versioned model documents; doubles survive a dump/parse round trip
// bit-exactly (shortest round-trippable decimals).
nlohmann::json map_to_json(const MapModel& map);
MapModel map_from_json(const nlohmann::json& j);

nlohmann::json tree_to_json(const GhsomTree& tree);
GhsomTree tree_from_json(const nlohmann::json& j);

nlohmann::json preprocessor_to_json(const Preprocessor& p);
Preprocessor preprocessor_from_json(const nlohmann::json& j);

nlohmann::json quality_to_json(const QualityReport& q);
nlohmann::json eval_report_to_json(const EvalReport& r);
nlohmann::json prune_report_to_json(const PruneReport& r);

// Explanation artifacts, wrapped as {kind, version, map_id, payload}.
nlohmann::json u_matrix_artifact(const UMatrix& u);
nlohmann::json starburst_artifact(const StarburstOverlay& s);
nlohmann::json heatmap_artifact(const FeatureGrid& g);
nlohmann::json label_map_artifact(const LabelGrid& g);
nlohmann::json local_explanation_artifact(const LocalExplanation& e,
                                          const std::vector<std::string>& feature_names);
nlohmann::json global_significance_artifact(
    const std::vector<std::pair<std::string, double>>& ranked);
nlohmann::json treemap_artifact(const TreemapLayout& t);

} // namespace xsom
