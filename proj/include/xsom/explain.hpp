#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "xsom/ghsom.hpp"
#include "xsom/map_model.hpp"
#include "xsom/types.hpp"

namespace xsom {

// Per-neuron mean Euclidean distance to occupied orthogonal neighbors.
// An isolated neuron has height 0.
struct UMatrix {
    int map_id = 0;
    std::vector<int> neuron_ids;
    std::vector<Coord> coords;
    std::vector<double> heights;
};

// Steepest-descent basin assignment over U-matrix heights. flows_to[i] is
// the index (into neuron_ids) of the neighbor each neuron drains to, or
// itself at a local minimum; cluster[i] is the terminal minimum's neuron id.
struct StarburstOverlay {
    int map_id = 0;
    std::vector<int> neuron_ids;
    std::vector<Coord> coords;
    std::vector<double> heights;
    std::vector<int> flows_to;
    std::vector<int> cluster;
};

struct FeatureGrid {
    int map_id = 0;
    std::string feature;
    std::size_t feature_index = 0;
    std::vector<int> neuron_ids;
    std::vector<Coord> coords;
    std::vector<double> values;
};

struct LabelGrid {
    int map_id = 0;
    std::vector<int> neuron_ids;
    std::vector<Coord> coords;
    std::vector<NeuronLabel> labels;
};

// Inverted min-maxed per-feature distances from the BMU: the closest
// feature scores 1, the farthest 0.
struct LocalExplanation {
    int map_id = 0;
    int bmu_id = 0;
    int predicted = 0;
    std::vector<DescentStep> path; // single step for flat models
    std::vector<double> distances;
    std::vector<double> significance;
};

struct TreemapBox {
    bool is_map = false;
    int map_id = 0;
    int neuron_id = -1;
    int depth = 0;
    double x = 0, y = 0, w = 0, h = 0;
    // benign / malicious / branch; empty for map boxes
    std::string cls;
    std::size_t hits = 0;
};

struct TreemapLayout {
    double width = 0, height = 0;
    std::vector<TreemapBox> boxes;
};

UMatrix u_matrix(const MapModel& map);

StarburstOverlay starburst(const UMatrix& u);

FeatureGrid feature_heatmap(const MapModel& map, std::size_t feature_index,
                            const std::string& feature_name);

LabelGrid label_map(const MapModel& map);

LocalExplanation local_explanation(const MapModel& map, std::span<const double> sample);
LocalExplanation local_explanation(const GhsomTree& tree, std::span<const double> sample);

// (name, score) pairs sorted by score descending, ties keeping input order.
std::vector<std::pair<std::string, double>>
global_explanation(const SignificanceVector& sig, const std::vector<std::string>& names);

// Squarified nested layout: each map box is subdivided among its neurons
// with area proportional to hit_count (floored at 0.2% of the parent area);
// branch neurons contain their child map's box.
TreemapLayout treemap_layout(const GhsomTree& tree, double width = 1000.0,
                             double height = 600.0);

} // namespace xsom
