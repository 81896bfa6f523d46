#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "xsom/gsom.hpp"
#include "xsom/map_model.hpp"
#include "xsom/types.hpp"

namespace xsom {

struct GhsomParams {
    GsomParams gsom;
    std::size_t min_child_samples = 8;
    int max_depth = 10;

    void validate() const;
};

// Hierarchy of growing SOMs. Each neuron may own one child map trained on
// the samples that mapped to it.
struct GhsomTree {
    int root_id = 0;
    std::map<int, MapModel> maps;
    // child map id -> (parent map id, parent neuron id)
    std::map<int, std::pair<int, int>> parent;

    std::size_t size() const { return maps.size(); }
    int depth_of(int map_id) const; // root = 0
    // map ids in the subtree rooted at map_id, including itself
    std::vector<int> subtree(int map_id) const;
    void validate() const;
};

struct GhsomResult {
    GhsomTree tree;
    bool node_budget_hit = false;
    double train_time_s = 0.0;
};

// VT = LR * SE
double vertical_threshold(double learning_rate, double sum_error);

GhsomResult train_ghsom(const FeatureMatrix& data, const LabelVector& labels,
                        const GhsomParams& p);

struct DescentStep {
    int map_id = 0;
    int neuron_id = 0;
};

struct GhsomPrediction {
    int label = 0;
    std::vector<DescentStep> path; // root first, terminal neuron last
};

// Descend from the root following BMU child links until a leaf neuron.
GhsomPrediction predict_ghsom(const GhsomTree& tree, std::span<const double> sample);

// Number of maps in the hierarchy (1 for flat models by convention).
std::size_t network_size(const GhsomTree& tree);

// For every map, the indices of the samples whose descent path reaches it
// (the root receives every index). Matches the routing used in training.
std::map<int, std::vector<std::size_t>> route_samples(const GhsomTree& tree,
                                                      const FeatureMatrix& data);

} // namespace xsom
