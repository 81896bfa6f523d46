#pragma once

#include <cstdint>
#include <vector>

#include "xsom/map_model.hpp"
#include "xsom/types.hpp"

namespace xsom {

struct GsomParams {
    double spread_factor = 0.9;
    double learning_rate = 0.006;
    int epochs = 100;
    std::uint64_t seed = 0;
    std::size_t max_nodes = 10000;

    void validate() const;
};

struct GsomResult {
    MapModel map;
    bool node_budget_hit = false;
    std::vector<std::size_t> nodes_per_epoch; // size after each epoch
    double train_time_s = 0.0;
};

// GT = -D * ln(SF)
double growth_threshold(std::size_t dim, double spread_factor);

// Growing SOM. Starts from a 2x2 block, presents every sample once per
// epoch in seeded shuffled order, updates BMU at full LR and orthogonal
// neighbors at LR/2, accumulates BMU error, redistributes the error of
// saturated interior nodes, and grows one node next to each boundary node
// whose cumulative error exceeds the growth threshold.
GsomResult train_gsom(const FeatureMatrix& data, const GsomParams& p);

} // namespace xsom
