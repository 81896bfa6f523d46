#pragma once

#include <cstdint>

#include "xsom/map_model.hpp"
#include "xsom/types.hpp"

namespace xsom {

struct SomParams {
    int n = 18;               // rows
    int m = 18;               // cols
    double learning_rate = 0.3;
    int epochs = 1000;
    std::uint64_t seed = 0;

    void validate() const;
};

struct SomResult {
    MapModel map;
    double train_time_s = 0.0;
};

// Neighborhood radius at iteration t, decaying linearly from max(n,m)/2
// down to 1 over the run.
double som_radius(int t, int epochs, int n, int m);

// Learning rate for a neuron at lattice (Chebyshev) distance d from the
// BMU at iteration t: LR * (1 - t/T) * exp(-d^2 / (2 r(t)^2)).
double som_learning_rate(int t, int epochs, double lr, double lattice_dist, double radius);

// Fixed-grid SOM: n*m neurons on {0..n-1}x{0..m-1}, one uniformly drawn
// sample per iteration, BMU and in-radius neighbors pulled toward it.
SomResult train_som(const FeatureMatrix& data, const SomParams& p);

} // namespace xsom
