#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "xsom/errors.hpp"

namespace xsom {

// Dense row-major matrix of normalized samples. All entries live in [0,1];
// norm_params remembers the (min,max) fitted on the training split so the
// same scaling can be replayed on unseen data.
struct FeatureMatrix {
    std::size_t n_samples = 0;
    std::size_t n_features = 0;
    std::vector<double> values; // n_samples * n_features, row-major
    std::vector<std::string> feature_names;
    std::vector<std::pair<double, double>> norm_params; // per feature (min, max)

    std::span<const double> row(std::size_t i) const {
        return {values.data() + i * n_features, n_features};
    }
    double at(std::size_t i, std::size_t f) const {
        return values[i * n_features + f];
    }
    double& at(std::size_t i, std::size_t f) {
        return values[i * n_features + f];
    }

    void validate() const;
};

// 0 = benign, 1 = malicious.
using LabelVector = std::vector<int>;

// Per-feature score in [0,1], rescaled so the maximum is 1.
using SignificanceVector = std::vector<double>;

} // namespace xsom
