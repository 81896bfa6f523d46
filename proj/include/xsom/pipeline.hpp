#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "xsom/csv.hpp"
#include "xsom/types.hpp"

namespace xsom {

// Fitted encoding/normalization state. Categorical columns expand to one
// one-hot column per category seen in the fit rows; numeric columns are
// min-max scaled and clamped to [0,1]. Reusable on unseen data and
// serialized into model files.
struct Preprocessor {
    struct Column {
        std::string name;
        ColumnKind kind = ColumnKind::Numeric;
        double min = 0.0, max = 0.0;          // numeric
        std::vector<std::string> categories;  // categorical, sorted
    };
    std::vector<Column> columns;              // label column excluded
    std::map<std::string, int> label_mapping;
    // Names of the columns kept after feature selection, in output order.
    // Empty means "keep everything".
    std::vector<std::string> selected;

    static Preprocessor fit(const RawDataset& raw, const std::vector<std::size_t>& fit_rows);

    FeatureMatrix transform(const RawDataset& raw) const;
    LabelVector labels(const RawDataset& raw) const;
    std::vector<std::string> output_names() const; // post-selection
};

// One-hot encodes categoricals and min-max normalizes numerics, fitting the
// scaling on fit_rows only. Returns the transformed matrix for all rows plus
// the mapped labels.
std::pair<FeatureMatrix, LabelVector>
encode_and_normalize(const RawDataset& raw, const std::vector<std::size_t>& fit_rows);

// Normalized sample variance per feature: var_f / max_f var_f. Zero-variance
// features score 0; an all-constant matrix degenerates to all ones.
SignificanceVector feature_significance(const FeatureMatrix& m);

// Column subset by explicit name list, preserving the requested order.
FeatureMatrix select_features(const FeatureMatrix& m, const std::vector<std::string>& keep);

// Column subset of the top_k features ranked by feature_significance
// (descending, ties keep original column order).
FeatureMatrix select_top_k(const FeatureMatrix& m, std::size_t top_k);

struct SplitResult {
    FeatureMatrix train;
    LabelVector train_labels;
    FeatureMatrix test;
    LabelVector test_labels;
};

// Deterministic per-class split; per-class test counts are
// round(test_fraction * class size).
SplitResult stratified_split(const FeatureMatrix& m, const LabelVector& labels,
                             double test_fraction, std::uint64_t seed);

// Canonical feature-selection lists for the two public IDS datasets this
// tool is normally pointed at.
const std::vector<std::string>& nslkdd_selected_features();
const std::vector<std::string>& cicids2017_selected_features();

} // namespace xsom
