#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>

#include "xsom/types.hpp"

namespace xsom {

struct ConfusionMatrix {
    std::size_t tp = 0, fp = 0, tn = 0, fn = 0;
    std::size_t total() const { return tp + fp + tn + fn; }
};

// Undefined ratios (zero denominator) are reported as 0 with the matching
// flag set, so downstream CSV/JSON stays arithmetic-safe.
struct EvalReport {
    double accuracy = 0.0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    double fpr = 0.0;
    double fnr = 0.0;
    bool precision_undefined = false;
    bool recall_undefined = false;
    bool f1_undefined = false;
    bool fpr_undefined = false;
    bool fnr_undefined = false;
    std::size_t network_size = 1;
    double train_time_s = 0.0;
    double predict_time_ms = 0.0; // mean per sample
};

struct TimingStats {
    double mean_ms = 0.0;
    double median_ms = 0.0;
    std::size_t samples = 0;
    std::size_t repetitions = 0;
};

// Positive class is malicious (1).
ConfusionMatrix confusion(const LabelVector& truth, const LabelVector& predicted);

EvalReport metrics(const ConfusionMatrix& c);

using Predictor = std::function<int(std::span<const double>)>;

// Per-sample wall-clock prediction timing over `repetitions` passes of the
// batch, monotonic clock.
TimingStats benchmark(const Predictor& predict, const FeatureMatrix& data,
                      std::size_t repetitions);

// Header and row in the standard report column order.
std::string eval_csv_header();
std::string eval_csv_row(const EvalReport& r);

} // namespace xsom
