#include "xsom/evaluator.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>

namespace xsom {

ConfusionMatrix confusion(const LabelVector& truth, const LabelVector& predicted) {
    if (truth.size() != predicted.size()) {
        throw LengthMismatch("truth and prediction lengths differ");
    }
    ConfusionMatrix c;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        const bool pos = predicted[i] == 1;
        const bool real = truth[i] == 1;
        if (pos && real) {
            ++c.tp;
        } else if (pos && !real) {
            ++c.fp;
        } else if (!pos && real) {
            ++c.fn;
        } else {
            ++c.tn;
        }
    }
    return c;
}

namespace {

double ratio(std::size_t num, std::size_t den, bool& undefined) {
    if (den == 0) {
        undefined = true;
        return 0.0;
    }
    return static_cast<double>(num) / static_cast<double>(den);
}

} // namespace

EvalReport metrics(const ConfusionMatrix& c) {
    EvalReport r;
    bool acc_undef = false;
    r.accuracy = ratio(c.tp + c.tn, c.total(), acc_undef);
    r.precision = ratio(c.tp, c.tp + c.fp, r.precision_undefined);
    r.recall = ratio(c.tp, c.tp + c.fn, r.recall_undefined);
    r.fpr = ratio(c.fp, c.fp + c.tn, r.fpr_undefined);
    r.fnr = ratio(c.fn, c.fn + c.tp, r.fnr_undefined);
    if (r.precision + r.recall > 0.0) {
        r.f1 = 2.0 * r.precision * r.recall / (r.precision + r.recall);
    } else {
        r.f1 = 0.0;
        r.f1_undefined = true;
    }
    return r;
}

TimingStats benchmark(const Predictor& predict, const FeatureMatrix& data,
                      std::size_t repetitions) {
    TimingStats stats;
    stats.samples = data.n_samples;
    stats.repetitions = repetitions;
    if (data.n_samples == 0 || repetitions == 0) return stats;

    std::vector<double> times_ms;
    times_ms.reserve(data.n_samples * repetitions);
    for (std::size_t rep = 0; rep < repetitions; ++rep) {
        for (std::size_t i = 0; i < data.n_samples; ++i) {
            const auto t0 = std::chrono::steady_clock::now();
            volatile int sink = predict(data.row(i));
            (void)sink;
            const auto t1 = std::chrono::steady_clock::now();
            times_ms.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
        }
    }
    double total = 0.0;
    for (const double t : times_ms) total += t;
    stats.mean_ms = total / static_cast<double>(times_ms.size());
    std::sort(times_ms.begin(), times_ms.end());
    const std::size_t n = times_ms.size();
    stats.median_ms = n % 2 == 1 ? times_ms[n / 2]
                                 : 0.5 * (times_ms[n / 2 - 1] + times_ms[n / 2]);
    return stats;
}

std::string eval_csv_header() {
    return "accuracy,precision,recall,f1,fpr,fnr,network_size,train_time_s,predict_time_ms";
}

std::string eval_csv_row(const EvalReport& r) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%zu,%.3f,%.6f",
                  r.accuracy, r.precision, r.recall, r.f1, r.fpr, r.fnr,
                  r.network_size, r.train_time_s, r.predict_time_ms);
    return buf;
}

} // namespace xsom
