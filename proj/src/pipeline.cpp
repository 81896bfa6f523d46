#include "xsom/pipeline.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <set>
#include <unordered_set>

#include "xsom/rng.hpp"

namespace xsom {

void FeatureMatrix::validate() const {
    if (n_features == 0) throw DataError("feature matrix has no columns");
    if (values.size() != n_samples * n_features) {
        throw DataError("feature matrix storage size mismatch");
    }
    if (feature_names.size() != n_features || norm_params.size() != n_features) {
        throw DataError("feature matrix metadata length mismatch");
    }
    std::unordered_set<std::string> seen;
    for (const auto& n : feature_names) {
        if (!seen.insert(n).second) throw DataError("duplicate feature name '" + n + "'");
    }
    for (double v : values) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw DataError("feature matrix entry outside [0,1]");
        }
    }
}

namespace {

double parse_number(const std::string& s) {
    double value = 0.0;
    std::from_chars(s.data(), s.data() + s.size(), value);
    return value;
}

} // namespace

Preprocessor Preprocessor::fit(const RawDataset& raw, const std::vector<std::size_t>& fit_rows) {
    if (fit_rows.empty()) throw EmptyData("cannot fit preprocessing on zero rows");
    Preprocessor p;
    p.label_mapping = raw.label_mapping;
    for (std::size_t c = 0; c < raw.columns.size(); ++c) {
        if (raw.columns[c].kind == ColumnKind::Label) continue;
        Column col;
        col.name = raw.columns[c].name;
        col.kind = raw.columns[c].kind;
        if (col.kind == ColumnKind::Numeric) {
            double lo = parse_number(raw.rows[fit_rows[0]][c]);
            double hi = lo;
            for (std::size_t r : fit_rows) {
                const double v = parse_number(raw.rows[r][c]);
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
            col.min = lo;
            col.max = hi;
        } else {
            std::set<std::string> cats;
            for (std::size_t r : fit_rows) cats.insert(raw.rows[r][c]);
            col.categories.assign(cats.begin(), cats.end());
        }
        p.columns.push_back(std::move(col));
    }
    return p;
}

std::vector<std::string> Preprocessor::output_names() const {
    std::vector<std::string> names;
    for (const auto& col : columns) {
        if (col.kind == ColumnKind::Numeric) {
            names.push_back(col.name);
        } else {
            for (const auto& cat : col.categories) {
                names.push_back(col.name + "=" + cat);
            }
        }
    }
    if (selected.empty()) return names;
    return selected;
}

FeatureMatrix Preprocessor::transform(const RawDataset& raw) const {
    // map our column list onto the dataset's column order
    std::vector<int> src(columns.size(), -1);
    for (std::size_t i = 0; i < columns.size(); ++i) {
        for (std::size_t c = 0; c < raw.columns.size(); ++c) {
            if (raw.columns[c].name == columns[i].name &&
                raw.columns[c].kind == columns[i].kind) {
                src[i] = static_cast<int>(c);
            }
        }
        if (src[i] < 0) {
            throw DimensionMismatch("input data lacks column '" + columns[i].name + "'");
        }
    }

    std::vector<std::string> all_names;
    for (const auto& col : columns) {
        if (col.kind == ColumnKind::Numeric) {
            all_names.push_back(col.name);
        } else {
            for (const auto& cat : col.categories) all_names.push_back(col.name + "=" + cat);
        }
    }

    FeatureMatrix m;
    m.n_samples = raw.rows.size();
    m.n_features = all_names.size();
    m.feature_names = all_names;
    m.norm_params.reserve(m.n_features);
    for (const auto& col : columns) {
        if (col.kind == ColumnKind::Numeric) {
            m.norm_params.emplace_back(col.min, col.max);
        } else {
            for (std::size_t k = 0; k < col.categories.size(); ++k) {
                m.norm_params.emplace_back(0.0, 1.0);
            }
        }
    }
    m.values.assign(m.n_samples * m.n_features, 0.0);

    for (std::size_t r = 0; r < raw.rows.size(); ++r) {
        std::size_t f = 0;
        for (std::size_t i = 0; i < columns.size(); ++i) {
            const auto& col = columns[i];
            const std::string& cell = raw.rows[r][static_cast<std::size_t>(src[i])];
            if (col.kind == ColumnKind::Numeric) {
                double v;
                if (col.max > col.min) {
                    v = (parse_number(cell) - col.min) / (col.max - col.min);
                } else {
                    v = 0.0; // constant column
                }
                m.at(r, f) = std::clamp(v, 0.0, 1.0);
                ++f;
            } else {
                // unknown category leaves the whole block at zero
                for (std::size_t k = 0; k < col.categories.size(); ++k) {
                    if (col.categories[k] == cell) m.at(r, f + k) = 1.0;
                }
                f += col.categories.size();
            }
        }
    }

    if (!selected.empty()) return select_features(m, selected);
    return m;
}

LabelVector Preprocessor::labels(const RawDataset& raw) const {
    LabelVector out;
    out.reserve(raw.rows.size());
    for (const auto& row : raw.rows) {
        const std::string& s = row[raw.label_column];
        auto it = label_mapping.find(s);
        if (it == label_mapping.end()) {
            throw UnmappedLabel("label '" + s + "' has no mapping");
        }
        out.push_back(it->second);
    }
    return out;
}

std::pair<FeatureMatrix, LabelVector>
encode_and_normalize(const RawDataset& raw, const std::vector<std::size_t>& fit_rows) {
    Preprocessor p = Preprocessor::fit(raw, fit_rows);
    return {p.transform(raw), p.labels(raw)};
}

SignificanceVector feature_significance(const FeatureMatrix& m) {
    if (m.n_samples < 2) throw EmptyData("feature significance needs at least 2 samples");
    SignificanceVector var(m.n_features, 0.0);
    for (std::size_t f = 0; f < m.n_features; ++f) {
        double mean = 0.0;
        for (std::size_t r = 0; r < m.n_samples; ++r) mean += m.at(r, f);
        mean /= static_cast<double>(m.n_samples);
        double s = 0.0;
        for (std::size_t r = 0; r < m.n_samples; ++r) {
            const double d = m.at(r, f) - mean;
            s += d * d;
        }
        var[f] = s / static_cast<double>(m.n_samples - 1);
    }
    const double top = *std::max_element(var.begin(), var.end());
    if (top <= 0.0) {
        // nothing varies; every feature is equally (in)significant
        std::fill(var.begin(), var.end(), 1.0);
        return var;
    }
    for (double& v : var) v /= top;
    return var;
}

FeatureMatrix select_features(const FeatureMatrix& m, const std::vector<std::string>& keep) {
    std::vector<std::size_t> idx;
    idx.reserve(keep.size());
    for (const auto& name : keep) {
        auto it = std::find(m.feature_names.begin(), m.feature_names.end(), name);
        if (it == m.feature_names.end()) {
            throw UnknownFeatureName("no feature named '" + name + "'");
        }
        idx.push_back(static_cast<std::size_t>(it - m.feature_names.begin()));
    }
    FeatureMatrix out;
    out.n_samples = m.n_samples;
    out.n_features = idx.size();
    out.values.resize(out.n_samples * out.n_features);
    for (std::size_t f = 0; f < idx.size(); ++f) {
        out.feature_names.push_back(m.feature_names[idx[f]]);
        out.norm_params.push_back(m.norm_params[idx[f]]);
        for (std::size_t r = 0; r < m.n_samples; ++r) {
            out.at(r, f) = m.at(r, idx[f]);
        }
    }
    return out;
}

FeatureMatrix select_top_k(const FeatureMatrix& m, std::size_t top_k) {
    if (top_k == 0 || top_k > m.n_features) {
        throw InvalidParam("top_k must be in [1, D]");
    }
    const SignificanceVector sig = feature_significance(m);
    std::vector<std::size_t> order(m.n_features);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return sig[a] > sig[b]; });
    std::vector<std::string> keep;
    for (std::size_t i = 0; i < top_k; ++i) keep.push_back(m.feature_names[order[i]]);
    return select_features(m, keep);
}

SplitResult stratified_split(const FeatureMatrix& m, const LabelVector& labels,
                             double test_fraction, std::uint64_t seed) {
    if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
        throw InvalidParam("test_fraction must be in (0,1)");
    }
    if (labels.size() != m.n_samples) {
        throw LengthMismatch("labels length does not match sample count");
    }

    std::vector<std::size_t> by_class[2];
    for (std::size_t i = 0; i < labels.size(); ++i) {
        by_class[labels[i] == 1 ? 1 : 0].push_back(i);
    }

    Rng rng(seed);
    std::vector<std::size_t> test_idx, train_idx;
    for (auto& cls : by_class) {
        if (cls.empty()) continue;
        if (cls.size() == 1) {
            throw ClassWithSingleSample("a class with one sample cannot be split");
        }
        rng.shuffle(cls);
        const auto want = static_cast<std::size_t>(
            std::llround(test_fraction * static_cast<double>(cls.size())));
        for (std::size_t i = 0; i < cls.size(); ++i) {
            (i < want ? test_idx : train_idx).push_back(cls[i]);
        }
    }
    std::sort(test_idx.begin(), test_idx.end());
    std::sort(train_idx.begin(), train_idx.end());

    auto take = [&](const std::vector<std::size_t>& rows) {
        FeatureMatrix out;
        out.n_samples = rows.size();
        out.n_features = m.n_features;
        out.feature_names = m.feature_names;
        out.norm_params = m.norm_params;
        out.values.reserve(rows.size() * m.n_features);
        LabelVector lab;
        lab.reserve(rows.size());
        for (std::size_t r : rows) {
            auto row = m.row(r);
            out.values.insert(out.values.end(), row.begin(), row.end());
            lab.push_back(labels[r]);
        }
        return std::pair{std::move(out), std::move(lab)};
    };

    SplitResult res;
    std::tie(res.train, res.train_labels) = take(train_idx);
    std::tie(res.test, res.test_labels) = take(test_idx);
    return res;
}

const std::vector<std::string>& nslkdd_selected_features() {
    static const std::vector<std::string> names = {
        "duration",       "src_bytes",      "dst_bytes",         "count",
        "srv_count",      "dst_host_count", "dst_host_srv_count"};
    return names;
}

const std::vector<std::string>& cicids2017_selected_features() {
    static const std::vector<std::string> names = {
        "Flow Bytes/s",      "Flow Duration",     "Flow IAT Max",
        "Fwd IAT Total",     "Flow Packets/s",    "Destination Port",
        "Bwd IAT Total",     "Fwd Packets/s",     "Flow IAT Min",
        "Packet Length Variance", "Flow IAT Mean", "Fwd IAT Max",
        "Idle Max",          "Idle Mean",         "Idle Min",
        "Flow IAT Std",      "Bwd IAT Max"};
    return names;
}

} // namespace xsom
