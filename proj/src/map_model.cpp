#include "xsom/map_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "xsom/stats.hpp"

namespace xsom {

namespace {

double sq_distance(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

} // namespace

int MapModel::add_neuron(Coord c, std::vector<double> weights) {
    if (occupied(c)) {
        throw DataError("coord already occupied");
    }
    if (weights.size() != dim_) {
        throw DimensionMismatch("neuron weights length != map dimension");
    }
    Neuron n;
    n.id = static_cast<int>(neurons_.size());
    n.coord = c;
    n.weights = std::move(weights);
    index_.emplace(coord_key(c), n.id);
    neurons_.push_back(std::move(n));
    return neurons_.back().id;
}

std::vector<int> MapModel::neighbor_ids(int id) const {
    const Coord c = neurons_.at(static_cast<std::size_t>(id)).coord;
    std::vector<int> out;
    for (const Coord d : kDirections) {
        const int nid = at({c.row + d.row, c.col + d.col});
        if (nid != -1) out.push_back(nid);
    }
    return out;
}

int MapModel::free_slots(int id) const {
    const Coord c = neurons_.at(static_cast<std::size_t>(id)).coord;
    int free = 0;
    for (const Coord d : kDirections) {
        if (!occupied({c.row + d.row, c.col + d.col})) ++free;
    }
    return free;
}

void MapModel::rebuild_index() {
    index_.clear();
    for (const auto& n : neurons_) {
        index_.emplace(coord_key(n.coord), n.id);
    }
}

std::pair<int, double> bmu(const MapModel& map, std::span<const double> sample) {
    if (map.size() == 0) throw EmptyData("bmu on empty map");
    if (sample.size() != map.dim()) {
        throw DimensionMismatch("sample dimension != map dimension");
    }
    int best = -1;
    double best_d = std::numeric_limits<double>::infinity();
    for (const auto& n : map.neurons()) {
        const double d = sq_distance(n.weights, sample);
        if (d < best_d) {
            best_d = d;
            best = n.id;
        }
    }
    return {best, std::sqrt(best_d)};
}

std::pair<int, int> bmu_pair(const MapModel& map, std::span<const double> sample) {
    if (map.size() < 2) throw MapTooSmall("bmu_pair needs at least 2 neurons");
    if (sample.size() != map.dim()) {
        throw DimensionMismatch("sample dimension != map dimension");
    }
    int first = -1, second = -1;
    double d1 = std::numeric_limits<double>::infinity();
    double d2 = std::numeric_limits<double>::infinity();
    for (const auto& n : map.neurons()) {
        const double d = sq_distance(n.weights, sample);
        if (d < d1) {
            d2 = d1;
            second = first;
            d1 = d;
            first = n.id;
        } else if (d < d2) {
            d2 = d;
            second = n.id;
        }
    }
    return {first, second};
}

void apply_vote_labels(MapModel& map, const std::vector<std::size_t>& benign_votes,
                       const std::vector<std::size_t>& malicious_votes) {
    bool any_labeled = false;
    for (auto& n : map.neurons()) {
        const auto i = static_cast<std::size_t>(n.id);
        n.hit_count = benign_votes[i] + malicious_votes[i];
        if (n.hit_count == 0) {
            n.label = NeuronLabel::Unlabeled;
            continue;
        }
        // ties go to malicious: a false alarm beats a miss
        n.label = malicious_votes[i] >= benign_votes[i] ? NeuronLabel::Malicious
                                                        : NeuronLabel::Benign;
        any_labeled = true;
    }
    if (!any_labeled) {
        throw NoLabeledNeuron("no training sample mapped to any neuron");
    }

    // zero-hit neurons inherit the nearest labeled neuron's label (weight space)
    for (auto& n : map.neurons()) {
        if (n.label != NeuronLabel::Unlabeled) continue;
        int best = -1;
        double best_d = std::numeric_limits<double>::infinity();
        for (const auto& other : map.neurons()) {
            if (other.hit_count == 0) continue;
            const double d = sq_distance(other.weights, n.weights);
            if (d < best_d) {
                best_d = d;
                best = other.id;
            }
        }
        n.label = map.neuron(best).label;
    }
}

MapModel assign_labels(MapModel map, const FeatureMatrix& train, const LabelVector& labels) {
    if (train.n_samples != labels.size()) {
        throw LengthMismatch("training labels length mismatch");
    }
    std::vector<std::size_t> votes0(map.size(), 0), votes1(map.size(), 0);
    for (std::size_t i = 0; i < train.n_samples; ++i) {
        const auto [id, dist] = bmu(map, train.row(i));
        (void)dist;
        if (labels[i] == 1) {
            ++votes1[static_cast<std::size_t>(id)];
        } else {
            ++votes0[static_cast<std::size_t>(id)];
        }
    }
    apply_vote_labels(map, votes0, votes1);
    return map;
}

int predict_flat(const MapModel& map, std::span<const double> sample) {
    const auto [id, dist] = bmu(map, sample);
    (void)dist;
    const NeuronLabel l = map.neuron(id).label;
    if (l == NeuronLabel::Unlabeled) {
        throw NoLabeledNeuron("predict_flat on an unlabeled map");
    }
    return static_cast<int>(l);
}

double quantization_error(const MapModel& map, const FeatureMatrix& data) {
    if (data.n_samples == 0) throw EmptyData("quantization_error on empty data");
    double total = 0.0;
    for (std::size_t i = 0; i < data.n_samples; ++i) {
        total += bmu(map, data.row(i)).second;
    }
    return total / static_cast<double>(data.n_samples);
}

double topographic_error(const MapModel& map, const FeatureMatrix& data) {
    if (data.n_samples == 0) throw EmptyData("topographic_error on empty data");
    std::size_t errors = 0;
    for (std::size_t i = 0; i < data.n_samples; ++i) {
        const auto [a, b] = bmu_pair(map, data.row(i));
        const Coord ca = map.neuron(a).coord;
        const Coord cb = map.neuron(b).coord;
        const int dr = std::abs(ca.row - cb.row);
        const int dc = std::abs(ca.col - cb.col);
        if (dr + dc != 1) ++errors;
    }
    return static_cast<double>(errors) / static_cast<double>(data.n_samples);
}

double embedding_accuracy(const MapModel& map, const FeatureMatrix& data) {
    if (data.n_samples == 0) throw EmptyData("embedding_accuracy on empty data");
    if (data.n_features != map.dim()) {
        throw DimensionMismatch("data dimension != map dimension");
    }
    const std::size_t n1 = data.n_samples;
    const std::size_t n2 = map.size();
    std::size_t embedded = 0;
    std::vector<double> dcol(n1), wcol(n2);
    for (std::size_t f = 0; f < data.n_features; ++f) {
        for (std::size_t i = 0; i < n1; ++i) dcol[i] = data.at(i, f);
        for (std::size_t j = 0; j < n2; ++j) wcol[j] = map.neurons()[j].weights[f];
        const double m1 = stats::mean(dcol), m2 = stats::mean(wcol);
        const double v1 = stats::sample_variance(dcol), v2 = stats::sample_variance(wcol);
        const double p_mean = stats::welch_p_value(m1, v1, n1, m2, v2, n2);
        const double p_var = stats::f_test_p_value(v1, n1, v2, n2);
        if (p_mean >= 0.05 && p_var >= 0.05) ++embedded;
    }
    return static_cast<double>(embedded) / static_cast<double>(data.n_features);
}

double convergence_index(const MapModel& map, const FeatureMatrix& data) {
    return 0.5 * embedding_accuracy(map, data) + 0.5 * (1.0 - topographic_error(map, data));
}

QualityReport quality_report(const MapModel& map, const FeatureMatrix& data) {
    QualityReport q;
    q.quantization_error = quantization_error(map, data);
    q.topographic_error = map.size() >= 2 ? topographic_error(map, data) : 0.0;
    q.embedding_accuracy = embedding_accuracy(map, data);
    q.convergence_index = 0.5 * q.embedding_accuracy + 0.5 * (1.0 - q.topographic_error);
    return q;
}

} // namespace xsom
