#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "xsom/types.hpp"

namespace xsom {

enum class NeuronLabel : int { Benign = 0, Malicious = 1, Unlabeled = 2 };

struct Coord {
    int row = 0;
    int col = 0;
    bool operator==(const Coord&) const = default;
};

inline std::int64_t coord_key(Coord c) {
    return (static_cast<std::int64_t>(c.row) << 32) ^ (static_cast<std::uint32_t>(c.col));
}

// Orthogonal lattice directions in the fixed N,E,S,W order used everywhere
// a direction tie has to break deterministically.
inline constexpr Coord kDirections[4] = {{-1, 0}, {0, 1}, {1, 0}, {0, -1}};

struct Neuron {
    int id = 0;
    Coord coord;
    std::vector<double> weights;
    std::size_t hit_count = 0;
    double cumulative_error = 0.0;
    NeuronLabel label = NeuronLabel::Unlabeled;
    std::optional<int> child_map_id;
};

// A single lattice of neurons, shared by the fixed SOM and the growing SOM.
// Neurons are stored in id order; ids are assigned on insertion and never
// reused. Coords are unique; connectivity is 4-neighborhood.
class MapModel {
public:
    MapModel() = default;
    MapModel(int map_id, std::size_t dim, std::uint64_t rng_seed)
        : map_id_(map_id), dim_(dim), rng_seed_(rng_seed) {}

    int map_id() const { return map_id_; }
    std::size_t dim() const { return dim_; }
    std::uint64_t rng_seed() const { return rng_seed_; }
    std::size_t size() const { return neurons_.size(); }

    const std::vector<Neuron>& neurons() const { return neurons_; }
    std::vector<Neuron>& neurons() { return neurons_; }
    const Neuron& neuron(int id) const { return neurons_.at(static_cast<std::size_t>(id)); }
    Neuron& neuron(int id) { return neurons_.at(static_cast<std::size_t>(id)); }

    // id of the neuron at c, or -1
    int at(Coord c) const {
        auto it = index_.find(coord_key(c));
        return it == index_.end() ? -1 : it->second;
    }
    bool occupied(Coord c) const { return at(c) != -1; }

    // Appends a neuron with the next sequential id.
    int add_neuron(Coord c, std::vector<double> weights);

    // ids of occupied orthogonal neighbors, in N,E,S,W order
    std::vector<int> neighbor_ids(int id) const;
    // count of free orthogonal slots around id
    int free_slots(int id) const;

    void set_map_id(int id) { map_id_ = id; }
    void rebuild_index();

private:
    int map_id_ = 0;
    std::size_t dim_ = 0;
    std::uint64_t rng_seed_ = 0;
    std::vector<Neuron> neurons_;
    std::unordered_map<std::int64_t, int> index_;
};

struct QualityReport {
    double quantization_error = 0.0;
    double topographic_error = 0.0;
    double embedding_accuracy = 0.0;
    double convergence_index = 0.0;
};

// Best matching unit: argmin Euclidean distance, ties to the smallest id.
// Returns (id, true Euclidean distance).
std::pair<int, double> bmu(const MapModel& map, std::span<const double> sample);

// Closest and second-closest neuron ids under the same tie rule.
std::pair<int, int> bmu_pair(const MapModel& map, std::span<const double> sample);

// Majority-vote labeling from the training data (ties go to malicious).
// Zero-hit neurons take the label of the nearest labeled neuron in weight
// space. Also populates hit_count.
MapModel assign_labels(MapModel map, const FeatureMatrix& train, const LabelVector& labels);

// Labeling core shared with the hierarchical trainer: applies majority
// labels from per-neuron class votes, fills zero-hit neurons from the
// nearest labeled neuron, populates hit_count.
void apply_vote_labels(MapModel& map, const std::vector<std::size_t>& benign_votes,
                       const std::vector<std::size_t>& malicious_votes);

// Label of the sample's BMU.
int predict_flat(const MapModel& map, std::span<const double> sample);

double quantization_error(const MapModel& map, const FeatureMatrix& data);

// Fraction of samples whose two best units are not orthogonal lattice
// neighbors.
double topographic_error(const MapModel& map, const FeatureMatrix& data);

// Fraction of features whose data and weight columns pass both a Welch mean
// test and an F variance test at alpha = 0.05.
double embedding_accuracy(const MapModel& map, const FeatureMatrix& data);

// 0.5 * embedding_accuracy + 0.5 * (1 - topographic_error)
double convergence_index(const MapModel& map, const FeatureMatrix& data);

QualityReport quality_report(const MapModel& map, const FeatureMatrix& data);

} // namespace xsom
