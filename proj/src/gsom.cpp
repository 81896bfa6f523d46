#include "xsom/gsom.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "xsom/rng.hpp"

namespace xsom {

void GsomParams::validate() const {
    if (!(spread_factor > 0.0 && spread_factor < 1.0)) {
        throw InvalidParam("spread_factor must be in (0,1)");
    }
    if (!(learning_rate > 0.0 && learning_rate < 1.0)) {
        throw InvalidParam("learning_rate must be in (0,1)");
    }
    if (epochs < 1) throw InvalidParam("epochs must be >= 1");
    if (max_nodes < 4) throw InvalidParam("max_nodes must be >= 4");
}

double growth_threshold(std::size_t dim, double spread_factor) {
    if (dim < 1) throw InvalidParam("dimension must be >= 1");
    if (!(spread_factor > 0.0 && spread_factor < 1.0)) {
        throw InvalidParam("spread_factor must be in (0,1)");
    }
    return -static_cast<double>(dim) * std::log(spread_factor);
}

namespace {

double distance(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

void pull_towards(std::vector<double>& w, std::span<const double> x, double rate) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        w[i] -= rate * (w[i] - x[i]);
    }
}

// Growth direction: opposite the occupied neighbor closest in weight space,
// falling back to the first free slot in N,E,S,W order on ties or when the
// opposite slot is taken.
Coord pick_growth_slot(const MapModel& map, const Neuron& parent) {
    int best_dir = -1;
    double best_d = 0.0;
    bool tie = false;
    for (int d = 0; d < 4; ++d) {
        const Coord nc{parent.coord.row + kDirections[d].row,
                       parent.coord.col + kDirections[d].col};
        const int nid = map.at(nc);
        if (nid == -1) continue;
        const double dist = distance(map.neuron(nid).weights, parent.weights);
        if (best_dir == -1 || dist < best_d) {
            best_d = dist;
            best_dir = d;
            tie = false;
        } else if (dist == best_d) {
            tie = true;
        }
    }
    if (best_dir != -1 && !tie) {
        const Coord opp{parent.coord.row - kDirections[best_dir].row,
                        parent.coord.col - kDirections[best_dir].col};
        if (!map.occupied(opp)) return opp;
    }
    for (const Coord d : kDirections) {
        const Coord c{parent.coord.row + d.row, parent.coord.col + d.col};
        if (!map.occupied(c)) return c;
    }
    return parent.coord; // caller checks for no free slot
}

std::vector<double> newborn_weights(const MapModel& map, const Neuron& parent,
                                    Coord slot, Rng& rng) {
    const Coord opposite{2 * parent.coord.row - slot.row, 2 * parent.coord.col - slot.col};
    std::vector<double> w(map.dim());
    const int opp_id = map.at(opposite);
    if (opp_id != -1) {
        const auto& o = map.neuron(opp_id).weights;
        for (std::size_t i = 0; i < w.size(); ++i) {
            w[i] = std::clamp(2.0 * parent.weights[i] - o[i], 0.0, 1.0);
        }
    } else {
        for (std::size_t i = 0; i < w.size(); ++i) {
            w[i] = std::clamp(parent.weights[i] + rng.uniform(-0.01, 0.01), 0.0, 1.0);
        }
    }
    return w;
}

} // namespace

GsomResult train_gsom(const FeatureMatrix& data, const GsomParams& p) {
    p.validate();
    if (data.n_samples == 0) throw EmptyData("train_gsom on empty data");
    const auto t0 = std::chrono::steady_clock::now();

    Rng rng(p.seed);
    MapModel map(0, data.n_features, p.seed);
    for (const Coord c : {Coord{0, 0}, Coord{0, 1}, Coord{1, 0}, Coord{1, 1}}) {
        std::vector<double> w(data.n_features);
        for (double& x : w) x = rng.next_double();
        map.add_neuron(c, std::move(w));
    }

    const double gt = growth_threshold(data.n_features, p.spread_factor);
    GsomResult res;
    bool can_grow = true;

    std::vector<std::size_t> order(data.n_samples);
    std::iota(order.begin(), order.end(), 0);

    for (int epoch = 0; epoch < p.epochs; ++epoch) {
        for (auto& n : map.neurons()) n.cumulative_error = 0.0;

        rng.shuffle(order);
        for (const std::size_t s : order) {
            const auto sample = data.row(s);
            const auto [best, dist] = bmu(map, sample);
            Neuron& b = map.neuron(best);
            pull_towards(b.weights, sample, p.learning_rate);
            b.cumulative_error += dist;
            // neighbors follow at half rate so the BMU stays dominant
            for (const int nid : map.neighbor_ids(best)) {
                pull_towards(map.neuron(nid).weights, sample, p.learning_rate / 2.0);
            }
        }

        // saturated interior nodes push their excess error outward
        {
            std::vector<std::pair<int, double>> spill;
            for (const auto& n : map.neurons()) {
                if (map.free_slots(n.id) == 0 && n.cumulative_error > gt) {
                    spill.emplace_back(n.id, n.cumulative_error);
                }
            }
            for (const auto& [id, ce] : spill) {
                map.neuron(id).cumulative_error = 0.0;
                for (const int nid : map.neighbor_ids(id)) {
                    map.neuron(nid).cumulative_error += ce / 4.0;
                }
            }
        }

        if (can_grow) {
            std::vector<int> growers;
            for (const auto& n : map.neurons()) {
                if (map.free_slots(n.id) > 0 && n.cumulative_error > gt) {
                    growers.push_back(n.id);
                }
            }
            for (const int id : growers) {
                if (map.size() >= p.max_nodes) {
                    res.node_budget_hit = true;
                    can_grow = false;
                    break;
                }
                // an earlier growth this epoch may have taken the last slot
                if (map.free_slots(id) == 0) continue;
                const Neuron& parent = map.neuron(id);
                const Coord slot = pick_growth_slot(map, parent);
                auto w = newborn_weights(map, parent, slot, rng);
                map.add_neuron(slot, std::move(w));
            }
        }
        res.nodes_per_epoch.push_back(map.size());
    }

    res.map = std::move(map);
    res.train_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

} // namespace xsom
