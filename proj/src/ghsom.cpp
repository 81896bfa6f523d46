#include "xsom/ghsom.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "xsom/rng.hpp"

namespace xsom {

void GhsomParams::validate() const {
    gsom.validate();
    if (min_child_samples < 2) throw InvalidParam("min_child_samples must be >= 2");
    if (max_depth < 1) throw InvalidParam("max_depth must be >= 1");
}

double vertical_threshold(double learning_rate, double sum_error) {
    return learning_rate * sum_error;
}

int GhsomTree::depth_of(int map_id) const {
    int depth = 0;
    int cur = map_id;
    while (cur != root_id) {
        cur = parent.at(cur).first;
        ++depth;
    }
    return depth;
}

std::vector<int> GhsomTree::subtree(int map_id) const {
    std::vector<int> out{map_id};
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (const auto& [child, link] : parent) {
            if (link.first == out[i]) out.push_back(child);
        }
    }
    return out;
}

void GhsomTree::validate() const {
    if (maps.find(root_id) == maps.end()) throw DataError("root map missing");
    if (parent.size() != maps.size() - 1) {
        throw DataError("parent relation size != maps - 1");
    }
    for (const auto& [child, link] : parent) {
        auto pm = maps.find(link.first);
        if (maps.find(child) == maps.end() || pm == maps.end()) {
            throw DataError("parent relation references a missing map");
        }
        const Neuron& pn = pm->second.neuron(link.second);
        if (!pn.child_map_id || *pn.child_map_id != child) {
            throw DataError("child link and parent relation disagree");
        }
        // no cycles: every chain must reach the root
        int cur = child;
        std::size_t steps = 0;
        while (cur != root_id) {
            auto it = parent.find(cur);
            if (it == parent.end() || ++steps > maps.size()) {
                throw DataError("parent chain does not reach the root");
            }
            cur = it->second.first;
        }
    }
    for (const auto& [id, map] : maps) {
        for (const auto& n : map.neurons()) {
            if (n.child_map_id) {
                auto it = parent.find(*n.child_map_id);
                if (it == parent.end() || it->second.first != id ||
                    it->second.second != n.id) {
                    throw DataError("neuron child link without matching parent entry");
                }
            }
        }
    }
}

namespace {

FeatureMatrix take_rows(const FeatureMatrix& m, const std::vector<std::size_t>& rows) {
    FeatureMatrix out;
    out.n_samples = rows.size();
    out.n_features = m.n_features;
    out.feature_names = m.feature_names;
    out.norm_params = m.norm_params;
    out.values.reserve(rows.size() * m.n_features);
    for (std::size_t r : rows) {
        auto row = m.row(r);
        out.values.insert(out.values.end(), row.begin(), row.end());
    }
    return out;
}

struct Builder {
    const FeatureMatrix& data;
    const LabelVector& labels;
    const GhsomParams& params;
    GhsomTree tree;
    bool budget_hit = false;
    int next_id = 0;

    int build(const std::vector<std::size_t>& rows, std::uint64_t seed, int depth) {
        const int map_id = next_id++;
        FeatureMatrix local = take_rows(data, rows);

        GsomParams gp = params.gsom;
        gp.seed = seed;
        GsomResult trained = train_gsom(local, gp);
        budget_hit = budget_hit || trained.node_budget_hit;
        MapModel map = std::move(trained.map);
        map.set_map_id(map_id);

        // Final horizontal pass against the settled weights: routes every
        // local sample, measures per-neuron error, and supplies the votes
        // for labeling.
        std::vector<std::vector<std::size_t>> buckets(map.size());
        std::vector<std::size_t> votes0(map.size(), 0), votes1(map.size(), 0);
        for (auto& n : map.neurons()) n.cumulative_error = 0.0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto [id, dist] = bmu(map, local.row(i));
            const auto idx = static_cast<std::size_t>(id);
            buckets[idx].push_back(rows[i]);
            map.neuron(id).cumulative_error += dist;
            if (labels[rows[i]] == 1) {
                ++votes1[idx];
            } else {
                ++votes0[idx];
            }
        }
        apply_vote_labels(map, votes0, votes1);

        double sum_error = 0.0;
        for (const auto& n : map.neurons()) sum_error += n.cumulative_error;
        const double vt = vertical_threshold(params.gsom.learning_rate, sum_error);
        // A child has to out-earn both the vertical threshold and the
        // horizontal growth threshold; the latter keeps numerically tiny
        // residual errors from spawning maps under already-converged nodes.
        const double floor = growth_threshold(data.n_features, params.gsom.spread_factor);

        struct Expansion {
            int neuron_id;
            std::vector<std::size_t> rows;
        };
        std::vector<Expansion> expansions;
        if (depth < params.max_depth) {
            for (const auto& n : map.neurons()) {
                const auto idx = static_cast<std::size_t>(n.id);
                if (n.cumulative_error > vt && n.cumulative_error > floor &&
                    buckets[idx].size() >= params.min_child_samples) {
                    expansions.push_back({n.id, buckets[idx]});
                }
            }
        }

        tree.maps.emplace(map_id, std::move(map));
        for (const auto& e : expansions) {
            const int child = build(e.rows, combine_seed(seed, static_cast<std::uint64_t>(e.neuron_id)),
                                    depth + 1);
            tree.maps.at(map_id).neuron(e.neuron_id).child_map_id = child;
            tree.parent.emplace(child, std::pair{map_id, e.neuron_id});
        }
        return map_id;
    }
};

} // namespace

GhsomResult train_ghsom(const FeatureMatrix& data, const LabelVector& labels,
                        const GhsomParams& p) {
    p.validate();
    if (data.n_samples == 0) throw EmptyData("train_ghsom on empty data");
    if (data.n_samples != labels.size()) {
        throw LengthMismatch("labels length does not match sample count");
    }
    const auto t0 = std::chrono::steady_clock::now();

    std::vector<std::size_t> all(data.n_samples);
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;

    Builder b{data, labels, p, {}, false, 0};
    b.tree.root_id = b.build(all, p.gsom.seed, 0);

    GhsomResult res;
    res.tree = std::move(b.tree);
    res.node_budget_hit = b.budget_hit;
    res.train_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

GhsomPrediction predict_ghsom(const GhsomTree& tree, std::span<const double> sample) {
    GhsomPrediction out;
    int map_id = tree.root_id;
    for (std::size_t guard = 0; guard <= tree.maps.size(); ++guard) {
        const MapModel& map = tree.maps.at(map_id);
        const int id = bmu(map, sample).first;
        out.path.push_back({map_id, id});
        const Neuron& n = map.neuron(id);
        if (n.child_map_id) {
            map_id = *n.child_map_id;
            continue;
        }
        NeuronLabel label = n.label;
        if (label == NeuronLabel::Unlabeled) {
            // nearest labeled neuron in this map, then the parent neuron
            double best_d = std::numeric_limits<double>::infinity();
            for (const auto& other : map.neurons()) {
                if (other.label == NeuronLabel::Unlabeled) continue;
                double s = 0.0;
                for (std::size_t f = 0; f < other.weights.size(); ++f) {
                    const double d = other.weights[f] - n.weights[f];
                    s += d * d;
                }
                if (s < best_d) {
                    best_d = s;
                    label = other.label;
                }
            }
            int cur = map_id;
            while (label == NeuronLabel::Unlabeled && cur != tree.root_id) {
                const auto& [pm, pn] = tree.parent.at(cur);
                label = tree.maps.at(pm).neuron(pn).label;
                cur = pm;
            }
            if (label == NeuronLabel::Unlabeled) {
                throw NoLabeledNeuron("no labeled neuron on the descent path");
            }
        }
        out.label = static_cast<int>(label);
        return out;
    }
    throw DataError("descent exceeded tree size; child links form a cycle");
}

std::size_t network_size(const GhsomTree& tree) {
    return tree.maps.size();
}

std::map<int, std::vector<std::size_t>> route_samples(const GhsomTree& tree,
                                                      const FeatureMatrix& data) {
    std::map<int, std::vector<std::size_t>> routed;
    for (const auto& [id, map] : tree.maps) routed[id] = {};
    for (std::size_t i = 0; i < data.n_samples; ++i) {
        const GhsomPrediction pred = predict_ghsom(tree, data.row(i));
        for (const DescentStep& step : pred.path) {
            routed[step.map_id].push_back(i);
        }
    }
    return routed;
}

} // namespace xsom
