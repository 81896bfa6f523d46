#include "xsom/pruner.hpp"

#include <algorithm>
#include <cmath>

namespace xsom {

void PruneParams::validate() const {
    if (!(delta > 0.0 && delta < 1.0)) throw InvalidParam("delta must be in (0,1)");
}

double complexity_penalty(std::size_t depth, std::size_t subtree_maps,
                          std::size_t total_maps, std::size_t total_samples,
                          double delta, std::size_t local_samples) {
    if (depth < 1 || subtree_maps < 1 || total_maps < 1 || total_samples < 1) {
        throw InvalidParam("complexity penalty counts must be >= 1");
    }
    if (!(delta > 0.0 && delta < 1.0)) throw InvalidParam("delta must be in (0,1)");
    if (local_samples < 1) throw ZeroLocalSamples("no local samples mapped to subtree");
    const double num =
        static_cast<double>(depth + subtree_maps) * std::log(static_cast<double>(total_maps)) +
        std::log(static_cast<double>(total_samples) / delta);
    return std::sqrt(num / static_cast<double>(local_samples));
}

PruneOutcome prune_decision(double subtree_error, double alpha, double best_leaf_error) {
    return subtree_error + alpha >= best_leaf_error ? PruneOutcome::Remove
                                                    : PruneOutcome::Keep;
}

namespace {

// Hierarchical prediction that starts at `map_id` instead of the root.
int predict_from(const GhsomTree& tree, int map_id, std::span<const double> sample) {
    for (;;) {
        const MapModel& map = tree.maps.at(map_id);
        const int id = bmu(map, sample).first;
        const Neuron& n = map.neuron(id);
        if (n.child_map_id && tree.maps.count(*n.child_map_id) > 0) {
            map_id = *n.child_map_id;
            continue;
        }
        return static_cast<int>(n.label);
    }
}

struct Pruner {
    const GhsomTree& original;
    const FeatureMatrix& data;
    const LabelVector& labels;
    const std::map<int, std::vector<std::size_t>>& routed;
    double delta;
    std::size_t frozen_total_maps;
    GhsomTree result;
    PruneReport report;

    // Post-order walk; returns the surviving map count of the subtree, or 0
    // when the subtree was removed.
    std::size_t visit(int map_id, int depth) {
        std::vector<int> children;
        for (const auto& n : original.maps.at(map_id).neurons()) {
            if (n.child_map_id) children.push_back(*n.child_map_id);
        }
        std::size_t live = 1;
        for (const int c : children) live += visit(c, depth + 1);

        if (map_id == original.root_id) return live;

        const auto& local = routed.at(map_id);
        if (local.empty()) {
            throw ZeroLocalSamples("subtree received no routed training samples");
        }

        std::size_t subtree_wrong = 0;
        std::size_t benign = 0, malicious = 0;
        for (const std::size_t i : local) {
            if (predict_from(result, map_id, data.row(i)) != labels[i]) ++subtree_wrong;
            if (labels[i] == 1) {
                ++malicious;
            } else {
                ++benign;
            }
        }
        const auto n_local = static_cast<double>(local.size());
        const double e_st = static_cast<double>(subtree_wrong) / n_local;
        const double e_bl = static_cast<double>(std::min(benign, malicious)) / n_local;
        const double alpha =
            complexity_penalty(static_cast<std::size_t>(depth), live, frozen_total_maps,
                               data.n_samples, delta, local.size());

        const bool remove = prune_decision(e_st, alpha, e_bl) == PruneOutcome::Remove;
        report.decisions.push_back({map_id, e_st, e_bl, alpha, remove});
        if (!remove) return live;

        for (const int id : result.subtree(map_id)) {
            report.removed_map_ids.push_back(id);
            result.maps.erase(id);
            result.parent.erase(id);
        }
        const auto& [pm, pn] = original.parent.at(map_id);
        result.maps.at(pm).neuron(pn).child_map_id.reset();
        return 0;
    }
};

} // namespace

std::pair<GhsomTree, PruneReport>
prune_tree(const GhsomTree& tree, const FeatureMatrix& train,
           const LabelVector& labels, const PruneParams& p) {
    p.validate();
    if (train.n_samples != labels.size()) {
        throw LengthMismatch("labels length does not match sample count");
    }
    tree.validate();

    const auto routed = route_samples(tree, train);

    Pruner pruner{tree, train, labels, routed, p.delta, tree.maps.size(), tree, {}};
    pruner.report.maps_before = tree.maps.size();
    pruner.visit(tree.root_id, 0);
    pruner.report.maps_after = pruner.result.maps.size();
    std::sort(pruner.report.removed_map_ids.begin(), pruner.report.removed_map_ids.end());

    pruner.result.validate();
    return {std::move(pruner.result), std::move(pruner.report)};
}

} // namespace xsom
