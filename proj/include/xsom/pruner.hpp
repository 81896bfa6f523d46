#pragma once

#include <cstddef>
#include <vector>

#include "xsom/ghsom.hpp"
#include "xsom/types.hpp"

namespace xsom {

struct PruneParams {
    double delta = 0.3; // confidence parameter in (0,1)

    void validate() const;
};

enum class PruneOutcome { Keep, Remove };

struct PruneDecisionLog {
    int map_id = 0;
    double subtree_error = 0.0;   // e_st
    double best_leaf_error = 0.0; // e_bl
    double alpha = 0.0;
    bool removed = false;
};

struct PruneReport {
    std::size_t maps_before = 0;
    std::size_t maps_after = 0;
    std::vector<int> removed_map_ids;
    std::vector<PruneDecisionLog> decisions;
};

// alpha = sqrt(((l+s)*ln(n) + ln(m/delta)) / m_local), natural logs.
double complexity_penalty(std::size_t depth, std::size_t subtree_maps,
                          std::size_t total_maps, std::size_t total_samples,
                          double delta, std::size_t local_samples);

// Remove iff e_st + alpha >= e_bl.
PruneOutcome prune_decision(double subtree_error, double alpha, double best_leaf_error);

// One bottom-up pass. At each non-root map the subtree's hierarchical
// prediction error over its local samples is compared against a
// majority-label constant classifier plus the complexity penalty; losing
// subtrees are deleted and the parent neuron's child link cleared. The
// total map count and sample count in alpha stay frozen at their
// pre-pruning values; subtree counts are live.
std::pair<GhsomTree, PruneReport>
prune_tree(const GhsomTree& tree, const FeatureMatrix& train,
           const LabelVector& labels, const PruneParams& p);

} // namespace xsom
