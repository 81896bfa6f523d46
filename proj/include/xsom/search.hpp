#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace xsom {

struct ParamRange {
    std::string name;
    // continuous interval...
    bool continuous = true;
    double lo = 0.0, hi = 1.0;
    bool log_scale = false;
    // ...or a discrete value set
    std::vector<nlohmann::json> values;
};

struct SearchSpace {
    std::vector<ParamRange> params;

    void validate() const;
    static SearchSpace from_json(const nlohmann::json& j);
};

struct Trial {
    std::size_t index = 0;
    nlohmann::json params;
    double objective = 0.0;
    bool failed = false;
    std::string error;
};

struct SearchResult {
    Trial best;       // highest objective, earliest on ties
    std::vector<Trial> trials;
};

using Objective = std::function<double(const nlohmann::json& params)>;

// Uninformed random search: `budget` parameter draws, deterministic per
// seed regardless of objective evaluation order. An objective that throws
// marks its trial failed and still consumes budget.
SearchResult random_search(const SearchSpace& space, std::size_t budget,
                           const Objective& objective, std::uint64_t seed);

} // namespace xsom
