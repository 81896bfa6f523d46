#include "xsom/search.hpp"

#include <cmath>

#include "xsom/errors.hpp"
#include "xsom/rng.hpp"

namespace xsom {

void SearchSpace::validate() const {
    if (params.empty()) throw InvalidParam("search space is empty");
    for (const auto& p : params) {
        if (p.continuous) {
            if (!(p.lo < p.hi)) throw InvalidParam("empty range for '" + p.name + "'");
            if (p.log_scale && !(p.lo > 0.0)) {
                throw InvalidParam("log-scale range for '" + p.name + "' must be positive");
            }
        } else if (p.values.empty()) {
            throw InvalidParam("empty value set for '" + p.name + "'");
        }
    }
}

SearchSpace SearchSpace::from_json(const nlohmann::json& j) {
    SearchSpace space;
    for (const auto& [name, spec] : j.items()) {
        ParamRange r;
        r.name = name;
        if (spec.contains("values")) {
            r.continuous = false;
            for (const auto& v : spec["values"]) r.values.push_back(v);
        } else {
            r.continuous = true;
            r.lo = spec.at("min").get<double>();
            r.hi = spec.at("max").get<double>();
            r.log_scale = spec.value("scale", "linear") == std::string("log");
        }
        space.params.push_back(std::move(r));
    }
    space.validate();
    return space;
}

namespace {

nlohmann::json sample_params(const SearchSpace& space, Rng& rng) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& p : space.params) {
        if (p.continuous) {
            if (p.log_scale) {
                out[p.name] = std::exp(rng.uniform(std::log(p.lo), std::log(p.hi)));
            } else {
                out[p.name] = rng.uniform(p.lo, p.hi);
            }
        } else {
            out[p.name] = p.values[static_cast<std::size_t>(rng.next_below(p.values.size()))];
        }
    }
    return out;
}

} // namespace

SearchResult random_search(const SearchSpace& space, std::size_t budget,
                           const Objective& objective, std::uint64_t seed) {
    space.validate();
    if (budget < 1) throw InvalidParam("budget must be >= 1");

    SearchResult res;
    res.trials.reserve(budget);
    // the parameter sequence depends only on (space, seed)
    for (std::size_t i = 0; i < budget; ++i) {
        Rng rng(combine_seed(seed, i));
        Trial t;
        t.index = i;
        t.params = sample_params(space, rng);
        res.trials.push_back(std::move(t));
    }

    bool have_best = false;
    for (auto& t : res.trials) {
        try {
            t.objective = objective(t.params);
        } catch (const std::exception& e) {
            t.failed = true;
            t.error = e.what();
            continue;
        }
        if (!have_best || t.objective > res.best.objective) {
            res.best = t;
            have_best = true;
        }
    }
    if (!have_best) {
        throw DataError("every trial failed; no best parameters");
    }
    return res;
}

} // namespace xsom
