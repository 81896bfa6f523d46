#include "xsom/som.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "xsom/rng.hpp"

namespace xsom {

void SomParams::validate() const {
    if (n < 2 || m < 2) throw InvalidParam("SOM grid must be at least 2x2");
    if (epochs < 1) throw InvalidParam("epochs must be >= 1");
    if (!(learning_rate > 0.0 && learning_rate < 1.0)) {
        throw InvalidParam("learning_rate must be in (0,1)");
    }
}

double som_radius(int t, int epochs, int n, int m) {
    const double r0 = std::max(n, m) / 2.0;
    if (epochs <= 1) return r0;
    const double frac = static_cast<double>(t) / static_cast<double>(epochs - 1);
    return r0 + (1.0 - r0) * frac;
}

double som_learning_rate(int t, int epochs, double lr, double lattice_dist, double radius) {
    const double decay = 1.0 - static_cast<double>(t) / static_cast<double>(epochs);
    return lr * decay * std::exp(-(lattice_dist * lattice_dist) / (2.0 * radius * radius));
}

SomResult train_som(const FeatureMatrix& data, const SomParams& p) {
    p.validate();
    if (data.n_samples == 0) throw EmptyData("train_som on empty data");
    const auto t0 = std::chrono::steady_clock::now();

    Rng rng(p.seed);
    MapModel map(0, data.n_features, p.seed);
    for (int r = 0; r < p.n; ++r) {
        for (int c = 0; c < p.m; ++c) {
            std::vector<double> w(data.n_features);
            for (double& x : w) x = rng.next_double();
            map.add_neuron({r, c}, std::move(w));
        }
    }

    for (int t = 0; t < p.epochs; ++t) {
        const auto s = static_cast<std::size_t>(rng.next_below(data.n_samples));
        const auto sample = data.row(s);
        const int best = bmu(map, sample).first;
        const Coord bc = map.neuron(best).coord;
        const double radius = som_radius(t, p.epochs, p.n, p.m);
        // contributions beyond 3 radii are below e^-4.5, skip them
        const int reach = static_cast<int>(std::ceil(3.0 * radius));
        const int r_lo = std::max(0, bc.row - reach), r_hi = std::min(p.n - 1, bc.row + reach);
        const int c_lo = std::max(0, bc.col - reach), c_hi = std::min(p.m - 1, bc.col + reach);
        for (int r = r_lo; r <= r_hi; ++r) {
            for (int c = c_lo; c <= c_hi; ++c) {
                const double d = std::max(std::abs(r - bc.row), std::abs(c - bc.col));
                if (d > reach) continue;
                const double rate = som_learning_rate(t, p.epochs, p.learning_rate, d, radius);
                auto& w = map.neuron(map.at({r, c})).weights;
                for (std::size_t f = 0; f < w.size(); ++f) {
                    w[f] -= rate * (w[f] - sample[f]);
                }
            }
        }
    }

    SomResult res;
    res.map = std::move(map);
    res.train_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

} // namespace xsom
