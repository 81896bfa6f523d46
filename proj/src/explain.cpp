#include "xsom/explain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_map>

namespace xsom {

UMatrix u_matrix(const MapModel& map) {
    UMatrix u;
    u.map_id = map.map_id();
    for (const auto& n : map.neurons()) {
        u.neuron_ids.push_back(n.id);
        u.coords.push_back(n.coord);
        double total = 0.0;
        int count = 0;
        for (const int nid : map.neighbor_ids(n.id)) {
            const auto& w = map.neuron(nid).weights;
            double s = 0.0;
            for (std::size_t f = 0; f < w.size(); ++f) {
                const double d = w[f] - n.weights[f];
                s += d * d;
            }
            total += std::sqrt(s);
            ++count;
        }
        u.heights.push_back(count > 0 ? total / count : 0.0);
    }
    return u;
}

StarburstOverlay starburst(const UMatrix& u) {
    StarburstOverlay s;
    s.map_id = u.map_id;
    s.neuron_ids = u.neuron_ids;
    s.coords = u.coords;
    s.heights = u.heights;

    std::unordered_map<std::int64_t, int> at;
    for (std::size_t i = 0; i < u.coords.size(); ++i) {
        at.emplace(coord_key(u.coords[i]), static_cast<int>(i));
    }

    s.flows_to.resize(u.coords.size());
    for (std::size_t i = 0; i < u.coords.size(); ++i) {
        int best = static_cast<int>(i);
        double best_h = u.heights[i];
        for (const Coord d : kDirections) {
            auto it = at.find(coord_key({u.coords[i].row + d.row, u.coords[i].col + d.col}));
            if (it == at.end()) continue;
            const int j = it->second;
            const bool steeper =
                u.heights[j] < best_h ||
                (u.heights[j] == best_h && best != static_cast<int>(i) &&
                 u.neuron_ids[j] < u.neuron_ids[best]);
            if (steeper) {
                best_h = u.heights[j];
                best = j;
            }
        }
        s.flows_to[i] = best;
    }

    s.cluster.resize(u.coords.size());
    for (std::size_t i = 0; i < u.coords.size(); ++i) {
        int cur = static_cast<int>(i);
        // heights strictly decrease along the pointer chain
        while (s.flows_to[cur] != cur) cur = s.flows_to[cur];
        s.cluster[i] = u.neuron_ids[static_cast<std::size_t>(cur)];
    }
    return s;
}

FeatureGrid feature_heatmap(const MapModel& map, std::size_t feature_index,
                            const std::string& feature_name) {
    if (feature_index >= map.dim()) {
        throw DimensionMismatch("feature index out of range");
    }
    FeatureGrid g;
    g.map_id = map.map_id();
    g.feature = feature_name;
    g.feature_index = feature_index;
    for (const auto& n : map.neurons()) {
        g.neuron_ids.push_back(n.id);
        g.coords.push_back(n.coord);
        g.values.push_back(n.weights[feature_index]);
    }
    return g;
}

LabelGrid label_map(const MapModel& map) {
    LabelGrid g;
    g.map_id = map.map_id();
    for (const auto& n : map.neurons()) {
        g.neuron_ids.push_back(n.id);
        g.coords.push_back(n.coord);
        g.labels.push_back(n.label);
    }
    return g;
}

namespace {

LocalExplanation explain_at(const MapModel& map, int neuron_id,
                            std::span<const double> sample) {
    const auto& w = map.neuron(neuron_id).weights;
    LocalExplanation e;
    e.map_id = map.map_id();
    e.bmu_id = neuron_id;
    e.distances.resize(w.size());
    for (std::size_t f = 0; f < w.size(); ++f) {
        e.distances[f] = std::fabs(sample[f] - w[f]);
    }
    const auto [lo, hi] = std::minmax_element(e.distances.begin(), e.distances.end());
    e.significance.resize(w.size());
    if (*hi == *lo) {
        // every feature is equally close; call them all maximally significant
        std::fill(e.significance.begin(), e.significance.end(), 1.0);
    } else {
        for (std::size_t f = 0; f < w.size(); ++f) {
            e.significance[f] = 1.0 - (e.distances[f] - *lo) / (*hi - *lo);
        }
    }
    return e;
}

} // namespace

LocalExplanation local_explanation(const MapModel& map, std::span<const double> sample) {
    if (sample.size() != map.dim()) {
        throw DimensionMismatch("sample dimension != map dimension");
    }
    const int id = bmu(map, sample).first;
    LocalExplanation e = explain_at(map, id, sample);
    e.predicted = predict_flat(map, sample);
    e.path = {{map.map_id(), id}};
    return e;
}

LocalExplanation local_explanation(const GhsomTree& tree, std::span<const double> sample) {
    const GhsomPrediction pred = predict_ghsom(tree, sample);
    const DescentStep terminal = pred.path.back();
    LocalExplanation e = explain_at(tree.maps.at(terminal.map_id), terminal.neuron_id, sample);
    e.predicted = pred.label;
    e.path = pred.path;
    return e;
}

std::vector<std::pair<std::string, double>>
global_explanation(const SignificanceVector& sig, const std::vector<std::string>& names) {
    if (sig.size() != names.size()) {
        throw LengthMismatch("significance and name lists differ in length");
    }
    std::vector<std::size_t> order(sig.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return sig[a] > sig[b]; });
    std::vector<std::pair<std::string, double>> out;
    out.reserve(sig.size());
    for (const std::size_t i : order) out.emplace_back(names[i], sig[i]);
    return out;
}

namespace {

struct Rect {
    double x, y, w, h;
    double area() const { return w * h; }
    double shorter() const { return std::min(w, h); }
};

// Squarified layout (worst-aspect-ratio greedy). Areas must sum to the
// rectangle's area.
void squarify(const std::vector<double>& areas, const Rect& rect, std::vector<Rect>& out) {
    out.assign(areas.size(), {});
    std::vector<std::size_t> order(areas.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return areas[a] > areas[b]; });

    Rect rest = rect;
    std::size_t pos = 0;
    while (pos < order.size()) {
        const double side = rest.shorter();
        // grow the row while the worst aspect ratio keeps improving
        std::size_t count = 1;
        double row_area = areas[order[pos]];
        double row_min = row_area, row_max = row_area;
        auto worst = [&](double total, double lo, double hi) {
            const double s2 = side * side;
            return std::max(s2 * hi / (total * total), total * total / (s2 * lo));
        };
        double best_worst = worst(row_area, row_min, row_max);
        while (pos + count < order.size()) {
            const double a = areas[order[pos + count]];
            const double cand =
                worst(row_area + a, std::min(row_min, a), std::max(row_max, a));
            if (cand > best_worst) break;
            row_area += a;
            row_min = std::min(row_min, a);
            row_max = std::max(row_max, a);
            best_worst = cand;
            ++count;
        }

        const bool horizontal = rest.w >= rest.h; // row fills the left edge or top edge
        // clamp against fp drift so boxes never escape the rectangle
        const double avail = horizontal ? rest.w : rest.h;
        const double thickness = std::min(side > 0.0 ? row_area / side : 0.0, avail);
        double offset = 0.0;
        for (std::size_t k = 0; k < count; ++k) {
            const double a = areas[order[pos + k]];
            double len = row_area > 0.0 ? a / row_area * side : 0.0;
            if (k + 1 == count) len = std::max(side - offset, 0.0);
            Rect r;
            if (horizontal) {
                r = {rest.x, rest.y + offset, thickness, len};
            } else {
                r = {rest.x + offset, rest.y, len, thickness};
            }
            out[order[pos + k]] = r;
            offset += len;
        }
        if (horizontal) {
            rest.x += thickness;
            rest.w -= thickness;
        } else {
            rest.y += thickness;
            rest.h -= thickness;
        }
        pos += count;
    }
}

void layout_map(const GhsomTree& tree, int map_id, const Rect& rect, int depth,
                TreemapLayout& out) {
    out.boxes.push_back({true, map_id, -1, depth, rect.x, rect.y, rect.w, rect.h, "", 0});

    const MapModel& map = tree.maps.at(map_id);
    std::size_t total_hits = 0;
    for (const auto& n : map.neurons()) total_hits += n.hit_count;

    std::vector<double> fractions(map.size());
    for (std::size_t i = 0; i < map.size(); ++i) {
        fractions[i] = total_hits > 0
                           ? static_cast<double>(map.neurons()[i].hit_count) /
                                 static_cast<double>(total_hits)
                           : 1.0 / static_cast<double>(map.size());
        fractions[i] = std::max(fractions[i], 0.002); // keep empty nodes visible
    }
    const double norm = std::accumulate(fractions.begin(), fractions.end(), 0.0);
    std::vector<double> areas(map.size());
    for (std::size_t i = 0; i < map.size(); ++i) {
        areas[i] = fractions[i] / norm * rect.area();
    }

    std::vector<Rect> cells;
    squarify(areas, rect, cells);

    for (std::size_t i = 0; i < map.size(); ++i) {
        const Neuron& n = map.neurons()[i];
        std::string cls = n.child_map_id                      ? "branch"
                          : n.label == NeuronLabel::Malicious ? "malicious"
                                                              : "benign";
        out.boxes.push_back({false, map_id, n.id, depth, cells[i].x, cells[i].y,
                             cells[i].w, cells[i].h, std::move(cls), n.hit_count});
        if (n.child_map_id && tree.maps.count(*n.child_map_id) > 0) {
            // inset so the branch cell stays visible around its child map
            const double px = cells[i].w * 0.06, py = cells[i].h * 0.06;
            Rect inner{cells[i].x + px, cells[i].y + py, cells[i].w - 2 * px,
                       cells[i].h - 2 * py};
            layout_map(tree, *n.child_map_id, inner, depth + 1, out);
        }
    }
}

} // namespace

TreemapLayout treemap_layout(const GhsomTree& tree, double width, double height) {
    if (!(width > 0.0 && height > 0.0)) throw InvalidParam("treemap size must be positive");
    TreemapLayout out;
    out.width = width;
    out.height = height;
    layout_map(tree, tree.root_id, {0.0, 0.0, width, height}, 0, out);
    return out;
}

} // namespace xsom
