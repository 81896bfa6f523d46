#pragma once

#include <string>

#include <json.hpp>

namespace xsom {

struct RenderStyle {
    int version = 1;
    double cell_px = 28.0;
    // hexagonal cells (offset rows) for grown maps, squares otherwise
    bool hex_cells = false;
};

// Renders a serialized explanation artifact ({kind, version, map_id,
// payload}) to a standalone SVG 1.1 document. Output bytes are a pure
// function of the artifact and style.
std::string render_svg(const nlohmann::json& artifact, const RenderStyle& style);

} // namespace xsom
