#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nakarig/gen_cogen.hpp"
#include "nakarig/resolution.hpp"

namespace nakarig {

/// Region {(y, w) : x <= y <= x + t, x + t - y <= w <= x + top - y} of the
/// extended quiver scanned by one step of the approximation procedure.
struct SelectionRect {
    std::int64_t x = 0;
    int t = 0;
    int top = 0;

    friend bool operator==(const SelectionRect&, const SelectionRect&) = default;
};

/// Rectangles visited while approximating v, recovered from the picks.
std::vector<SelectionRect> selection_rectangles(const Vertex& v, const ApproxResult& approx);

struct RenderOverlay {
    Vertex source;
    ApproxResult approx;
};

/// Fundamental domain of the stable quiver, one text row per layer from m-1
/// down to 1 and one column per x in [0, n). '#' marks members.
std::string render_ascii(const GenCogenSet& M);

/// Extended quiver (layers 0..m) as SVG, members filled; overlays add the
/// selection rectangles, approximation picks and syzygy summands.
std::string render_svg(const GenCogenSet& M, std::span<const RenderOverlay> overlays = {});

} // namespace nakarig
