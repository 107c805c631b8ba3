#pragma once

#include <string>

#include <json.hpp>

#include "gasing/construction.h"

namespace gasing {

struct SvgOptions {
  double width = 480.0;  // pixels for the longer side of the figure
};

/// Laid-out figure as JSON: points with coordinates, segments with length
/// text and laid-out length, chains, and right angles (every triangle's right
/// vertex plus explicit marks). Throws LayoutError when the figure cannot be
/// placed.
nlohmann::ordered_json construction_document(const Construction& c,
                                             const Assignment& at);

/// One element per point, segment and label. Each segment carries its
/// expression text and laid-out length as data attributes; coordinates are
/// rounded to 4 decimals.
std::string render_svg(const nlohmann::ordered_json& document,
                       const SvgOptions& options = {});
std::string render_svg(const Construction& c, const Assignment& at,
                       const SvgOptions& options = {});

}  // namespace gasing
