#pragma once

#include <string>

#include "altsurf/config.hpp"
#include "altsurf/diagram.hpp"

namespace altsurf {

struct RenderOptions {
  double size = 600.0;
  bool labels = true;
};

/// SVG drawing of the diagram with crossings on a circle: one bubble per
/// crossing, one `<path class="edge">` per edge with a gap where it runs
/// under. When cfg is given its curves are overlaid, dashed on the upper
/// sphere and dotted on the lower sphere.
std::string render_svg(const Diagram& d, const Configuration* cfg = nullptr, const RenderOptions& options = {});

}  // namespace altsurf
