#pragma once

#include <string>

#include "simplexforge/simplex.hpp"

namespace simplexforge {

/// SVG with the sampled body outline (512 boundary points) and the simplex
/// overlaid.  The body must be two-dimensional.
void export_svg(const GaugeBody& body, const Simplex& simplex, const std::string& path);

/// Wavefront OBJ with a sampled boundary mesh (64 x 32 directions) and the
/// simplex faces as a separate object.  The body must be three-dimensional.
void export_obj(const GaugeBody& body, const Simplex& simplex, const std::string& path);

/// Dispatch by format name ("svg" | "obj"); throws ExportError on an
/// unsupported dimension/format pair.
void export_geometry(const GaugeBody& body, const Simplex& simplex,
                     const std::string& format, const std::string& path);

}  // namespace simplexforge
