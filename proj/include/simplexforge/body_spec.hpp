#pragma once

#include <optional>
#include <string>

#include "simplexforge/layered.hpp"
#include "simplexforge/smoothed.hpp"

namespace simplexforge {

/// A parsed body: always usable through the gauge view; the layered form is
/// present for tower specs, the smoothed form for smoothed:... specs.
struct ParsedBody {
    GaugeBody gauge;
    std::optional<LayeredBody> layered;
    std::optional<SmoothedBody> smoothed;
    std::string spec;
};

/// Grammar:
///   spec := "seg"
///         | "lp:" <p> ":" <n>          p in [1, inf], "inf" accepted
///         | "cone:" spec
///         | "prism:" spec
///         | "profile:" <file.json> ":" spec
///         | "smoothed:" spec ":" <eps>
/// Parse errors carry the offending position (SpecParseError).
ParsedBody parse_body_spec(const std::string& spec);

}  // namespace simplexforge
