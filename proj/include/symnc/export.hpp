#pragma once

#include <string>
#include <string_view>

#include "symnc/plabic.hpp"

namespace symnc {

enum class ExportFormat { Dot, Json, Svg, Tikz };

/// "dot", "json", "svg" or "tikz"; anything else throws UnsupportedFormat.
ExportFormat parse_export_format(std::string_view name);
std::string_view to_string(ExportFormat format);

/// Undirected 1-skeleton (DOT), full data (JSON) or a drawing with shaded
/// black faces (SVG, TikZ). Frozen vertices are drawn as boxes.
std::string export_complex(const EmbeddedComplex& complex, ExportFormat format);

/// Directed quiver. JSON also carries the potential as signed arrow cycles.
std::string export_quiver(const QuiverWithPotential& qp, ExportFormat format);

}  // namespace symnc
