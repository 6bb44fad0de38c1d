#pragma once

#include <string>

#include "c2eff/homotopy.hpp"

namespace c2eff {

// One coweight line rendered with stems horizontal and slice filtration
// vertical: dots for order-2 groups, squares for free 2-adic ones, solid
// lines for rho (horizontal) and h1 (diagonal) multiplications, arrows where
// a tower leaves the window, dashed colored lines for the hidden rho / eta /
// omega extensions, and torsion-order labels on the negative-cone dots of the
// coweight 0 mod 4 lines.
struct ChartSpec {
    int coweight = 0;
    std::string page = "e2";     // e1, e2, homotopy
    std::string format = "svg";  // svg, text
};

// Self-contained SVG or a fixed-width text grid; both end with a legend
// block.  An empty line yields a legend-only document with an empty-chart
// notice.  Throws std::runtime_error on an uncertified window or an unknown
// page/format.
std::string emit_chart(E2Engine& engine, const ChartSpec& spec, const Window& window);

// Number of tau^4 multiplications that kill the class on the infinity page
// (the tau^-4 torsion order); 0 when the class is never killed within the
// iteration bound.
int tau4_torsion_order(E2Engine& engine, const TriDegree& t, const E1Element& rep);

}  // namespace c2eff
