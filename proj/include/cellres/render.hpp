#pragma once

// SVG pictures of quotient complexes: the fundamental domain with its
// hyperplane traces, vertices labelled by their Laurent monomials, and
// oriented edges with incidence signs. Rank 2 draws the planar domain;
// rank 1 draws the cycle on a circle. Presentation only, no data contract.

#include <string>

#include "cellres/arrangement.hpp"

namespace cellres {

std::string render_svg(const QuotientComplex& qc);
void render_svg_file(const QuotientComplex& qc, const std::string& path);

}  // namespace cellres
