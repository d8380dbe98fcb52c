#ifndef TILTCELL_SVG_HPP
#define TILTCELL_SVG_HPP

#include <string>
#include <vector>

#include "tiltcell/affine.hpp"

namespace tiltcell {

// Alcove picture for a rank-2 group: one polygon per element of the ball in
// the lambda+rho plane, fill keyed by the class index, with a legend.
// class_of[i] picks the color class of alcoves[i]; class_names labels them.
std::string svg_alcoves(const AffineGroup& g, const std::vector<WfRep>& alcoves,
                        const std::vector<int>& class_of,
                        const std::vector<std::string>& class_names);

}  // namespace tiltcell

#endif
