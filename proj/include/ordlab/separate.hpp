#pragma once

#include "ordlab/pointset.hpp"

namespace ordlab {

// Whether some functional f and threshold t put every point of `s` strictly
// above t and every point of `t_side` at or below t. For finite sets this
// holds exactly when conv(s) and conv(t_side) are disjoint, which is decided
// by exact rational LP feasibility. Empty sides are trivially separable.
bool separable(const std::vector<vec>& s, const std::vector<vec>& t_side, int dim);

}  // namespace ordlab
