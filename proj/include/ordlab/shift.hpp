#pragma once

#include "ordlab/pointset.hpp"

namespace ordlab {

// The truncated shift: coordinates model l1({0..dim-2} with a final omega
// slot that never moves. Each point's first dim-1-m coordinates move up by
// m, the freed slots are zeroed, and the omega slot is copied. Points must
// vanish on the top m non-omega coordinates, otherwise mass would be pushed
// off the truncation and the map would not be an isometry; such inputs are
// rejected.
point_set shift(const point_set& k, int m);

}  // namespace ordlab
