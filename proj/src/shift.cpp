#include "ordlab/shift.hpp"

#include <algorithm>

namespace ordlab {

point_set shift(const point_set& k, int m) {
    if (m < 0) throw domain_error("shift amount must be nonnegative");
    k.validate();

    const int slots = k.dim - 1;  // non-omega coordinates
    const int moved = std::min(m, slots);
    point_set out{k.dim, k.norm, {}};
    out.points.reserve(k.size());
    for (const auto& p : k.points) {
        for (int j = slots - moved; j < slots; ++j)
            if (p[j] != 0)
                throw domain_error("shift would push mass off the truncation");
        vec q(k.dim, rat(0));
        for (int j = 0; j + moved < slots; ++j) q[j + moved] = p[j];
        q[slots] = p[slots];  // omega slot
        out.points.push_back(std::move(q));
    }
    return out;
}

}  // namespace ordlab
