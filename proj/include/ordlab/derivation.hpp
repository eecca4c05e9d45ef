#pragma once

#include <optional>

#include "ordlab/pointset.hpp"

namespace ordlab {

// Subset enumeration inside one removability test is restricted to the open
// eps-ball around the candidate point; sets with more than this many points
// in a single such neighborhood are rejected as over desk scale.
inline constexpr int k_neighborhood_cap = 20;

// Whether some slice of K (K intersected with an open halfspace) contains
// point `index` and has norm diameter < eps. Any such slice lies inside the
// open eps-ball around the point, so only subsets of that neighborhood are
// enumerated; each candidate subset is checked by exact separation from the
// rest of K.
bool removable(const point_set& k, int index, const rat& eps);

// One slice derivation step: K minus all removable points, every test run
// against the input set (simultaneous removal).
point_set d_step(const point_set& k, const rat& eps);

// One weak*-open derivation step. A finite set is discrete in the relative
// topology, so every singleton is a relatively open set of diameter 0 and
// the result is always empty.
point_set s_step(const point_set& k, const rat& eps);

// Iterated d_step run. Stages are index sets into the input (stage 0 is the
// whole input), ending with the empty stage unless a nonempty fixed point is
// reached first. rank[p] = k iff p is in stage k but not stage k+1; points
// of a nonempty fixed point have no finite rank (nullopt, "stable").
struct derivation_trace {
    rat epsilon;
    std::vector<std::vector<int>> stages;
    std::vector<std::optional<int>> ranks;
    bool stabilized = false;

    friend bool operator==(const derivation_trace&, const derivation_trace&) = default;
};

derivation_trace derive(const point_set& k, const rat& eps);

}  // namespace ordlab
