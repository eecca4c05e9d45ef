#pragma once

#include "ordlab/derivation.hpp"

namespace ordlab {

// Finite-stage obstacle test for the survival of point `f_index` in the
// slice derivation of K: true iff
//   (i)  dist(f, M) >= eps, and
//   (ii) for every stage b < k_stages of derive(K, eps), every slice of the
//        stage containing f (of any diameter) meets M.
// An empty M fails condition (i) by convention: a vacuous witness family
// certifies nothing. When the test returns true the point is guaranteed to
// reach rank >= k_stages.
bool check_obstacle(const point_set& k, const std::vector<int>& m_indices,
                    int f_index, const rat& eps, int k_stages);

// Same test with the obstacle set and point given by value; both must
// consist of points of K.
bool check_obstacle(const point_set& m, const vec& f, const point_set& k,
                    const rat& eps, int k_stages);

}  // namespace ordlab
