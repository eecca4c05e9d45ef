#pragma once

#include "ordlab/pointset.hpp"

namespace ordlab {

// A dyadic tree of the given depth n on the positive face of the l1 ball in
// dimension 2^n: the 2^(n+1)-1 nodes are stored in heap order (node i,
// 1-based, at points[i-1]; children of node i are nodes 2i and 2i+1). Every
// node is exactly the midpoint of its children, siblings have disjoint
// supports and l1 distance 2, and each node has nonnegative coordinates
// summing to 1. The root is (1/2^n, ..., 1/2^n).
struct dyadic_tree {
    int depth = 1;
    point_set set;
    int root_index = 0;  // position of the root in set.points
};

// depth must be >= 1; depths beyond 5 are over desk scale.
dyadic_tree make_dyadic_tree(int depth);

}  // namespace ordlab
