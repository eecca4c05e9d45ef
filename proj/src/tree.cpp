#include "ordlab/tree.hpp"

#include <bit>

namespace ordlab {

dyadic_tree make_dyadic_tree(int depth) {
    if (depth < 1) throw domain_error("tree depth must be at least 1");
    if (depth > 5) throw capacity_error("tree depth is capped at 5");

    const int dim = 1 << depth;
    point_set s{dim, norm_kind::l1, {}};
    for (int node = 1; node < (1 << (depth + 1)); ++node) {
        // node at level d spreads mass 1 over a support block of 2^(depth-d)
        int level = std::bit_width(static_cast<unsigned>(node)) - 1;
        int block = 1 << (depth - level);
        int start = (node - (1 << level)) * block;
        vec p(dim, rat(0));
        rat value(1, block);
        for (int j = 0; j < block; ++j) p[start + j] = value;
        s.points.push_back(std::move(p));
    }
    return dyadic_tree{depth, std::move(s), 0};
}

}  // namespace ordlab
