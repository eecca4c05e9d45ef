#pragma once

#include <string_view>
#include <vector>

#include "ordlab/rat.hpp"

namespace ordlab {

enum class norm_kind { l1, l2, linf };

std::string_view to_string(norm_kind n);
norm_kind norm_from_string(std::string_view s);  // throws syntax_error

using vec = std::vector<rat>;

// A finite set of exact-rational vectors with a norm tag: the finite model
// of a weak*-compact set. Points are pairwise distinct, all of length dim.
struct point_set {
    int dim = 1;
    norm_kind norm = norm_kind::l1;
    std::vector<vec> points;

    std::size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }
    // Checks the invariants above; throws domain_error.
    void validate() const;

    friend bool operator==(const point_set&, const point_set&) = default;
};

// Exact distance. For l2 the *squared* distance is returned; every l2
// comparison in the engine squares the other side instead of taking roots.
rat dist(const vec& a, const vec& b, norm_kind n);

// dist(a, b) < eps, with the l2 squaring handled internally.
bool within(const vec& a, const vec& b, norm_kind n, const rat& eps);

// Max pairwise distance over the points at `indices` (l2: squared).
// Throws domain_error for an empty selection.
rat diam(const point_set& s, const std::vector<int>& indices);
rat diam(const point_set& s);

// diam over `indices` < eps, l2 squaring handled internally.
bool diam_below(const point_set& s, const std::vector<int>& indices, const rat& eps);

// The unit basis vector e_j; throws domain_error when j is out of range.
vec basis_point(int j, int dim);

// The sub-point-set selected by `indices` (kept in the given order).
point_set subset(const point_set& s, const std::vector<int>& indices);

}  // namespace ordlab
