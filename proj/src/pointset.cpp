#include "ordlab/pointset.hpp"

#include <algorithm>

namespace ordlab {

std::string_view to_string(norm_kind n) {
    switch (n) {
        case norm_kind::l1: return "l1";
        case norm_kind::l2: return "l2";
        case norm_kind::linf: return "linf";
    }
    return "l1";
}

norm_kind norm_from_string(std::string_view s) {
    if (s == "l1") return norm_kind::l1;
    if (s == "l2") return norm_kind::l2;
    if (s == "linf") return norm_kind::linf;
    throw syntax_error("unknown norm \"" + std::string(s) + "\"", 0);
}

void point_set::validate() const {
    if (dim < 1) throw domain_error("point set dimension must be positive");
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != dim)
            throw domain_error("point length does not match the set dimension");
    std::vector<const vec*> seen;
    seen.reserve(points.size());
    for (const auto& p : points) seen.push_back(&p);
    std::sort(seen.begin(), seen.end(),
              [](const vec* a, const vec* b) { return *a < *b; });
    for (std::size_t i = 1; i < seen.size(); ++i)
        if (*seen[i - 1] == *seen[i])
            throw domain_error("point set contains duplicate points");
}

rat dist(const vec& a, const vec& b, norm_kind n) {
    if (a.size() != b.size()) throw domain_error("dimension mismatch");
    rat acc;
    for (std::size_t i = 0; i < a.size(); ++i) {
        rat d = a[i] - b[i];
        switch (n) {
            case norm_kind::l1:
                acc += abs(d);
                break;
            case norm_kind::l2:
                acc += d * d;
                break;
            case norm_kind::linf:
                if (abs(d) > acc) acc = abs(d);
                break;
        }
    }
    return acc;
}

bool within(const vec& a, const vec& b, norm_kind n, const rat& eps) {
    if (n == norm_kind::l2) return dist(a, b, n) < eps * eps;
    return dist(a, b, n) < eps;
}

rat diam(const point_set& s, const std::vector<int>& indices) {
    if (indices.empty()) throw domain_error("diameter of an empty set");
    rat best;
    for (std::size_t i = 0; i < indices.size(); ++i)
        for (std::size_t j = i + 1; j < indices.size(); ++j) {
            rat d = dist(s.points[indices[i]], s.points[indices[j]], s.norm);
            if (d > best) best = d;
        }
    return best;
}

rat diam(const point_set& s) {
    std::vector<int> all(s.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    return diam(s, all);
}

bool diam_below(const point_set& s, const std::vector<int>& indices, const rat& eps) {
    if (s.norm == norm_kind::l2) return diam(s, indices) < eps * eps;
    return diam(s, indices) < eps;
}

vec basis_point(int j, int dim) {
    if (dim < 1 || j < 0 || j >= dim) throw domain_error("basis index out of range");
    vec p(dim, rat(0));
    p[j] = 1;
    return p;
}

point_set subset(const point_set& s, const std::vector<int>& indices) {
    point_set out{s.dim, s.norm, {}};
    out.points.reserve(indices.size());
    for (int i : indices) out.points.push_back(s.points[i]);
    return out;
}

}  // namespace ordlab
