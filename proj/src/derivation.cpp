#include "ordlab/derivation.hpp"

#include <algorithm>
#include <numeric>

#include "ordlab/separate.hpp"

namespace ordlab {

namespace {

// Depth-first enumeration of the subsets S of the neighborhood that contain
// the candidate point and have diameter < eps, testing each for exact
// separability from the rest of K. Extending only by points within eps of
// every chosen point keeps the diameter constraint satisfied throughout.
struct slice_search {
    const point_set& k;
    const rat& eps;
    std::vector<int> others;          // neighborhood minus the candidate
    std::vector<int> chosen;          // current S, candidate first
    std::vector<char> in_chosen;      // by index into k

    bool run(int from) {
        if (test_current()) return true;
        for (std::size_t i = from; i < others.size(); ++i) {
            int cand = others[i];
            bool fits = true;
            for (int c : chosen)
                if (!within(k.points[cand], k.points[c], k.norm, eps)) {
                    fits = false;
                    break;
                }
            if (!fits) continue;
            chosen.push_back(cand);
            in_chosen[cand] = 1;
            bool found = run(static_cast<int>(i) + 1);
            in_chosen[cand] = 0;
            chosen.pop_back();
            if (found) return true;
        }
        return false;
    }

    bool test_current() {
        std::vector<vec> inside, outside;
        inside.reserve(chosen.size());
        for (int i : chosen) inside.push_back(k.points[i]);
        for (std::size_t i = 0; i < k.size(); ++i)
            if (!in_chosen[i]) outside.push_back(k.points[i]);
        return separable(inside, outside, k.dim);
    }
};

}  // namespace

bool removable(const point_set& k, int index, const rat& eps) {
    if (index < 0 || index >= static_cast<int>(k.size()))
        throw domain_error("point index is not in the set");
    if (eps <= 0) throw domain_error("eps must be positive");

    const vec& x = k.points[index];
    std::vector<int> neighborhood;
    for (std::size_t i = 0; i < k.size(); ++i)
        if (within(k.points[i], x, k.norm, eps))
            neighborhood.push_back(static_cast<int>(i));
    if (static_cast<int>(neighborhood.size()) > k_neighborhood_cap)
        throw capacity_error("eps-neighborhood exceeds the enumeration cap of " +
                             std::to_string(k_neighborhood_cap) + " points");

    slice_search search{k, eps, {}, {index}, std::vector<char>(k.size(), 0)};
    search.in_chosen[index] = 1;
    for (int i : neighborhood)
        if (i != index) search.others.push_back(i);
    return search.run(0);
}

point_set d_step(const point_set& k, const rat& eps) {
    std::vector<int> survivors;
    for (std::size_t i = 0; i < k.size(); ++i)
        if (!removable(k, static_cast<int>(i), eps)) survivors.push_back(static_cast<int>(i));
    return subset(k, survivors);
}

point_set s_step(const point_set& k, const rat& eps) {
    if (eps <= 0) throw domain_error("eps must be positive");
    return point_set{k.dim, k.norm, {}};
}

derivation_trace derive(const point_set& k, const rat& eps) {
    k.validate();
    if (eps <= 0) throw domain_error("eps must be positive");

    derivation_trace trace;
    trace.epsilon = eps;
    std::vector<int> current(k.size());
    std::iota(current.begin(), current.end(), 0);
    trace.stages.push_back(current);

    while (!current.empty()) {
        point_set stage = subset(k, current);
        std::vector<int> next;
        for (std::size_t i = 0; i < current.size(); ++i)
            if (!removable(stage, static_cast<int>(i), eps)) next.push_back(current[i]);
        if (next == current) {
            trace.stabilized = true;
            break;
        }
        trace.stages.push_back(next);
        current = next;
    }

    trace.ranks.assign(k.size(), std::nullopt);
    for (std::size_t s = 0; s < trace.stages.size(); ++s)
        for (int i : trace.stages[s]) trace.ranks[i] = static_cast<int>(s);
    if (trace.stabilized)
        for (int i : trace.stages.back()) trace.ranks[i] = std::nullopt;
    return trace;
}

}  // namespace ordlab
