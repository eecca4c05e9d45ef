#include "ordlab/obstacle.hpp"

#include <algorithm>

#include "ordlab/separate.hpp"

namespace ordlab {

namespace {

// Whether some slice of `stage` contains `f_local` and avoids the stage
// points marked in `blocked`. Subsets S of the unblocked points containing f
// are enumerated and checked for exact separability from the rest.
bool exists_avoiding_slice(const point_set& stage, int f_local,
                           const std::vector<char>& blocked) {
    std::vector<int> free_points;
    for (std::size_t i = 0; i < stage.size(); ++i)
        if (!blocked[i] && static_cast<int>(i) != f_local)
            free_points.push_back(static_cast<int>(i));
    if (static_cast<int>(free_points.size()) > k_neighborhood_cap)
        throw capacity_error("obstacle stage exceeds the enumeration cap of " +
                             std::to_string(k_neighborhood_cap) + " points");

    const std::uint32_t masks = 1u << free_points.size();
    std::vector<char> in_s(stage.size(), 0);
    for (std::uint32_t mask = 0; mask < masks; ++mask) {
        std::fill(in_s.begin(), in_s.end(), 0);
        in_s[f_local] = 1;
        for (std::size_t j = 0; j < free_points.size(); ++j)
            if (mask & (1u << j)) in_s[free_points[j]] = 1;
        std::vector<vec> inside, outside;
        for (std::size_t i = 0; i < stage.size(); ++i)
            (in_s[i] ? inside : outside).push_back(stage.points[i]);
        if (separable(inside, outside, stage.dim)) return true;
    }
    return false;
}

}  // namespace

bool check_obstacle(const point_set& k, const std::vector<int>& m_indices,
                    int f_index, const rat& eps, int k_stages) {
    k.validate();
    if (eps <= 0) throw domain_error("eps must be positive");
    if (k_stages < 0) throw domain_error("stage count must be nonnegative");
    if (f_index < 0 || f_index >= static_cast<int>(k.size()))
        throw domain_error("point index is not in the set");
    for (int i : m_indices)
        if (i < 0 || i >= static_cast<int>(k.size()))
            throw domain_error("obstacle index is not in the set");

    if (m_indices.empty()) return false;
    const vec& f = k.points[f_index];
    for (int i : m_indices)
        if (within(f, k.points[i], k.norm, eps)) return false;  // (i) fails

    std::vector<char> in_m(k.size(), 0);
    for (int i : m_indices) in_m[i] = 1;

    derivation_trace trace = derive(k, eps);
    for (int beta = 0; beta < k_stages; ++beta) {
        if (beta >= static_cast<int>(trace.stages.size())) break;  // later stages are empty
        const auto& stage_indices = trace.stages[beta];
        auto pos = std::find(stage_indices.begin(), stage_indices.end(), f_index);
        if (pos == stage_indices.end()) continue;  // no slice of this stage contains f
        int f_local = static_cast<int>(pos - stage_indices.begin());
        std::vector<char> blocked(stage_indices.size(), 0);
        for (std::size_t i = 0; i < stage_indices.size(); ++i)
            blocked[i] = in_m[stage_indices[i]];
        if (exists_avoiding_slice(subset(k, stage_indices), f_local, blocked))
            return false;  // (ii) fails at this stage
    }
    return true;
}

bool check_obstacle(const point_set& m, const vec& f, const point_set& k,
                    const rat& eps, int k_stages) {
    if (m.dim != k.dim || m.norm != k.norm)
        throw domain_error("obstacle set does not match the ambient set");
    auto locate = [&k](const vec& p) {
        auto it = std::find(k.points.begin(), k.points.end(), p);
        if (it == k.points.end())
            throw domain_error("point is not a member of K");
        return static_cast<int>(it - k.points.begin());
    };
    std::vector<int> m_indices;
    m_indices.reserve(m.size());
    for (const auto& p : m.points) m_indices.push_back(locate(p));
    return check_obstacle(k, m_indices, locate(f), eps, k_stages);
}

}  // namespace ordlab
