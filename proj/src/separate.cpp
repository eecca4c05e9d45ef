#include "ordlab/separate.hpp"

#include <utility>

namespace ordlab {

namespace {

// Phase-1 simplex over exact rationals: decides whether Ax = b, x >= 0 is
// feasible. Bland's rule on both the entering and leaving choice, so the
// iteration cannot cycle.
bool lp_feasible(std::vector<std::vector<rat>> a, std::vector<rat> b) {
    const int m = static_cast<int>(a.size());
    const int n = m > 0 ? static_cast<int>(a[0].size()) : 0;
    for (int i = 0; i < m; ++i)
        if (b[i] < 0) {
            for (auto& x : a[i]) x = -x;
            b[i] = -b[i];
        }

    // columns: n structural + m artificial; rows carry rhs at index n + m
    const int cols = n + m;
    std::vector<std::vector<rat>> t(m, std::vector<rat>(cols + 1));
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) t[i][j] = a[i][j];
        t[i][n + i] = 1;
        t[i][cols] = b[i];
        basis[i] = n + i;
    }
    // objective: minimize the artificial sum. With the artificials basic the
    // reduced costs are the negated structural column sums (zero on the
    // artificial columns themselves) and the value is the rhs sum.
    std::vector<rat> obj(cols + 1);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) obj[j] -= t[i][j];
        obj[cols] -= t[i][cols];
    }

    for (;;) {
        int enter = -1;
        for (int j = 0; j < cols; ++j)
            if (obj[j] < 0) {
                enter = j;
                break;
            }
        if (enter < 0) break;

        int leave = -1;
        rat best;
        for (int i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            rat ratio = t[i][cols] / t[i][enter];
            if (leave < 0 || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        // the phase-1 objective is bounded below by zero
        if (leave < 0) throw error("internal: phase-1 simplex reported unbounded");

        rat pivot = t[leave][enter];
        for (auto& x : t[leave]) x /= pivot;
        for (int i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            rat factor = t[i][enter];
            for (int j = 0; j <= cols; ++j) t[i][j] -= factor * t[leave][j];
        }
        if (obj[enter] != 0) {
            rat factor = obj[enter];
            for (int j = 0; j <= cols; ++j) obj[j] -= factor * t[leave][j];
        }
        basis[leave] = enter;
    }
    // feasible iff all artificials were driven to zero
    return obj[cols] == 0;
}

}  // namespace

bool separable(const std::vector<vec>& s, const std::vector<vec>& t_side, int dim) {
    if (s.empty() || t_side.empty()) return true;
    // hulls intersect iff some convex combinations coincide:
    //   sum l_i s_i - sum m_j t_j = 0,  sum l = 1,  sum m = 1,  l, m >= 0
    const int ns = static_cast<int>(s.size());
    const int nt = static_cast<int>(t_side.size());
    std::vector<std::vector<rat>> a(dim + 2, std::vector<rat>(ns + nt));
    std::vector<rat> b(dim + 2);
    for (int j = 0; j < ns; ++j)
        for (int r = 0; r < dim; ++r) a[r][j] = s[j][r];
    for (int j = 0; j < nt; ++j)
        for (int r = 0; r < dim; ++r) a[r][ns + j] = -t_side[j][r];
    for (int j = 0; j < ns; ++j) a[dim][j] = 1;
    for (int j = 0; j < nt; ++j) a[dim + 1][ns + j] = 1;
    b[dim] = 1;
    b[dim + 1] = 1;
    return !lp_feasible(std::move(a), std::move(b));
}

}  // namespace ordlab
