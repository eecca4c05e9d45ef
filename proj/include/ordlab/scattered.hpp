#pragma once

#include <optional>

#include "ordlab/ordinal.hpp"

namespace ordlab {

// The compact ordinal interval [0, alpha] (order type alpha + 1), the
// carrier of Cantor-Bendixson calculus. Derived sets are reported by
// homeomorphism type: another interval, or empty. Every countable compact
// Hausdorff space is homeomorphic to such an interval, so nothing is lost.
struct compact_space {
    ordinal alpha;

    friend bool operator==(const compact_space&, const compact_space&) = default;
};

// std::nullopt is the empty derived set; [0, alpha] itself is never empty.
using derived_space = std::optional<compact_space>;

// One Cantor-Bendixson derivative: the set of limit points of [0, alpha].
// With alpha = w*q + k: empty if q = 0, [0, q-1] if q is finite >= 1,
// and [0, q] if q >= w.
derived_space cb_derivative(const compact_space& s);

// Transfinite iterate of the derivative, in closed form through left
// division by w^b. Agrees with b-fold iteration for finite b.
derived_space cb_power(const compact_space& s, const ordinal& b);

// Cantor-Bendixson height: the least eta with cb_power(s, eta) empty.
// Equals degree(alpha) + 1 for alpha >= 1, and 1 for alpha = 0.
ordinal cb_height(const compact_space& s);

}  // namespace ordlab
