#include "ordlab/scattered.hpp"

namespace ordlab {

namespace {

// Shared rule for the b-th derived set, b >= 1: the survivors of [0, alpha]
// are the multiples of w^b in [1, alpha], a set of order type q where
// alpha = w^b * q + r. As a space that is [0, q-1] for finite q >= 1 and
// [0, q] for infinite q.
derived_space derived_by_division(const ordinal& alpha, const ordinal& b) {
    ordinal q = divide_by_omega_pow(alpha, b).quotient;
    if (q.is_zero()) return std::nullopt;
    if (q.is_finite()) return compact_space{ordinal(q.finite_value() - 1)};
    return compact_space{q};
}

}  // namespace

derived_space cb_derivative(const compact_space& s) {
    return derived_by_division(s.alpha, ordinal(1));
}

derived_space cb_power(const compact_space& s, const ordinal& b) {
    if (b.is_zero()) return s;
    return derived_by_division(s.alpha, b);
}

ordinal cb_height(const compact_space& s) {
    if (s.alpha.is_finite()) return ordinal(1);
    return successor(s.alpha.degree());
}

}  // namespace ordlab
