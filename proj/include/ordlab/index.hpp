#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ordlab/ordinal.hpp"

namespace ordlab {

// The spaces whose ordinal invariants this module evaluates in closed form:
// C([0,alpha]), C(K) for a scattered compact K known only through its
// Cantor-Bendixson height, and the Bochner space L2([0,1], C([0,alpha])).
enum class space_kind { c_interval, c_of_compact_height, l2_of_c_interval };

struct space_descriptor {
    space_kind kind = space_kind::c_interval;
    ordinal parameter;  // alpha for the C/L2 kinds, eta >= 1 for the height kind

    friend bool operator==(const space_descriptor&, const space_descriptor&) = default;
};

// The Bessaga-Pelczynski class of C([0,alpha]) for alpha >= w: the unique
// gamma with w^(w^gamma) <= alpha < w^(w^(gamma+1)). Rejects finite alpha.
ordinal iso_class(const ordinal& alpha);

// Whether C([0,a]) and C([0,b]) are isomorphic (a, b >= w): after ordering
// the pair, max < min^w.
bool iso_equivalent(const ordinal& a, const ordinal& b);

// Szlenk index of C([0,alpha]): w^(gamma+1) for alpha >= w; 1 for finite
// alpha (finite-dimensional convention, see README).
ordinal szlenk_c(const ordinal& alpha);

// Weak*-dentability index of C([0,alpha]): w^(1+gamma+1) for alpha >= w;
// w for finite alpha (superreflexive convention).
ordinal dentability_c(const ordinal& alpha);

// Dentability of C(K) for a scattered compact K of height eta >= 1:
// w^(1+a+1) where w^a < eta <= w^(a+1); w for eta = 1. Heights w^d with d a
// limit ordinal solve no such inequality (and are not heights of compact
// spaces); they are rejected.
ordinal dentability_from_height(const ordinal& eta);

// Szlenk index of L2(C([0,alpha])): w^(1+gamma+1). Rejects finite alpha.
ordinal szlenk_l2_c(const ordinal& alpha);

struct index_check {
    std::string name;
    bool pass = false;

    friend bool operator==(const index_check&, const index_check&) = default;
};

// Computed invariants of a described space plus cross-consistency checks.
// Absent optionals mean "not applicable": the iso class for spaces outside
// the classification's range, the CB height for non-C(K) spaces, and the
// dentability of L2 spaces (only its Szlenk index has a closed form here).
struct index_report {
    space_descriptor descriptor;
    std::optional<ordinal> iso_gamma;
    ordinal szlenk;
    std::optional<ordinal> dentability;
    std::optional<ordinal> cb_height;
    std::vector<index_check> checks;

    bool all_pass() const;
};

index_report full_report(const space_descriptor& d);

}  // namespace ordlab
