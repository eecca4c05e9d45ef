#include "ordlab/index.hpp"

#include <algorithm>
#include <utility>

#include "ordlab/scattered.hpp"

namespace ordlab {

namespace {

const ordinal k_one(1);

// w^(1+a+1), the dentability closed form.
ordinal dent_form(const ordinal& a) {
    return omega_pow(add(add(k_one, a), k_one));
}

// The unique a with w^a < eta <= w^(a+1); nullopt for eta = 1.
std::optional<ordinal> height_class(const ordinal& eta) {
    if (eta.is_zero()) throw domain_error("height must be >= 1");
    if (eta == k_one) return std::nullopt;
    ordinal d = eta.degree();
    if (eta > omega_pow(d)) return d;
    // eta is exactly w^d; the class is the predecessor of d when one exists
    if (is_limit(d))
        throw domain_error("no class solves w^a < eta <= w^(a+1) for this height");
    return predecessor(d);
}

ordinal szlenk_from_height(const ordinal& eta) {
    auto a = height_class(eta);
    if (!a) return k_one;
    return omega_pow(successor(*a));
}

}  // namespace

ordinal iso_class(const ordinal& alpha) {
    if (alpha.is_finite())
        throw domain_error("the isomorphism classification requires alpha >= w");
    const ordinal& e = alpha.degree();
    if (e.is_finite()) return {};
    return e.degree();
}

bool iso_equivalent(const ordinal& a, const ordinal& b) {
    if (a.is_finite() || b.is_finite())
        throw domain_error("the isomorphism classification requires alpha >= w");
    const ordinal& lo = std::min(a, b);
    const ordinal& hi = std::max(a, b);
    return hi < pow_omega(lo);
}

ordinal szlenk_c(const ordinal& alpha) {
    if (alpha.is_finite()) return k_one;
    return omega_pow(successor(iso_class(alpha)));
}

ordinal dentability_c(const ordinal& alpha) {
    if (alpha.is_finite()) return ordinal::omega();
    return dent_form(iso_class(alpha));
}

ordinal dentability_from_height(const ordinal& eta) {
    auto a = height_class(eta);
    if (!a) return ordinal::omega();
    return dent_form(*a);
}

ordinal szlenk_l2_c(const ordinal& alpha) {
    return dent_form(iso_class(alpha));
}

bool index_report::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const index_check& c) { return c.pass; });
}

index_report full_report(const space_descriptor& d) {
    index_report r;
    r.descriptor = d;
    auto check = [&r](std::string name, bool pass) {
        r.checks.push_back(index_check{std::move(name), pass});
    };
    // The psi(w) = w^2 data point holds independently of the descriptor.
    const bool psi_ok = dentability_c(ordinal::omega()) == omega_pow(ordinal(2));

    switch (d.kind) {
        case space_kind::c_interval: {
            const ordinal& alpha = d.parameter;
            const bool infinite = !alpha.is_finite();
            if (infinite) r.iso_gamma = iso_class(alpha);
            r.szlenk = szlenk_c(alpha);
            r.dentability = dentability_c(alpha);
            r.cb_height = cb_height(compact_space{alpha});
            check("dz_ge_sz", *r.dentability >= r.szlenk);
            check("raja_bound", *r.dentability <= omega_pow(r.szlenk));
            check("dz_omega_power", r.dentability->terms().size() == 1 &&
                                        r.dentability->leading_coefficient() == 1);
            check("psi_omega_squared", psi_ok);
            check("height_consistency",
                  dentability_from_height(*r.cb_height) == *r.dentability);
            if (infinite && !r.iso_gamma->is_finite())
                check("absorption_collapse", *r.dentability == r.szlenk);
            break;
        }
        case space_kind::c_of_compact_height: {
            const ordinal& eta = d.parameter;
            r.szlenk = szlenk_from_height(eta);
            r.dentability = dentability_from_height(eta);
            r.cb_height = eta;
            check("dz_ge_sz", *r.dentability >= r.szlenk);
            check("raja_bound", *r.dentability <= omega_pow(r.szlenk));
            check("dz_omega_power", r.dentability->terms().size() == 1 &&
                                        r.dentability->leading_coefficient() == 1);
            check("psi_omega_squared", psi_ok);
            // the canonical interval of the same class must agree
            auto a = height_class(eta);
            ordinal canonical = a ? omega_pow(omega_pow(*a)) : ordinal();
            check("height_consistency", dentability_c(canonical) == *r.dentability);
            break;
        }
        case space_kind::l2_of_c_interval: {
            const ordinal& alpha = d.parameter;
            r.szlenk = szlenk_l2_c(alpha);
            check("sz_power_form",
                  r.szlenk.terms().size() == 1 && r.szlenk.leading_coefficient() == 1);
            check("psi_omega_squared", psi_ok);
            // Dz(X) <= Sz(L2(X))
            check("l2_dominates_dz", dentability_c(alpha) <= r.szlenk);
            break;
        }
    }
    return r;
}

}  // namespace ordlab
